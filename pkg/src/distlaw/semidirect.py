from dataclasses import dataclass, field

from fincat import FinCatX, IdOnObjFunctor
from logtools import get_logger
from spans import span_product

from .distlaw import ActionMorphism, ActionSystem, SplitEpiPair

logger = get_logger(__name__)


@dataclass(frozen=True)
class SemidirectProduct:
    """The split epimorphism Y□B ⇄ B built from an action, with its coordinates.

    Attributes:
        action: The action it was built from.
        pair: The split pair (i, s) with i(b) = (1, b) and s(y, b) = b.
        embedding: The fiber embedding y ↦ (y, 1).
        coordinates: The (y, b) components of each morphism of the total category.
    """

    action: ActionSystem
    pair: SplitEpiPair
    embedding: IdOnObjFunctor
    coordinates: tuple[tuple[int, int], ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.coordinates)})

    @property
    def total(self) -> FinCatX:
        return self.pair.total

    def element(self, y: int, b: int) -> int:
        """The morphism with coordinates (y, b)."""
        return self._index[(y, b)]


def semidirect_product(act: ActionSystem) -> SemidirectProduct:
    """Builds the semidirect product category Y□B of an action.

    Morphisms are the composable pairs (y, b) of the span product Y⊗B, with
    src(y, b) = src(b), tgt(y, b) = tgt(b), identities (1, 1) and composition
    (y, b)·(y', b') = (y·(b▷y'), b·b').

    Args:
        act: A valid action of B on the bundle Y.

    Returns:
        SemidirectProduct: The split pair, the fiber embedding and coordinates.
    """
    B, Y = act.base, act.fiber
    carrier = span_product(Y.span(), B.span())
    coordinates = carrier.provenance
    index = {c: i for i, c in enumerate(coordinates)}

    def compose(u: int, v: int) -> int:
        (y, b), (y2, b2) = coordinates[u], coordinates[v]
        return index[(Y.table[y][act.act(b, y2)], B.table[b][b2])]

    total = FinCatX.from_function(
        B.objects,
        names=[f"({Y.names[y]},{B.names[b]})" for y, b in coordinates],
        src=[B.src[b] for _, b in coordinates],
        tgt=[B.tgt[b] for _, b in coordinates],
        identities=[index[(Y.identities[x], B.identities[x])] for x in range(B.objects.size)],
        compose=compose,
    )
    i = IdOnObjFunctor(B, total, tuple(index[(Y.identities[B.tgt[b]], b)] for b in B.morphisms))
    s = IdOnObjFunctor(total, B, tuple(b for _, b in coordinates))
    embedding = IdOnObjFunctor(Y, total, tuple(index[(y, B.identities[Y.src[y]])] for y in Y.morphisms))
    logger.debug(f"Semidirect product has {total.size} morphisms")
    return SemidirectProduct(act, SplitEpiPair(total, B, i, s), embedding, coordinates)


def semidirect_morphism(
    morphism: ActionMorphism, source: SemidirectProduct, target: SemidirectProduct
) -> tuple[IdOnObjFunctor, IdOnObjFunctor]:
    """The split-epi morphism (α, β) induced by a morphism of actions.

    Args:
        morphism: (ν, β) between the two actions.
        source: The semidirect product of ``morphism.source``.
        target: The semidirect product of ``morphism.target``.

    Returns:
        tuple[IdOnObjFunctor, IdOnObjFunctor]: (α, β) with α(y, b) = (ν(y), β(b)).
    """
    nu, beta = morphism.nu, morphism.beta
    alpha = IdOnObjFunctor(
        source.total,
        target.total,
        tuple(target.element(nu(y), beta(b)) for y, b in source.coordinates),
    )
    return alpha, beta
