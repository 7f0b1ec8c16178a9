"""Split epimorphisms of categories and their kernels, q and the induced action."""

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from distlaw import ActionSystem, SplitEpiPair, validate_action, validate_split_pair
from fincat import FinCatX, IdOnObjFunctor, InverseMap
from logtools import get_logger

from .errors import QNotInvertible
from .morphism_map import MorphismMap, failure_witness, tabulate

logger = get_logger(__name__)


@dataclass(frozen=True)
class KernelObject:
    """The morphisms of A sent to identities by s, as a bundle.

    Attributes:
        category: The kernel as a bundle category (ids are kernel positions).
        members: The A-id of each kernel morphism.
        embed: The inclusion functor into A.
        base_point: The common source and target object of each member.
    """

    category: FinCatX
    members: tuple[int, ...]
    embed: IdOnObjFunctor
    base_point: tuple[int, ...]
    _position: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_position", {a: k for k, a in enumerate(self.members)})

    def position(self, a: int) -> int:
        """Kernel id of the A-morphism a."""
        return self._position[a]

    def __contains__(self, a: int) -> bool:
        return a in self._position


def kernel_object(se: SplitEpiPair) -> KernelObject:
    """Computes the kernel A□_B I = {a | s(a) is an identity}.

    Args:
        se: A split pair; q need not be invertible.

    Returns:
        KernelObject: The kernel bundle with its inclusion into A.
    """
    A, B = se.total, se.base
    members = tuple(a for a in A.morphisms if B.is_identity(se.s(a)))
    position = {a: k for k, a in enumerate(members)}
    category = FinCatX.from_function(
        A.objects,
        names=[A.names[a] for a in members],
        src=[A.src[a] for a in members],
        tgt=[A.tgt[a] for a in members],
        identities=[position[A.identities[x]] for x in range(A.objects.size)],
        compose=lambda g, f: position[A.table[members[g]][members[f]]],
    )
    return KernelObject(
        category=category,
        members=members,
        embed=IdOnObjFunctor(category, A, members),
        base_point=tuple(A.src[a] for a in members),
    )


def q_domain(se: SplitEpiPair, kernel: KernelObject) -> list[tuple[int, int]]:
    """(A□_B I)B = {(a, b) | a in the kernel, base_point(a) = tgt(b)}, with a as an A-id."""
    B = se.base
    return [
        (a, b)
        for k, a in enumerate(kernel.members)
        for b in B.morphisms
        if kernel.base_point[k] == B.tgt[b]
    ]


def build_q(se: SplitEpiPair, kernel: KernelObject | None = None) -> MorphismMap:
    """The comparison map q(a, b) = a·i(b), with bijectivity decided exhaustively.

    Args:
        se: The split pair.
        kernel: Its kernel, if already computed.

    Returns:
        MorphismMap: q, carrying its inverse when bijective.
    """
    kernel = kernel or kernel_object(se)
    A = se.total
    return tabulate(
        "(A□_B I)B",
        "A",
        q_domain(se, kernel),
        tuple(A.morphisms),
        lambda ab: A.compose(ab[0], se.i(ab[1])),
    )


def groupoid_q_inverse(se: SplitEpiPair, inv: InverseMap) -> MorphismMap:
    """The closed-form inverse of q over a groupoid base: a ↦ (a·i(s(a)⁻¹), s(a)).

    Args:
        se: The split pair.
        inv: Inverses in the base B.

    Returns:
        MorphismMap: The map A → (A□_B I)B.
    """
    A = se.total
    kernel = kernel_object(se)

    def closed_form(a: int) -> tuple[int, int]:
        b = se.s(a)
        return A.compose(a, se.i(inv(b))), b

    return tabulate("A", "(A□_B I)B", tuple(A.morphisms), q_domain(se, kernel), closed_form)


def validate_splitepi(
    total: FinCatX,
    base: FinCatX,
    i: Sequence[int] | Mapping[int, int],
    s: Sequence[int] | Mapping[int, int],
) -> SplitEpiPair:
    """Validates an object of the split-epimorphism category.

    Raises:
        FunctorError: If i or s is not a functor.
        NotSplit: If s∘i ≠ 1.
        QNotInvertible: If q is not bijective, with the first colliding pair.
    """
    se = validate_split_pair(total, base, i, s)
    q = build_q(se)
    if not q.bijective:
        raise QNotInvertible("q: (A□_B I)B → A is not invertible", failure_witness(q))
    return se


def splitepi_to_distlaw(se: SplitEpiPair) -> ActionSystem:
    """The action of B on the kernel induced by a split epimorphism.

    b▷y is the kernel component of q⁻¹(i(b)·y); over a groupoid base this is
    conjugation i(b)·y·i(b)⁻¹.

    Args:
        se: A split pair with invertible q.

    Returns:
        ActionSystem: The validated action of B on the kernel bundle.

    Raises:
        QNotInvertible: If q is not bijective.
    """
    kernel = kernel_object(se)
    q = build_q(se, kernel)
    if not q.bijective:
        raise QNotInvertible("q: (A□_B I)B → A is not invertible", failure_witness(q))
    A, B, K = se.total, se.base, kernel.category

    table = {}
    for b in B.morphisms:
        for y in K.morphisms:
            if B.src[b] == K.tgt[y]:
                a, _ = q.preimage(A.compose(se.i(b), kernel.members[y]))
                table[(b, y)] = kernel.position(a)
    return validate_action(B, K, table)
