"""Finite small categories with a fixed object set (monoids in spans over X).

Composition follows the convention comp(g, f) = "f first, then g"; the table is
dense over all pairs with ``-1`` marking undefined cells, which the validators
never read.
"""

from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from common.errors import XmodkitError
from logtools import get_logger
from spans import FiniteMap, ObjSet, Span, pullback

logger = get_logger(__name__)

UNDEFINED = -1


class CategoryError(XmodkitError):
    """Raised when raw data does not describe a category."""


class UnknownName(CategoryError):
    """Raised when a table refers to an undeclared object or morphism."""


class MissingIdentity(CategoryError):
    """Raised when an object has no (valid) identity morphism."""


class BadComposabilityDomain(CategoryError):
    """Raised when composites are defined off, or missing on, composable pairs."""


class UnitLawViolation(CategoryError):
    """Raised when composing with an identity changes a morphism."""


class AssociativityViolation(CategoryError):
    """Raised when h(gf) differs from (hg)f."""


class NotComposable(CategoryError):
    """Raised when asking for the composite of a non-composable pair."""


class FunctorError(XmodkitError):
    """Raised when a map between categories is not an identity-on-objects functor."""


class SrcTgtNotPreserved(FunctorError):
    pass


class IdentityNotPreserved(FunctorError):
    pass


class CompositionNotPreserved(FunctorError):
    pass


class NotGroupoid(XmodkitError):
    """Raised when a morphism has no two-sided inverse."""


@dataclass(frozen=True)
class FinCatX:
    """A finite category whose object set is the fixed set X.

    Attributes:
        objects: The object set X.
        names: Morphism names; names are authoritative in files, ids in memory.
        src: Source object of each morphism.
        tgt: Target object of each morphism.
        identities: The identity morphism of each object.
        table: table[g][f] = comp(g, f), or UNDEFINED.
    """

    objects: ObjSet
    names: tuple[str, ...]
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    identities: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    _by_name: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_name = {}
        for i, name in enumerate(self.names):
            if name in by_name:
                raise CategoryError(f"Duplicate morphism name {name!r}", (by_name[name], i))
            by_name[name] = i
        object.__setattr__(self, "_by_name", by_name)

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def morphisms(self) -> range:
        return range(len(self.names))

    def morphism(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownName(f"Unknown morphism {name!r}") from None

    def name(self, f: int) -> str:
        return self.names[f]

    def identity(self, x: int) -> int:
        return self.identities[x]

    def is_identity(self, f: int) -> bool:
        return self.identities[self.src[f]] == f

    def composable(self, g: int, f: int) -> bool:
        return self.tgt[f] == self.src[g]

    def compose(self, g: int, f: int) -> int:
        """Return comp(g, f), the composite doing f first."""
        if self.tgt[f] != self.src[g]:
            raise NotComposable(
                f"{self.names[g]} ∘ {self.names[f]} is not composable", (g, f)
            )
        return self.table[g][f]

    def compose_all(self, path: Sequence[int]) -> int:
        """Compose a path written right to left: [h, g, f] ↦ h∘g∘f."""
        result = path[-1]
        for g in reversed(path[:-1]):
            result = self.compose(g, result)
        return result

    def hom(self, x: int, y: int) -> list[int]:
        return [f for f in self.morphisms if self.src[f] == x and self.tgt[f] == y]

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        """All (g, f) with tgt(f) = src(g), in lexicographic order."""
        for g in self.morphisms:
            for f in self.morphisms:
                if self.tgt[f] == self.src[g]:
                    yield g, f

    def span(self) -> Span:
        """The underlying span X ←tgt− mor −src→ X."""
        return Span(self.objects, self.tgt, self.src)

    @classmethod
    def from_function(
        cls,
        objects: ObjSet,
        names: Sequence[str],
        src: Sequence[int],
        tgt: Sequence[int],
        identities: Sequence[int],
        compose: Callable[[int, int], int],
    ) -> "FinCatX":
        """Tabulate a composition function over all composable pairs.

        The result is not validated; callers that cannot guarantee the laws pass
        it through check_category.
        """
        n = len(names)
        table = tuple(
            tuple(compose(g, f) if tgt[f] == src[g] else UNDEFINED for f in range(n))
            for g in range(n)
        )
        return cls(objects, tuple(names), tuple(src), tuple(tgt), tuple(identities), table)


@dataclass(frozen=True)
class RawCategoryData:
    """Category data as read from a document, by name.

    Attributes:
        objects: Object names.
        morphisms: (name, src, tgt) triples.
        identities: One morphism name per object, aligned with ``objects``.
        compose: (g, f, gf) name triples, meaning comp(g, f) = gf.
    """

    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]
    identities: tuple[str, ...]
    compose: tuple[tuple[str, str, str], ...]


def validate_category(raw: RawCategoryData) -> FinCatX:
    """Builds a FinCatX from raw tables and checks every category law.

    Dense ids follow the order of ``raw.objects`` and ``raw.morphisms``.

    Args:
        raw: The named category data.

    Returns:
        FinCatX: The validated category.

    Raises:
        UnknownName: If a table refers to an undeclared name.
        MissingIdentity: If an object lacks a valid identity.
        BadComposabilityDomain: If composites are defined exactly off the composable pairs.
        UnitLawViolation: If an identity fails to act as a unit.
        AssociativityViolation: On the lexicographically first failing triple.
    """
    objects = ObjSet(tuple(raw.objects))
    names = tuple(name for name, _, _ in raw.morphisms)
    by_name = {name: i for i, name in enumerate(names)}
    if len(by_name) != len(names):
        raise CategoryError("Duplicate morphism names")

    def lookup(name: str) -> int:
        if name not in by_name:
            raise UnknownName(f"Unknown morphism {name!r}")
        return by_name[name]

    src = tuple(objects.index(s) for _, s, _ in raw.morphisms)
    tgt = tuple(objects.index(t) for _, _, t in raw.morphisms)
    if len(raw.identities) != objects.size:
        raise MissingIdentity("Every object needs exactly one identity", (len(raw.identities),))
    identities = tuple(lookup(name) for name in raw.identities)

    n = len(names)
    cells = [[UNDEFINED] * n for _ in range(n)]
    for g_name, f_name, gf_name in raw.compose:
        g, f, gf = lookup(g_name), lookup(f_name), lookup(gf_name)
        if tgt[f] != src[g]:
            raise BadComposabilityDomain(
                f"Composite given for non-composable pair ({g_name}, {f_name})", (g, f)
            )
        if cells[g][f] not in (UNDEFINED, gf):
            raise BadComposabilityDomain(
                f"Conflicting composites for ({g_name}, {f_name})", (g, f)
            )
        cells[g][f] = gf

    category = FinCatX(objects, names, src, tgt, identities, tuple(tuple(row) for row in cells))
    check_category(category)
    return category


def check_category(c: FinCatX) -> FinCatX:
    """Checks the four category laws on a tabulated category.

    Args:
        c: The category to check.

    Returns:
        FinCatX: The same category, for chaining.

    Raises:
        MissingIdentity, BadComposabilityDomain, UnitLawViolation,
        AssociativityViolation: On the lexicographically first violation.
    """
    for x, e in enumerate(c.identities):
        if c.src[e] != x or c.tgt[e] != x:
            raise MissingIdentity(f"Identity of object {c.objects.labels[x]} is not an endomorphism of it", (e,))

    for g in c.morphisms:
        for f in c.morphisms:
            defined = c.table[g][f] != UNDEFINED
            if defined != (c.tgt[f] == c.src[g]):
                raise BadComposabilityDomain(
                    f"comp({c.names[g]}, {c.names[f]}) defined={defined} disagrees with composability",
                    (g, f),
                )
            if defined:
                gf = c.table[g][f]
                if c.src[gf] != c.src[f] or c.tgt[gf] != c.tgt[g]:
                    raise BadComposabilityDomain(
                        f"comp({c.names[g]}, {c.names[f]}) has the wrong source or target", (g, f)
                    )

    for f in c.morphisms:
        if c.table[c.identities[c.tgt[f]]][f] != f or c.table[f][c.identities[c.src[f]]] != f:
            raise UnitLawViolation(f"Identity does not act as a unit on {c.names[f]}", (f,))

    for h in c.morphisms:
        for g in c.morphisms:
            if c.tgt[g] != c.src[h]:
                continue
            hg = c.table[h][g]
            for f in c.morphisms:
                if c.tgt[f] != c.src[g]:
                    continue
                if c.table[hg][f] != c.table[h][c.table[g][f]]:
                    raise AssociativityViolation(
                        f"({c.names[h]}∘{c.names[g]})∘{c.names[f]} ≠ {c.names[h]}∘({c.names[g]}∘{c.names[f]})",
                        (h, g, f),
                    )
    return c


@dataclass(frozen=True)
class IdOnObjFunctor:
    """A functor between categories over the same X, identity on objects.

    Attributes:
        dom: The domain category.
        cod: The codomain category.
        table: Image of each morphism of ``dom``.
    """

    dom: FinCatX
    cod: FinCatX
    table: tuple[int, ...]

    def __call__(self, f: int) -> int:
        return self.table[f]


def _as_table(mapping: Sequence[int] | Mapping[int, int], size: int) -> tuple[int, ...]:
    if isinstance(mapping, Mapping):
        missing = [f for f in range(size) if f not in mapping]
        if missing:
            raise FunctorError("Functor table is not total", (missing[0],))
        return tuple(mapping[f] for f in range(size))
    if len(mapping) != size:
        raise FunctorError("Functor table has the wrong length", (len(mapping),))
    return tuple(mapping)


def validate_functor(
    mapping: Sequence[int] | Mapping[int, int], dom: FinCatX, cod: FinCatX
) -> IdOnObjFunctor:
    """Checks that a morphism map is an identity-on-objects functor.

    Args:
        mapping: Image of each morphism of ``dom`` (sequence or dict by id).
        dom: The domain category.
        cod: The codomain category.

    Returns:
        IdOnObjFunctor: The validated functor.

    Raises:
        FunctorError: If the object sets differ or the table is partial.
        SrcTgtNotPreserved: If some f changes source or target.
        IdentityNotPreserved: If some identity is not sent to an identity.
        CompositionNotPreserved: On the first composable (g, f) with F(gf) ≠ F(g)F(f).
    """
    if dom.objects != cod.objects:
        raise FunctorError("Functor between categories over different object sets")
    table = _as_table(mapping, dom.size)
    for f, image in enumerate(table):
        if not 0 <= image < cod.size:
            raise FunctorError("Functor value out of range", (f,))
        if cod.src[image] != dom.src[f] or cod.tgt[image] != dom.tgt[f]:
            raise SrcTgtNotPreserved(f"{dom.names[f]} changes endpoints", (f,))
    for x, e in enumerate(dom.identities):
        if table[e] != cod.identities[x]:
            raise IdentityNotPreserved(f"{dom.names[e]} is not sent to an identity", (e,))
    for g, f in dom.composable_pairs():
        if table[dom.table[g][f]] != cod.table[table[g]][table[f]]:
            raise CompositionNotPreserved(
                f"F({dom.names[g]}∘{dom.names[f]}) ≠ F({dom.names[g]})∘F({dom.names[f]})", (g, f)
            )
    return IdOnObjFunctor(dom, cod, table)


def identity_functor(c: FinCatX) -> IdOnObjFunctor:
    return IdOnObjFunctor(c, c, tuple(c.morphisms))


def compose_functors(second: IdOnObjFunctor, first: IdOnObjFunctor) -> IdOnObjFunctor:
    """Return second ∘ first."""
    if first.cod != second.dom:
        raise FunctorError("Functors are not composable")
    return IdOnObjFunctor(first.dom, second.cod, tuple(second.table[v] for v in first.table))


@dataclass(frozen=True)
class InverseMap:
    """Two-sided inverses of every morphism of a groupoid."""

    inv: tuple[int, ...]

    def __call__(self, f: int) -> int:
        return self.inv[f]


def groupoid_inverses(c: FinCatX) -> InverseMap:
    """Finds the inverse of every morphism, by exhaustive search.

    Args:
        c: A valid category.

    Returns:
        InverseMap: The unique inverse of each morphism.

    Raises:
        NotGroupoid: Naming the first morphism without an inverse.
    """
    inv = []
    for f in c.morphisms:
        x, y = c.src[f], c.tgt[f]
        for g in c.hom(y, x):
            if c.table[g][f] == c.identities[x] and c.table[f][g] == c.identities[y]:
                inv.append(g)
                break
        else:
            raise NotGroupoid(f"{c.names[f]} has no inverse", (f,))
    return InverseMap(tuple(inv))


@dataclass(frozen=True)
class BundleFlag:
    """Whether a category is a bundle (source and target maps coincide)."""

    is_bundle: bool

    def __bool__(self) -> bool:
        return self.is_bundle


def is_bundle(c: FinCatX) -> BundleFlag:
    return BundleFlag(c.src == c.tgt)


@dataclass(frozen=True)
class FibreProduct:
    """The category of pairs (a, c) with F(a) = G(c), composed componentwise.

    Attributes:
        category: The fibre product category.
        pairs: Component ids of each morphism, lexicographic.
        proj1: Projection functor onto the first factor.
        proj2: Projection functor onto the second factor.
    """

    category: FinCatX
    pairs: tuple[tuple[int, int], ...]
    proj1: IdOnObjFunctor
    proj2: IdOnObjFunctor
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {pair: i for i, pair in enumerate(self.pairs)})

    def index_of(self, pair: tuple[int, int]) -> int | None:
        return self._index.get(pair)


def fibre_product(f: IdOnObjFunctor, g: IdOnObjFunctor) -> FibreProduct:
    """Computes the pullback A ×_B C of two functors into a common B.

    Morphisms are the pairs of the set-level pullback of the morphism maps;
    since both functors fix objects, paired morphisms share their endpoints.

    Args:
        f: The functor A → B.
        g: The functor C → B.

    Returns:
        FibreProduct: The category of pairs with both projections.
    """
    if f.cod != g.cod:
        raise FunctorError("Fibre product needs a common codomain")
    a_cat, c_cat = f.dom, g.dom
    result = pullback(FiniteMap(f.table, f.cod.size), FiniteMap(g.table, g.cod.size))
    pairs = result.pairs
    index = {pair: i for i, pair in enumerate(pairs)}
    names = tuple(f"({a_cat.names[a]},{c_cat.names[c]})" for a, c in pairs)
    src = tuple(a_cat.src[a] for a, _ in pairs)
    tgt = tuple(a_cat.tgt[a] for a, _ in pairs)
    identities = tuple(index[(a_cat.identities[x], c_cat.identities[x])] for x in range(a_cat.objects.size))

    def compose(u: int, v: int) -> int:
        (a1, c1), (a2, c2) = pairs[u], pairs[v]
        return index[(a_cat.table[a1][a2], c_cat.table[c1][c2])]

    category = FinCatX.from_function(a_cat.objects, names, src, tgt, identities, compose)
    logger.debug(f"Fibre product has {category.size} morphisms")
    return FibreProduct(
        category=category,
        pairs=pairs,
        proj1=IdOnObjFunctor(category, a_cat, tuple(a for a, _ in pairs)),
        proj2=IdOnObjFunctor(category, c_cat, tuple(c for _, c in pairs)),
    )
