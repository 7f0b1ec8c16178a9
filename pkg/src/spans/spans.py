"""Finite sets, spans over a fixed object set, pullbacks and the span product.

Elements are dense integer ids. A product of spans keeps a provenance table
(pair of component ids per element) so iterated products stay addressable.
"""

from dataclasses import dataclass, field
from collections import defaultdict

from common.errors import XmodkitError


class SpanError(XmodkitError):
    """Raised when finite maps or spans are malformed."""


class MismatchedObjSet(SpanError):
    """Raised when two spans that must share an object set do not."""


class ConeError(SpanError):
    """Raised when a test cone does not commute over the cospan."""


@dataclass(frozen=True)
class ObjSet:
    """The fixed finite object set X, addressed by index.

    Attributes:
        labels: Pairwise distinct object names.
    """

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        index = {}
        for i, label in enumerate(self.labels):
            if label in index:
                raise SpanError(f"Duplicate object label {label!r}", (index[label], i))
            index[label] = i
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise SpanError(f"Unknown object {label!r}") from None


@dataclass(frozen=True)
class FiniteMap:
    """A total map {0..n-1} → {0..codomain_size-1} given by its table."""

    table: tuple[int, ...]
    codomain_size: int

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        for i, value in enumerate(self.table):
            if not 0 <= value < self.codomain_size:
                raise SpanError(f"Map value {value} out of range", (i,))

    @property
    def domain_size(self) -> int:
        return len(self.table)

    def __call__(self, element: int) -> int:
        return self.table[element]

    def compose(self, first: "FiniteMap") -> "FiniteMap":
        """Return self ∘ first (first applied first)."""
        return FiniteMap(tuple(self.table[v] for v in first.table), self.codomain_size)

    @classmethod
    def identity(cls, size: int) -> "FiniteMap":
        return cls(tuple(range(size)), size)

    def is_bijective(self) -> bool:
        return self.domain_size == self.codomain_size and len(set(self.table)) == self.domain_size


@dataclass(frozen=True)
class PullbackResult:
    """The pullback of a cospan A → B ← C of finite sets.

    Attributes:
        pairs: All (a, c) with f(a) = g(c), in lexicographic order.
        proj1: Projection onto A.
        proj2: Projection onto C.
    """

    pairs: tuple[tuple[int, int], ...]
    proj1: FiniteMap
    proj2: FiniteMap
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {pair: i for i, pair in enumerate(self.pairs)})

    @property
    def size(self) -> int:
        return len(self.pairs)

    def index_of(self, pair: tuple[int, int]) -> int | None:
        return self._index.get(pair)


def pullback(f: FiniteMap, g: FiniteMap) -> PullbackResult:
    """Computes the set-level pullback of the cospan A --f--> B <--g-- C.

    The result lists every pair (a, c) with f(a) = g(c), ordered
    lexicographically by (a, c), together with both coordinate projections.
    An empty result is valid.

    Args:
        f: The map A → B.
        g: The map C → B.

    Returns:
        PullbackResult: The pairs and their projections.
    """
    by_value: dict[int, list[int]] = defaultdict(list)
    for c, value in enumerate(g.table):
        by_value[value].append(c)

    pairs = tuple((a, c) for a, value in enumerate(f.table) for c in by_value.get(value, ()))
    return PullbackResult(
        pairs=pairs,
        proj1=FiniteMap(tuple(a for a, _ in pairs), f.domain_size),
        proj2=FiniteMap(tuple(c for _, c in pairs), g.domain_size),
    )


def induced_map(result: PullbackResult, h: FiniteMap, k: FiniteMap) -> FiniteMap:
    """Returns the unique map T → A×_B C induced by a commuting test cone.

    Args:
        result: The pullback to map into.
        h: The cone leg T → A.
        k: The cone leg T → C.

    Returns:
        FiniteMap: The map t ↦ (h(t), k(t)).

    Raises:
        ConeError: If some t has (h(t), k(t)) outside the pullback.
    """
    if h.domain_size != k.domain_size:
        raise ConeError("Cone legs have different domains")
    table = []
    for t in range(h.domain_size):
        idx = result.index_of((h(t), k(t)))
        if idx is None:
            raise ConeError("Test cone does not commute", (t,))
        table.append(idx)
    return FiniteMap(tuple(table), result.size)


@dataclass(frozen=True)
class Span:
    """A span X ← E → X over a fixed object set.

    For a category the carrier is its morphism set, ``left`` the target and
    ``right`` the source map, so that the span product pairs composable
    morphisms.

    Attributes:
        objects: The object set X.
        left: Left leg, carrier → X.
        right: Right leg, carrier → X.
        provenance: For product spans, the component ids of each element.
    """

    objects: ObjSet
    left: tuple[int, ...]
    right: tuple[int, ...]
    provenance: tuple[tuple[int, int], ...] | None = None
    _index: dict | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        if len(self.left) != len(self.right):
            raise SpanError("Span legs must be total on the same carrier")
        for e, (x, y) in enumerate(zip(self.left, self.right)):
            if not (0 <= x < self.objects.size and 0 <= y < self.objects.size):
                raise SpanError("Span leg leaves the object set", (e,))
        index = None
        if self.provenance is not None:
            index = {pair: i for i, pair in enumerate(self.provenance)}
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.left)

    def index_of(self, pair: tuple[int, int]) -> int | None:
        """Look up a product element by its component ids."""
        if self._index is None:
            raise SpanError("Span carries no provenance table")
        return self._index.get(pair)


def trivial_span(objects: ObjSet) -> Span:
    """The monoidal unit X = X = X."""
    identity = tuple(range(objects.size))
    return Span(objects, identity, identity)


def span_product(p: Span, q: Span) -> Span:
    """Computes the monoidal product P ⊗ Q, the pullback over X.

    The carrier is {(p, q) | right(p) = left(q)} in lexicographic order; the
    new legs are left(P)∘proj1 and right(Q)∘proj2.

    Args:
        p: The left factor.
        q: The right factor.

    Returns:
        Span: The product span, with provenance pairs.

    Raises:
        MismatchedObjSet: If the spans live over different object sets.
    """
    if p.objects != q.objects:
        raise MismatchedObjSet("Span product needs a common object set")
    result = pullback(FiniteMap(p.right, p.objects.size), FiniteMap(q.left, q.objects.size))
    return Span(
        objects=p.objects,
        left=tuple(p.left[a] for a, _ in result.pairs),
        right=tuple(q.right[c] for _, c in result.pairs),
        provenance=result.pairs,
    )


def associator(p: Span, q: Span, r: Span) -> FiniteMap:
    """The canonical bijection (P⊗Q)⊗R → P⊗(Q⊗R), ((p,q),r) ↦ (p,(q,r))."""
    pq = span_product(p, q)
    qr = span_product(q, r)
    left_assoc = span_product(pq, r)
    right_assoc = span_product(p, qr)
    table = []
    for pq_id, r_id in left_assoc.provenance:
        p_id, q_id = pq.provenance[pq_id]
        table.append(right_assoc.index_of((p_id, qr.index_of((q_id, r_id)))))
    return FiniteMap(tuple(table), right_assoc.size)


def left_unitor(q: Span) -> FiniteMap:
    """The canonical bijection I⊗Q → Q, (x, q) ↦ q."""
    product = span_product(trivial_span(q.objects), q)
    return FiniteMap(tuple(c for _, c in product.provenance), q.size)


def right_unitor(p: Span) -> FiniteMap:
    """The canonical bijection P⊗I → P, (p, x) ↦ p."""
    product = span_product(p, trivial_span(p.objects))
    return FiniteMap(tuple(a for a, _ in product.provenance), p.size)


def preserves_legs(m: FiniteMap, source: Span, target: Span) -> bool:
    """Whether m is a morphism of spans, i.e. commutes with both legs."""
    return all(
        source.left[e] == target.left[m(e)] and source.right[e] == target.right[m(e)]
        for e in range(source.size)
    )
