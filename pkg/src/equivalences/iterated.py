"""The iterated comparison maps q_n, h_n and b_n, and the checks relating them.

Elements of the constructed sets are tuples of dense ids:

* A^{□n}: strings (a₁, …, aₙ) with s(a_j) = t(a_{j+1}).
* (A□_B I)A^{□n}: (y, a₁, …, aₙ) with y a kernel morphism (as an A-id) and
  src(y) = tgt(a₁); for n = 0 the string is a single base morphism b.
* Y^kB: (y₁, …, y_k, b) with every y_j a fiber morphism at tgt(b).
"""

from enum import Enum
from itertools import product

from common import OracleReport
from distlaw import SplitEpiPair, semidirect_product
from logtools import get_logger
from spans import FiniteMap, pullback

from .errors import StructureMismatch, UnsupportedN
from .morphism_map import MorphismMap, tabulate
from .reflgraph import PreCrossedModule, ReflexiveGraph, prex_to_reflgraph
from .splitepi import build_q, kernel_object, q_domain

logger = get_logger(__name__)

MAX_N = 3


class IteratedKind(str, Enum):
    Q = "q"
    H = "h"
    B = "b"


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise UnsupportedN(f"Iterated maps are built for 1 ≤ n ≤ {MAX_N}", (n,))


def composable_strings(rg: ReflexiveGraph, n: int) -> list[tuple[int, ...]]:
    """A^{□n} in lexicographic order, built by repeated pullback of s against t."""
    strings = [(a,) for a in rg.total.morphisms]
    base_size = rg.base.size
    for _ in range(n - 1):
        result = pullback(
            FiniteMap(tuple(rg.s(w[-1]) for w in strings), base_size),
            FiniteMap(rg.t.table, base_size),
        )
        strings = [strings[w] + (a,) for w, a in result.pairs]
    return strings


def _kernel_strings(rg: ReflexiveGraph, n: int) -> list[tuple[int, ...]]:
    """(A□_B I)A^{□n} for n ≥ 1."""
    kernel = kernel_object(rg.pair)
    A = rg.total
    return [
        (y,) + w
        for y in kernel.members
        for w in composable_strings(rg, n)
        if A.src[y] == A.tgt[w[0]]
    ]


def fiber_strings(pxm: PreCrossedModule, k: int) -> list[tuple[int, ...]]:
    """Y^kB in lexicographic order."""
    Y, B = pxm.fiber, pxm.base
    elements = []
    for b in B.morphisms:
        fibre = [y for y in Y.morphisms if Y.src[y] == B.tgt[b]]
        elements.extend(ys + (b,) for ys in product(fibre, repeat=k))
    return sorted(elements)


def kappa_t(pxm: PreCrossedModule, element: tuple[int, ...]) -> int:
    """The leg Y^kB → B, (y₁, …, y_k, b) ↦ κ(y₁)···κ(y_k)·b."""
    B = pxm.base
    path = [pxm.kappa(y) for y in element[:-1]] + [element[-1]]
    return B.compose_all(path)


def _build_q(rg: ReflexiveGraph, n: int) -> MorphismMap:
    A = rg.total
    domain = _kernel_strings(rg, n - 1)

    def q(element: tuple[int, ...]) -> tuple[int, ...]:
        y, rest = element[0], element[1:]
        return (A.compose(y, rg.i(rg.t(rest[0]))),) + rest

    return tabulate(f"(A□_B I)A^□{n - 1}", f"A^□{n}", domain, composable_strings(rg, n), q)


def _build_h(rg: ReflexiveGraph, n: int) -> MorphismMap:
    domain = _kernel_strings(rg, n)
    strings = composable_strings(rg, n)
    codomain = [
        (head,) + w
        for head in q_domain(rg.pair, kernel_object(rg.pair))
        for w in strings
        if head[1] == rg.t(w[0])
    ]
    return tabulate(
        f"(A□_B I)A^□{n}",
        f"(A□_B I)B□_B A^□{n}",
        domain,
        codomain,
        lambda e: ((e[0], rg.t(e[1])),) + e[1:],
    )


def b_map(pxm: PreCrossedModule, element: tuple[int, ...]) -> tuple[tuple[int, int], tuple[int, ...]]:
    """b_k(y₁, …, y_k, b) = ((y₁, κ(y₂)···κ(y_k)·b), (y₂, …, y_k, b)); b_1(y, b) = ((y, b), (b,))."""
    rest = element[1:]
    return (element[0], kappa_t(pxm, rest)), rest


def _build_b(pxm: PreCrossedModule, n: int) -> MorphismMap:
    Y, B = pxm.fiber, pxm.base
    tails = fiber_strings(pxm, n - 1)
    codomain = sorted(
        ((y, kappa_t(pxm, tail)), tail)
        for tail in tails
        for y in Y.morphisms
        if Y.src[y] == B.tgt[kappa_t(pxm, tail)]
    )
    return tabulate(
        f"Y^{n}B",
        f"YB□_B Y^{n - 1}B",
        fiber_strings(pxm, n),
        codomain,
        lambda e: b_map(pxm, e),
    )


def build_iterated(
    kind: IteratedKind, structure: SplitEpiPair | ReflexiveGraph | PreCrossedModule, n: int
) -> MorphismMap:
    """Builds q_n, h_n or b_n and decides its bijectivity exhaustively.

    Args:
        kind: Which family.
        structure: A ReflexiveGraph for q_n and h_n (q_1 also accepts a
            SplitEpiPair), a PreCrossedModule for b_n.
        n: 1 ≤ n ≤ 3.

    Returns:
        MorphismMap: The tabulated map.

    Raises:
        UnsupportedN: Outside 1 ≤ n ≤ 3.
        StructureMismatch: If the structure does not carry the needed data.
    """
    _check_n(n)
    kind = IteratedKind(kind)
    if kind is IteratedKind.Q:
        if n == 1 and isinstance(structure, SplitEpiPair):
            return build_q(structure)
        if not isinstance(structure, ReflexiveGraph):
            raise StructureMismatch(f"q_{n} needs a reflexive graph")
        return build_q(structure.pair) if n == 1 else _build_q(structure, n)
    if kind is IteratedKind.H:
        if not isinstance(structure, ReflexiveGraph):
            raise StructureMismatch(f"h_{n} needs a reflexive graph")
        return _build_h(structure, n)
    if not isinstance(structure, PreCrossedModule):
        raise StructureMismatch(f"b_{n} needs a pre-crossed module")
    return _build_b(structure, n)


def check_qn_factorization(rg: ReflexiveGraph, n: int) -> OracleReport:
    """Checks q_{n+1} = (q□1)∘h_n pointwise, for 1 ≤ n ≤ 2."""
    _check_n(n + 1)
    q_next = build_iterated(IteratedKind.Q, rg, n + 1)
    h = build_iterated(IteratedKind.H, rg, n)
    q = build_q(rg.pair)
    checked = 0
    for element, image in q_next.items():
        checked += 1
        head, *rest = h(element)
        if (q(head),) + tuple(rest) != image:
            return OracleReport(False, checked, (element,), note=f"q_{n + 1} ≠ (q□1)∘h_{n}")
    return OracleReport(True, checked, note=f"q_{n + 1} = (q□1)∘h_{n}")


def check_bn_square(pxm: PreCrossedModule, n: int) -> OracleReport:
    """Checks that b_{n+1}, …, b_1 and f…f1 followed by q_1, …, q_{n+1} agree on Y^{n+1}B.

    Both routes end in A^{□(n+1)} for the semidirect product A = YB, for
    0 ≤ n ≤ 2.
    """
    if not 0 <= n < MAX_N:
        raise UnsupportedN(f"The b_n square is checked for 0 ≤ n < {MAX_N}", (n,))
    product_ = semidirect_product(pxm.action)
    rg = prex_to_reflgraph(pxm)
    q_maps = [build_iterated(IteratedKind.Q, rg, k) for k in range(1, n + 2)]
    base_unit = pxm.base.identities

    checked = 0
    for element in fiber_strings(pxm, n + 1):
        checked += 1
        via_b, current = [], element
        while len(current) > 1:
            head, current = b_map(pxm, current)
            via_b.append(product_.element(*head))

        ys, b = element[:-1], element[-1]
        embedded = [product_.element(y, base_unit[pxm.fiber.src[y]]) for y in ys]
        via_q = (q_maps[0]((embedded[-1], b)),)
        for k in range(1, n + 1):
            via_q = q_maps[k]((embedded[-1 - k],) + via_q)

        if tuple(via_b) != via_q:
            return OracleReport(False, checked, (element,), note=f"b_{n + 1} square fails")
    return OracleReport(True, checked, note=f"b_{n + 1} square commutes")


def check_bn_qn_biconditional(pxm: PreCrossedModule, n: int) -> OracleReport:
    """Decides bijectivity of b_n and of q_n independently and compares."""
    b = build_iterated(IteratedKind.B, pxm, n)
    q = build_iterated(IteratedKind.Q, prex_to_reflgraph(pxm), n)
    note = f"b_{n} bijective={b.bijective}, q_{n} bijective={q.bijective}"
    if b.bijective != q.bijective:
        return OracleReport(False, len(b.domain) + len(q.domain), (n,), note=note)
    return OracleReport(True, len(b.domain) + len(q.domain), note=note)


def check_b2_unit_identities(pxm: PreCrossedModule) -> OracleReport:
    """Checks b_2(1, y, b) = ((1, κ(y)·b), (y, b)) and b_2(y, 1, b) = ((y, b), (1, b)) on YB.

    The report counts the points of YB; both identities are checked at each.
    """
    Y = pxm.fiber
    b2 = build_iterated(IteratedKind.B, pxm, 2)
    checked = 0
    for y, b in semidirect_product(pxm.action).coordinates:
        checked += 1
        unit = Y.identities[Y.src[y]]
        if b2((unit, y, b)) != ((unit, kappa_t(pxm, (y, b))), (y, b)):
            return OracleReport(False, checked, (y, b), note="b2·u11 ≠ u1□1")
        if b2((y, unit, b)) != ((y, b), (unit, b)):
            return OracleReport(False, checked, (y, b), note="b2·1u1 ≠ 1□u1")
    return OracleReport(True, checked, note="b2·u11 = u1□1 and b2·1u1 = 1□u1")
