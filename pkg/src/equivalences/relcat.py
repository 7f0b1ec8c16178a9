"""Internal categories (reflexive graphs with a composition d) and crossed modules.

d: A□_B A → A is defined on the pairs (a, a') with s(a) = t(a'). When q and q₂
are bijective there is at most one such d, namely d(a, a') = y·a' where
(y, a') = q₂⁻¹(a, a').
"""

from dataclasses import dataclass
from typing import Mapping

from common import OracleReport
from fincat import FibreProduct, InverseMap, fibre_product
from logtools import get_logger

from .errors import (
    InternalCatViolation,
    InvariantError,
    NoComposition,
    PeifferViolated,
    Q2NotInvertible,
)
from .iterated import IteratedKind, build_iterated, composable_strings
from .morphism_map import MorphismMap, failure_witness, tabulate
from .reflgraph import (
    CrossedModule,
    GraphMorphism,
    ReflexiveGraph,
    check_peiffer,
    prex_to_reflgraph,
    reflgraph_to_prex,
)
from .splitepi import kernel_object

logger = get_logger(__name__)


@dataclass(frozen=True)
class InternalCat:
    """A reflexive graph with its composition.

    Attributes:
        graph: The underlying reflexive graph (i, s, t).
        square: A□_B A as the fibre product of s and t.
        d: The composition A□_B A → A, keyed by pairs (a, a').
    """

    graph: ReflexiveGraph
    square: FibreProduct
    d: MorphismMap

    def compose(self, a: int, a2: int) -> int:
        return self.d((a, a2))


def composition_square(rg: ReflexiveGraph) -> FibreProduct:
    """A□_B A: pairs (a, a') with s(a) = t(a')."""
    return fibre_product(rg.s, rg.t)


def _tabulate_d(rg: ReflexiveGraph, square: FibreProduct, d: Mapping[tuple[int, int], int]) -> MorphismMap:
    return tabulate("A□_B A", "A", square.pairs, tuple(rg.total.morphisms), lambda pair: d[pair])


def check_unit_laws(ic: InternalCat) -> OracleReport:
    """d(a, i s(a)) = a and d(i t(a), a) = a for every a."""
    rg = ic.graph
    for a in rg.total.morphisms:
        if ic.compose(a, rg.i(rg.s(a))) != a:
            return OracleReport(False, a + 1, (a,), note="d(a, i s a) ≠ a")
        if ic.compose(rg.i(rg.t(a)), a) != a:
            return OracleReport(False, a + 1, (a,), note="d(i t a, a) ≠ a")
    return OracleReport(True, rg.total.size, note="unit laws")


def check_source_target(ic: InternalCat) -> OracleReport:
    """s d = s p₂ and t d = t p₁ on A□_B A."""
    rg = ic.graph
    for checked, (a, a2) in enumerate(ic.square.pairs, start=1):
        composite = ic.compose(a, a2)
        if rg.s(composite) != rg.s(a2) or rg.t(composite) != rg.t(a):
            return OracleReport(False, checked, (a, a2), note="s d ≠ s p₂ or t d ≠ t p₁")
    return OracleReport(True, len(ic.square.pairs), note="s d = s p₂, t d = t p₁")


def check_interchange(ic: InternalCat) -> OracleReport:
    """d(a·c, a'·c') = d(a, a')·d(c, c') on every composable pair of A□_B A."""
    A, square = ic.graph.total, ic.square
    cat = square.category
    checked = 0
    for u, v in cat.composable_pairs():
        checked += 1
        (a, a2), (c, c2) = square.pairs[u], square.pairs[v]
        if ic.compose(A.compose(a, c), A.compose(a2, c2)) != A.compose(ic.compose(a, a2), ic.compose(c, c2)):
            return OracleReport(False, checked, ((a, a2), (c, c2)), note="interchange fails")
    return OracleReport(True, checked, note="interchange")


def check_associativity(ic: InternalCat) -> OracleReport:
    """d(d(a, a'), a'') = d(a, d(a', a'')) on A□_B A□_B A."""
    checked = 0
    for a, a2, a3 in composable_strings(ic.graph, 3):
        checked += 1
        if ic.compose(ic.compose(a, a2), a3) != ic.compose(a, ic.compose(a2, a3)):
            return OracleReport(False, checked, (a, a2, a3), note="d is not associative")
    return OracleReport(True, checked, note="associativity")


def internal_cat_reports(ic: InternalCat) -> list[OracleReport]:
    """Every internal-category law, in the order validate_internal_cat checks them."""
    return [
        check_unit_laws(ic),
        check_source_target(ic),
        check_interchange(ic),
        check_associativity(ic),
    ]


def validate_internal_cat(rg: ReflexiveGraph, d: Mapping[tuple[int, int], int]) -> InternalCat:
    """Checks a composition table against every internal-category law.

    Args:
        rg: A valid reflexive graph.
        d: d(a, a') for every pair with s(a) = t(a').

    Returns:
        InternalCat: The validated internal category.

    Raises:
        InternalCatViolation: If d is partial or breaks a law, with its witness.
    """
    square = composition_square(rg)
    missing = [pair for pair in square.pairs if pair not in d]
    if missing:
        raise InternalCatViolation("Composition undefined on a composable pair", missing[0])
    stray = sorted(pair for pair in d if square.index_of(pair) is None)
    if stray:
        raise InternalCatViolation("Composition given on a pair with s(a) ≠ t(a')", stray[0])
    ic = InternalCat(rg, square, _tabulate_d(rg, square, d))
    for report in internal_cat_reports(ic):
        if not report:
            raise InternalCatViolation(report.note, report.witness)
    return ic


def build_composition_d(rg: ReflexiveGraph) -> InternalCat:
    """Constructs the unique composition of a reflexive graph, if there is one.

    With q₂ inverted exhaustively, d(a, a') = y·a' for (y, a') = q₂⁻¹(a, a').
    Existence is decided on the pairs (a, y) with y in the kernel: d must send
    (i t(a)·y, a) to a·y.

    Args:
        rg: A reflexive graph with invertible q.

    Returns:
        InternalCat: The graph with its composition.

    Raises:
        Q2NotInvertible: If q₂ is not bijective.
        NoComposition: With the first (a, y) where the existence check fails.
    """
    q2 = build_iterated(IteratedKind.Q, rg, 2)
    if not q2.bijective:
        raise Q2NotInvertible("q₂: (A□_B I)A → A□_B A is not invertible", failure_witness(q2))
    A = rg.total
    kernel = kernel_object(rg.pair)

    for a in A.morphisms:
        for y in kernel.members:
            if A.src[a] != A.tgt[y]:
                continue
            u = A.compose(rg.i(rg.t(a)), y)
            y_star, _ = q2.preimage((u, a))
            if A.compose(y_star, a) != A.compose(a, y):
                logger.info(f"No composition: fails at ({A.names[a]}, {A.names[y]})")
                raise NoComposition("d(i t(a)·y, a) ≠ a·y", (a, y))

    square = composition_square(rg)
    d = {}
    for a, a2 in square.pairs:
        y, _ = q2.preimage((a, a2))
        d[(a, a2)] = A.compose(y, a2)
    try:
        return validate_internal_cat(rg, d)
    except InternalCatViolation as err:
        raise NoComposition(str(err.args[0]), err.witness) from err


def check_d_closed_form(ic: InternalCat, inv: InverseMap) -> OracleReport:
    """Compares d with a·i(t(a')⁻¹)·a' over a groupoid base."""
    rg, A = ic.graph, ic.graph.total
    for checked, (a, a2) in enumerate(ic.square.pairs, start=1):
        closed = A.compose_all([a, rg.i(inv(rg.t(a2))), a2])
        if closed != ic.compose(a, a2):
            return OracleReport(False, checked, (a, a2), note="d ≠ a·i(t(a')⁻¹)·a'")
    return OracleReport(True, len(ic.square.pairs), note="d = a·i(t(a')⁻¹)·a'")


def xmod_to_relcat(xm: CrossedModule) -> InternalCat:
    """The internal category of a crossed module, on its semidirect product."""
    report = check_peiffer(xm.precrossed)
    if not report:
        raise PeifferViolated(report.note, report.witness)
    rg = prex_to_reflgraph(xm.precrossed)
    try:
        return build_composition_d(rg)
    except NoComposition as err:
        raise InvariantError("A crossed module yielded no composition", err.witness) from err


def relcat_to_xmod(ic: InternalCat) -> CrossedModule:
    """The crossed module of an internal category.

    Raises:
        QNotInvertible: If q is not bijective.
    """
    pxm = reflgraph_to_prex(ic.graph)
    report = check_peiffer(pxm)
    if not report:
        raise InvariantError("The kernel of an internal category fails Peiffer", report.witness)
    return CrossedModule(pxm)


def check_graph_morphism_is_functor(morphism: GraphMorphism, source: InternalCat, target: InternalCat) -> OracleReport:
    """Checks d'(α a, α a') = α d(a, a') on every pair of A□_B A."""
    alpha = morphism.alpha
    for checked, (a, a2) in enumerate(source.square.pairs, start=1):
        if target.compose(alpha(a), alpha(a2)) != alpha(source.compose(a, a2)):
            return OracleReport(False, checked, (a, a2), note="α does not preserve d")
    return OracleReport(True, len(source.square.pairs), note="α preserves d")
