"""Reflexive graphs of categories and pre-crossed modules, and the functors between them."""

from dataclasses import dataclass
from typing import Mapping, Sequence

from common import OracleReport
from distlaw import ActionSystem, NotSplit, SplitEpiPair, semidirect_product
from fincat import FinCatX, IdOnObjFunctor, validate_functor
from logtools import get_logger

from .errors import (
    InvariantError,
    NotAGraphMorphism,
    PeifferViolated,
    PreCrossedViolated,
)
from .splitepi import kernel_object, splitepi_to_distlaw, validate_splitepi

logger = get_logger(__name__)


@dataclass(frozen=True)
class ReflexiveGraph:
    """A split pair (i, s) with a second retraction t of i.

    Attributes:
        pair: The split pair (A, B, i, s).
        t: The target functor A → B with t∘i = 1.
    """

    pair: SplitEpiPair
    t: IdOnObjFunctor

    @property
    def total(self) -> FinCatX:
        return self.pair.total

    @property
    def base(self) -> FinCatX:
        return self.pair.base

    @property
    def i(self) -> IdOnObjFunctor:
        return self.pair.i

    @property
    def s(self) -> IdOnObjFunctor:
        return self.pair.s


@dataclass(frozen=True)
class PreCrossedModule:
    """An action of B on the bundle Y with κ: Y → B and κ(b▷y)·b = b·κ(y)."""

    action: ActionSystem
    kappa: IdOnObjFunctor

    @property
    def base(self) -> FinCatX:
        return self.action.base

    @property
    def fiber(self) -> FinCatX:
        return self.action.fiber


@dataclass(frozen=True)
class CrossedModule:
    """A pre-crossed module satisfying the Peiffer identity."""

    precrossed: PreCrossedModule

    @property
    def action(self) -> ActionSystem:
        return self.precrossed.action

    @property
    def kappa(self) -> IdOnObjFunctor:
        return self.precrossed.kappa

    @property
    def base(self) -> FinCatX:
        return self.precrossed.base

    @property
    def fiber(self) -> FinCatX:
        return self.precrossed.fiber


def validate_reflexive_graph(
    total: FinCatX,
    base: FinCatX,
    i: Sequence[int] | Mapping[int, int],
    s: Sequence[int] | Mapping[int, int],
    t: Sequence[int] | Mapping[int, int],
) -> ReflexiveGraph:
    """Validates a reflexive graph (i, s, t) with invertible q.

    Raises:
        FunctorError: If i, s or t is not a functor.
        NotSplit: If s∘i or t∘i is not the identity.
        QNotInvertible: If q is not bijective.
    """
    pair = validate_splitepi(total, base, i, s)
    t_functor = validate_functor(t, total, base)
    for b in base.morphisms:
        if t_functor(pair.i(b)) != b:
            raise NotSplit(f"t(i({base.names[b]})) ≠ {base.names[b]}", (b,))
    return ReflexiveGraph(pair, t_functor)


def check_precrossed(action: ActionSystem, kappa: IdOnObjFunctor) -> OracleReport:
    """Checks κ(b▷y)·b = b·κ(y) on every composable (b, y)."""
    B = action.base
    checked = 0
    for b, y in action.composable_pairs():
        checked += 1
        if B.compose(kappa(action.act(b, y)), b) != B.compose(b, kappa(y)):
            logger.info(f"Pre-crossed condition fails at ({B.names[b]}, {action.fiber.names[y]})")
            return OracleReport(False, checked, (b, y), note="κ(b▷y)·b ≠ b·κ(y)")
    return OracleReport(True, checked, note="κ(b▷y)·b = b·κ(y)")


def validate_precrossed(
    action: ActionSystem, kappa: Sequence[int] | Mapping[int, int]
) -> PreCrossedModule:
    """Validates κ as a functor Y → B and the pre-crossed condition.

    Raises:
        FunctorError: If κ is not a functor.
        PreCrossedViolated: With the first failing (b, y).
    """
    kappa_functor = validate_functor(kappa, action.fiber, action.base)
    report = check_precrossed(action, kappa_functor)
    if not report:
        raise PreCrossedViolated(report.note, report.witness)
    return PreCrossedModule(action, kappa_functor)


def check_peiffer(pxm: PreCrossedModule) -> OracleReport:
    """Checks (κ(y)▷y')·y = y·y' for every pair of fiber morphisms at the same object.

    Args:
        pxm: A valid pre-crossed module.

    Returns:
        OracleReport: With witness (y, y') on the first failing pair.
    """
    Y, act = pxm.fiber, pxm.action.act
    checked = 0
    for y in Y.morphisms:
        for y2 in Y.morphisms:
            if Y.src[y] != Y.src[y2]:
                continue
            checked += 1
            if Y.compose(act(pxm.kappa(y), y2), y) != Y.compose(y, y2):
                logger.info(f"Peiffer identity fails at ({Y.names[y]}, {Y.names[y2]})")
                return OracleReport(False, checked, (y, y2), note="(κ(y)▷y')·y ≠ y·y'")
    return OracleReport(True, checked, note="(κ(y)▷y')·y = y·y'")


def validate_crossed_module(
    action: ActionSystem, kappa: Sequence[int] | Mapping[int, int]
) -> CrossedModule:
    """Validates a pre-crossed module and then the Peiffer identity.

    Raises:
        PreCrossedViolated: If κ(b▷y)·b = b·κ(y) fails.
        PeifferViolated: With the first failing pair (y, y').
    """
    pxm = validate_precrossed(action, kappa)
    report = check_peiffer(pxm)
    if not report:
        raise PeifferViolated(report.note, report.witness)
    return CrossedModule(pxm)


def reflgraph_to_prex(rg: ReflexiveGraph) -> PreCrossedModule:
    """The pre-crossed module of a reflexive graph: its kernel action with κ = t∘p_A.

    Raises:
        QNotInvertible: If q is not bijective.
    """
    action = splitepi_to_distlaw(rg.pair)
    kernel = kernel_object(rg.pair)
    kappa = validate_functor(tuple(rg.t(a) for a in kernel.members), action.fiber, rg.base)
    report = check_precrossed(action, kappa)
    if not report:
        raise InvariantError("The kernel of a reflexive graph is not pre-crossed", report.witness)
    return PreCrossedModule(action, kappa)


def prex_to_reflgraph(pxm: PreCrossedModule) -> ReflexiveGraph:
    """The reflexive graph on the semidirect product with t(y, b) = κ(y)·b.

    Raises:
        PreCrossedViolated: If the pre-crossed condition fails, so t is no functor.
    """
    report = check_precrossed(pxm.action, pxm.kappa)
    if not report:
        raise PreCrossedViolated(report.note, report.witness)
    product = semidirect_product(pxm.action)
    B = pxm.base
    t = validate_functor(
        tuple(B.compose(pxm.kappa(y), b) for y, b in product.coordinates),
        product.total,
        B,
    )
    return ReflexiveGraph(product.pair, t)


@dataclass(frozen=True)
class GraphMorphism:
    """A morphism of reflexive graphs: β on bases, α on totals, commuting with i, s, t."""

    source: ReflexiveGraph
    target: ReflexiveGraph
    beta: IdOnObjFunctor
    alpha: IdOnObjFunctor


def validate_graph_morphism(
    source: ReflexiveGraph,
    target: ReflexiveGraph,
    beta: Sequence[int] | Mapping[int, int],
    alpha: Sequence[int] | Mapping[int, int],
) -> GraphMorphism:
    """Checks α i = i' β, β s = s' α and β t = t' α.

    Raises:
        FunctorError: If α or β is not a functor.
        NotAGraphMorphism: With the first morphism where a square fails.
    """
    beta_f = validate_functor(beta, source.base, target.base)
    alpha_f = validate_functor(alpha, source.total, target.total)
    for b in source.base.morphisms:
        if alpha_f(source.i(b)) != target.i(beta_f(b)):
            raise NotAGraphMorphism("α∘i ≠ i'∘β", (b,))
    for a in source.total.morphisms:
        if beta_f(source.s(a)) != target.s(alpha_f(a)):
            raise NotAGraphMorphism("β∘s ≠ s'∘α", (a,))
        if beta_f(source.t(a)) != target.t(alpha_f(a)):
            raise NotAGraphMorphism("β∘t ≠ t'∘α", (a,))
    return GraphMorphism(source, target, beta_f, alpha_f)
