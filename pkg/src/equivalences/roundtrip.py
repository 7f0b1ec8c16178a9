"""Round trips through the equivalences, checked against the comparison isomorphisms.

Going geometric → algebraic → geometric, the comparison is φ(y, b) = y·i(b)
from the rebuilt semidirect product back onto A. Going algebraic → geometric →
algebraic, it is f(y) = (y, 1) onto the kernel of the semidirect product.
"""

from enum import Enum

from common import OracleReport
from distlaw import ActionSystem, SplitEpiPair, semidirect_product
from fincat import FunctorError, validate_functor
from logtools import get_logger

from .errors import StructureMismatch
from .morphism_map import failure_witness, tabulate
from .reflgraph import (
    CrossedModule,
    PreCrossedModule,
    ReflexiveGraph,
    prex_to_reflgraph,
    reflgraph_to_prex,
)
from .relcat import InternalCat, relcat_to_xmod, xmod_to_relcat
from .splitepi import kernel_object, splitepi_to_distlaw

logger = get_logger(__name__)


class RoundTrip(str, Enum):
    SPLITEPI = "splitepi"
    DISTLAW = "distlaw"


def _geometric_round_trip(instance) -> OracleReport:
    if isinstance(instance, InternalCat):
        pair, graph = instance.graph.pair, instance.graph
        rebuilt_ic = xmod_to_relcat(relcat_to_xmod(instance))
        rebuilt_graph = rebuilt_ic.graph
    elif isinstance(instance, ReflexiveGraph):
        pair, graph, rebuilt_ic = instance.pair, instance, None
        rebuilt_graph = prex_to_reflgraph(reflgraph_to_prex(instance))
    else:
        pair, graph, rebuilt_ic, rebuilt_graph = instance, None, None, None

    kernel = kernel_object(pair)
    product = semidirect_product(splitepi_to_distlaw(pair))
    rebuilt = rebuilt_graph.pair if rebuilt_graph is not None else product.pair
    A, total, coordinates = pair.total, rebuilt.total, product.coordinates

    phi = tabulate(
        "Y□B",
        "A",
        tuple(total.morphisms),
        tuple(A.morphisms),
        lambda c: A.compose(kernel.members[coordinates[c][0]], pair.i(coordinates[c][1])),
    )
    checked = total.size
    if not phi.bijective:
        return OracleReport(False, checked, failure_witness(phi), note="φ is not bijective")
    try:
        validate_functor(phi.table, total, A)
    except FunctorError as err:
        return OracleReport(False, checked, err.witness, note=f"φ is not a functor: {err.args[0]}")
    for b in pair.base.morphisms:
        if phi(rebuilt.i(b)) != pair.i(b):
            return OracleReport(False, checked, (b,), note="φ∘i' ≠ i")
    for c in total.morphisms:
        if pair.s(phi(c)) != rebuilt.s(c):
            return OracleReport(False, checked, (c,), note="s∘φ ≠ s'")
        if graph is not None and graph.t(phi(c)) != rebuilt_graph.t(c):
            return OracleReport(False, checked, (c,), note="t∘φ ≠ t'")
    if rebuilt_ic is not None:
        for c, c2 in rebuilt_ic.square.pairs:
            if phi(rebuilt_ic.compose(c, c2)) != instance.compose(phi(c), phi(c2)):
                return OracleReport(False, checked, (c, c2), note="φ∘d' ≠ d∘(φ□φ)")
    return OracleReport(True, checked, note="φ is an isomorphism over B")


def _algebraic_round_trip(instance) -> OracleReport:
    kappa = None
    if isinstance(instance, CrossedModule):
        action, kappa = instance.action, instance.kappa
        back = relcat_to_xmod(xmod_to_relcat(instance))
        rebuilt_action, rebuilt_kappa = back.action, back.kappa
    elif isinstance(instance, PreCrossedModule):
        action, kappa = instance.action, instance.kappa
        back = reflgraph_to_prex(prex_to_reflgraph(instance))
        rebuilt_action, rebuilt_kappa = back.action, back.kappa
    else:
        action = instance
        rebuilt_action, rebuilt_kappa = splitepi_to_distlaw(semidirect_product(action).pair), None

    product = semidirect_product(action)
    kernel = kernel_object(product.pair)
    Y, K = action.fiber, rebuilt_action.fiber
    f = tabulate(
        "Y",
        "A□_B I",
        tuple(Y.morphisms),
        tuple(K.morphisms),
        lambda y: kernel.position(product.embedding(y)),
    )
    checked = sum(1 for _ in action.composable_pairs())
    if not f.bijective:
        return OracleReport(False, checked, failure_witness(f), note="f is not bijective")
    try:
        validate_functor(f.table, Y, K)
    except FunctorError as err:
        return OracleReport(False, checked, err.witness, note=f"f is not a functor: {err.args[0]}")
    for b, y in action.composable_pairs():
        if f(action.act(b, y)) != rebuilt_action.act(b, f(y)):
            return OracleReport(False, checked, (b, y), note="f(b▷y) ≠ b▷'f(y)")
    if kappa is not None:
        for y in Y.morphisms:
            if rebuilt_kappa(f(y)) != kappa(y):
                return OracleReport(False, checked, (y,), note="κ'∘f ≠ κ")
    return OracleReport(True, checked, note="f is an isomorphism of actions")


def natural_iso_check(direction: RoundTrip, instance) -> OracleReport:
    """Runs a round trip and checks the comparison isomorphism pointwise.

    Args:
        direction: SPLITEPI for a SplitEpiPair, ReflexiveGraph or InternalCat;
            DISTLAW for an ActionSystem, PreCrossedModule or CrossedModule.
        instance: The structure to send around.

    Returns:
        OracleReport: ``checked`` counts the morphisms of the rebuilt total
        category (SPLITEPI) or the composable pairs (b, y) (DISTLAW).

    Raises:
        StructureMismatch: If the instance does not belong to the direction.
    """
    direction = RoundTrip(direction)
    if direction is RoundTrip.SPLITEPI:
        if not isinstance(instance, (SplitEpiPair, ReflexiveGraph, InternalCat)):
            raise StructureMismatch("A geometric round trip needs a split pair, graph or internal category")
        report = _geometric_round_trip(instance)
    else:
        if not isinstance(instance, (ActionSystem, PreCrossedModule, CrossedModule)):
            raise StructureMismatch("An algebraic round trip needs an action or a (pre-)crossed module")
        report = _algebraic_round_trip(instance)
    logger.debug(f"Round trip {direction.value}: ok={report.ok}, checked={report.checked}")
    return report
