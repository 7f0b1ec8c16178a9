"""The named verifiers behind ``xmodkit check``.

Each checker takes the structure loaded (non-strictly) from a document and
returns one OracleReport; multi-part checks stop at the first failing part.
"""

from enum import Enum
from typing import Callable

from common import OracleReport
from distlaw import ActionSystem, SplitEpiPair, semidirect_product
from equivalences import (
    MAX_N,
    CrossedModule,
    InternalCat,
    IteratedKind,
    PreCrossedModule,
    ReflexiveGraph,
    build_composition_d,
    build_iterated,
    build_q,
    check_b2_unit_identities,
    check_bn_qn_biconditional,
    check_bn_square,
    check_interchange,
    check_peiffer,
    check_precrossed,
    check_qn_factorization,
    failure_witness,
    prex_to_reflgraph,
)
from oracle import TableSearch, solve_d_by_search

from .documents import DocumentError


class Property(str, Enum):
    PEIFFER = "peiffer"
    PRECROSSED = "precrossed"
    Q_INVERTIBLE = "q-invertible"
    BN = "bn"
    HN = "hn"
    QN = "qn"
    INTERCHANGE = "interchange"
    D_UNIQUE = "d-unique"


def _precrossed(structure) -> PreCrossedModule:
    if isinstance(structure, CrossedModule):
        return structure.precrossed
    if isinstance(structure, PreCrossedModule):
        return structure
    raise DocumentError("This check needs a prexmod or xmod document")


def _graph(structure) -> ReflexiveGraph:
    if isinstance(structure, InternalCat):
        return structure.graph
    if isinstance(structure, ReflexiveGraph):
        return structure
    return prex_to_reflgraph(_precrossed(structure))


def _pair(structure) -> SplitEpiPair:
    if isinstance(structure, SplitEpiPair):
        return structure
    if isinstance(structure, ActionSystem):
        return semidirect_product(structure).pair
    return _graph(structure).pair


def _first_failure(reports: list[OracleReport], note: str) -> OracleReport:
    for report in reports:
        if not report:
            return report
    return OracleReport(True, sum(r.checked for r in reports), note=note)


def _bijective(kind: IteratedKind, structure, n: int) -> OracleReport:
    m = build_iterated(kind, structure, n)
    if not m.bijective:
        return OracleReport(False, len(m.domain), failure_witness(m), note=f"{kind.value}_{n} is not bijective")
    return OracleReport(True, len(m.domain), note=f"{kind.value}_{n} is bijective")


def check_q_invertible(structure, search: TableSearch) -> OracleReport:
    q = build_q(_pair(structure))
    if not q.bijective:
        return OracleReport(False, len(q.domain), failure_witness(q), note="q is not bijective")
    return OracleReport(True, len(q.domain), note="q is bijective")


def check_bn(structure, search: TableSearch) -> OracleReport:
    pxm = _precrossed(structure)
    reports = [check_bn_square(pxm, n) for n in range(MAX_N)]
    reports += [check_bn_qn_biconditional(pxm, n) for n in range(1, MAX_N + 1)]
    reports.append(check_b2_unit_identities(pxm))
    return _first_failure(reports, "b_n squares commute and agree with q_n")


def check_hn(structure, search: TableSearch) -> OracleReport:
    rg = _graph(structure)
    return _first_failure([_bijective(IteratedKind.H, rg, n) for n in range(1, MAX_N + 1)], "h_n are bijective")


def check_qn(structure, search: TableSearch) -> OracleReport:
    if isinstance(structure, (SplitEpiPair, ActionSystem)):
        # without a t leg only q_1 is defined
        return _bijective(IteratedKind.Q, _pair(structure), 1)
    rg = _graph(structure)
    reports = [_bijective(IteratedKind.Q, rg, n) for n in range(1, MAX_N + 1)]
    reports += [check_qn_factorization(rg, n) for n in range(1, MAX_N)]
    return _first_failure(reports, "q_n are bijective and factor through h_n")


def check_interchange_law(structure, search: TableSearch) -> OracleReport:
    ic = structure if isinstance(structure, InternalCat) else build_composition_d(_graph(structure))
    return check_interchange(ic)


def check_d_unique(structure, search: TableSearch) -> OracleReport:
    return solve_d_by_search(_graph(structure), search)


CHECKS: dict[Property, Callable[[object, TableSearch], OracleReport]] = {
    Property.PEIFFER: lambda structure, search: check_peiffer(_precrossed(structure)),
    Property.PRECROSSED: lambda structure, search: check_precrossed(
        _precrossed(structure).action, _precrossed(structure).kappa
    ),
    Property.Q_INVERTIBLE: check_q_invertible,
    Property.BN: check_bn,
    Property.HN: check_hn,
    Property.QN: check_qn,
    Property.INTERCHANGE: check_interchange_law,
    Property.D_UNIQUE: check_d_unique,
}


def run_check(prop: Property | str, structure, search: TableSearch) -> OracleReport:
    """Runs one named verifier."""
    return CHECKS[Property(prop)](structure, search)
