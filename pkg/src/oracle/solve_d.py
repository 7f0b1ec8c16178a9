"""Search for compositions d of a reflexive graph, independently of q₂.

The unit laws fix d on the pairs (a, i s a) and (i t a, a); functoriality on
A□_B A propagates known values, and the search branches on the first
undetermined pair only when propagation stalls.
"""

from common import OracleReport
from equivalences import ReflexiveGraph, composition_square
from fincat import UNDEFINED, FunctorError, validate_functor
from logtools import get_logger

from .search import TableSearch

logger = get_logger(__name__)


class _Contradiction(Exception):
    pass


def solve_d_by_search(rg: ReflexiveGraph, search: TableSearch | None = None) -> OracleReport:
    """Counts the functors d: A□_B A → A satisfying both unit laws.

    Args:
        rg: A reflexive graph.
        search: The search whose budget bounds the branching.

    Returns:
        OracleReport: ``checked`` is the number of pairs of A□_B A decided,
        ``solutions`` the count and ``solution`` the table
        (over the pairs of A□_B A) when it is unique; ok unless two or more
        solutions were found, with the first pair where two of them differ.

    Raises:
        BudgetExceeded: If branching exhausts the budget.
    """
    search = search or TableSearch()
    A = rg.total
    square = composition_square(rg)
    cat = square.category
    products = list(cat.composable_pairs())

    def assign(d: list[int], u: int, value: int) -> bool:
        if d[u] == UNDEFINED:
            d[u] = value
            return True
        if d[u] != value:
            raise _Contradiction
        return False

    def propagate(d: list[int]) -> None:
        changed = True
        while changed:
            changed = False
            for u, v in products:
                if d[u] == UNDEFINED or d[v] == UNDEFINED:
                    continue
                if A.tgt[d[v]] != A.src[d[u]]:
                    raise _Contradiction
                changed |= assign(d, cat.table[u][v], A.table[d[u]][d[v]])

    start = [UNDEFINED] * cat.size
    try:
        for a in A.morphisms:
            assign(start, square.index_of((a, rg.i(rg.s(a)))), a)
            assign(start, square.index_of((rg.i(rg.t(a)), a)), a)
    except _Contradiction:
        decided = sum(value != UNDEFINED for value in start)
        return OracleReport(True, decided, note="unit laws contradict each other", solutions=0)

    found: list[tuple[int, ...]] = []

    def explore(d: list[int]) -> None:
        try:
            propagate(d)
        except _Contradiction:
            return
        open_cells = [u for u in range(cat.size) if d[u] == UNDEFINED]
        if not open_cells:
            try:
                validate_functor(d, cat, A)
            except FunctorError:
                return
            found.append(tuple(d))
            return
        u = open_cells[0]
        a, a2 = square.pairs[u]
        for value in A.hom(A.src[a2], A.tgt[a]):
            search.tick()
            branch = list(d)
            branch[u] = value
            explore(branch)

    explore(start)
    logger.debug(f"d search found {len(found)} solution(s) after {search.evaluations} evaluations")
    if len(found) >= 2:
        first, second = found[0], found[1]
        u = next(k for k in range(cat.size) if first[k] != second[k])
        return OracleReport(False, cat.size, square.pairs[u], note="d is not unique", solutions=len(found))
    return OracleReport(
        True,
        cat.size,
        note="d is unique" if found else "no composition",
        solutions=len(found),
        solution=found[0] if found else None,
    )
