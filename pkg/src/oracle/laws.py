"""Independent law checkers: pullbacks, distributive-law equations and induced multiplication."""

from itertools import product

from common import OracleReport
from distlaw import DistLawMap
from fincat import FinCatX, check_category
from spans import FiniteMap, span_product


def brute_force_pullback(f: FiniteMap, g: FiniteMap) -> list[tuple[int, int]]:
    """Every (a, c) with f(a) = g(c), by testing the whole product A×C."""
    return [
        (a, c)
        for a, c in product(range(f.domain_size), range(g.domain_size))
        if f(a) == g(c)
    ]


def check_distlaw_equations(x: DistLawMap) -> OracleReport:
    """Checks the unit and multiplicativity equations of a distributive law pointwise.

    * x(1, y) = (y, 1) and x(b, 1) = (1, b);
    * x(b·b', y) is x(b, ·) applied after x(b', y), re-multiplied in B;
    * x(b, y·y') is x(·, y') applied after x(b, y), re-multiplied in Y.

    Returns:
        OracleReport: Witness is the first failing (b, y), (b, y), (b, b', y)
        or (b, y, y') tuple, checked in that order.
    """
    B, Y = x.base, x.fiber
    checked = 0
    for y in Y.morphisms:
        checked += 1
        unit = B.identities[Y.tgt[y]]
        if x(unit, y) != (y, unit):
            return OracleReport(False, checked, (unit, y), note="x(1, y) ≠ (y, 1)")
    for b in B.morphisms:
        checked += 1
        unit = Y.identities[B.src[b]]
        if x(b, unit) != (Y.identities[B.tgt[b]], b):
            return OracleReport(False, checked, (b, unit), note="x(b, 1) ≠ (1, b)")
    for b, b2 in B.composable_pairs():
        for y in Y.morphisms:
            if Y.tgt[y] != B.src[b2]:
                continue
            checked += 1
            y1, b1 = x(b2, y)
            y2, b3 = x(b, y1)
            if x(B.table[b][b2], y) != (y2, B.table[b3][b1]):
                return OracleReport(False, checked, (b, b2, y), note="x is not multiplicative in B")
    for b in B.morphisms:
        fibre = [y for y in Y.morphisms if Y.tgt[y] == B.src[b]]
        for y in fibre:
            for y_next in fibre:
                if Y.src[y] != Y.tgt[y_next]:
                    continue
                checked += 1
                y1, b1 = x(b, y)
                y2, b2 = x(b1, y_next)
                if x(b, Y.table[y][y_next]) != (Y.table[y1][y2], b2):
                    return OracleReport(False, checked, (b, y, y_next), note="x is not multiplicative in Y")
    return OracleReport(True, checked, note="distributive law equations")


def generic_distlaw_multiplication(x: DistLawMap) -> FinCatX:
    """The category on Y⊗B whose composition is read off x alone.

    (y, b)·(y', b') = (y·y'', b''·b') where x(b, y') = (y'', b''); morphism ids
    follow the span product, as in the semidirect product.
    """
    B, Y = x.base, x.fiber
    carrier = span_product(Y.span(), B.span())
    coordinates = carrier.provenance

    def compose(u: int, v: int) -> int:
        (y, b), (y2, b2) = coordinates[u], coordinates[v]
        moved, b_moved = x(b, y2)
        return carrier.index_of((Y.table[y][moved], B.table[b_moved][b2]))

    category = FinCatX.from_function(
        B.objects,
        names=[f"({Y.names[y]},{B.names[b]})" for y, b in coordinates],
        src=[B.src[b] for _, b in coordinates],
        tgt=[B.tgt[b] for _, b in coordinates],
        identities=[carrier.index_of((Y.identities[o], B.identities[o])) for o in range(B.objects.size)],
        compose=compose,
    )
    return check_category(category)
