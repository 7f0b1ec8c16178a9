"""The one-object categories the sweeps run over: every monoid up to isomorphism.

Monoids of a given order are generated as associative multiplication tables
with a fixed identity, then reduced to one representative per isomorphism
class. The familiar ones keep their names; the rest are numbered.
"""

from functools import cache
from itertools import permutations, product
from typing import Iterator

from fincat import FinCatX, cyclic_group, idempotent_with_involution, klein_four, one_object, semilattice
from logtools import get_logger

from .search import TableSearch

logger = get_logger(__name__)

MAX_ORDER = 4

# Element 0 is the identity; a table lists x·y for x, y in 1..order-1, row by row.
Table = tuple[int, ...]

_NAMED = (
    ("trivial", lambda: cyclic_group(1)),
    ("Z2", lambda: cyclic_group(2)),
    ("semilattice", semilattice),
    ("Z3", lambda: cyclic_group(3)),
    ("monoid3", idempotent_with_involution),
    ("Z4", lambda: cyclic_group(4)),
    ("V4", klein_four),
)

_ELEMENTS = ("1", "a", "b", "c")


def _multiply(order: int, table: Table, x: int, y: int) -> int | None:
    if x == 0:
        return y
    if y == 0:
        return x
    k = (x - 1) * (order - 1) + (y - 1)
    return table[k] if k < len(table) else None


def _associative_tables(order: int, search: TableSearch) -> Iterator[Table]:
    cells = (order - 1) ** 2
    elements = range(1, order)

    def consistent(partial: list[int], k: int) -> bool:
        for x, y, z in product(elements, repeat=3):
            xy, yz = _multiply(order, partial, x, y), _multiply(order, partial, y, z)
            if xy is None or yz is None:
                continue
            left, right = _multiply(order, partial, xy, z), _multiply(order, partial, x, yz)
            if left is not None and right is not None and left != right:
                return False
        return True

    yield from search.solutions([range(order)] * cells, consistent)


def canonical_table(order: int, table: Table) -> Table:
    """The least relabelling of a monoid table under permutations fixing the identity."""
    best = None
    for perm in permutations(range(1, order)):
        relabel = (0, *perm)
        inverse = [0] * order
        for x, image in enumerate(relabel):
            inverse[image] = x
        key = tuple(
            relabel[_multiply(order, table, inverse[x], inverse[y])]
            for x in range(1, order)
            for y in range(1, order)
        )
        if best is None or key < best:
            best = key
    return best


def monoid_table(c: FinCatX) -> Table:
    """The table of a one-object category, its identity relabelled to 0."""
    unit = c.identities[0]
    labels = [unit, *(f for f in c.morphisms if f != unit)]
    position = {f: k for k, f in enumerate(labels)}
    return tuple(position[c.table[labels[x]][labels[y]]] for x in range(1, c.size) for y in range(1, c.size))


def build_monoid(order: int, table: Table) -> FinCatX:
    """Builds the one-object category with elements 1, a, b, c from a table."""
    names = _ELEMENTS[:order]
    return one_object(
        names,
        lambda g, f: names[_multiply(order, table, names.index(g), names.index(f))],
        unit="1",
    )


@cache
def monoid_classes(order: int) -> tuple[Table, ...]:
    """One canonical table per isomorphism class of monoids of the given order.

    Args:
        order: Number of elements, 1 to MAX_ORDER.

    Returns:
        tuple[Table, ...]: Canonical tables, in increasing order.
    """
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"Monoid order must lie between 1 and {MAX_ORDER}, got {order}")
    search = TableSearch()
    classes = sorted({canonical_table(order, table) for table in _associative_tables(order, search)})
    logger.debug(f"{len(classes)} monoids of order {order} after {search.evaluations} evaluations")
    return tuple(classes)


def small_catalogue(max_order: int = MAX_ORDER) -> dict[str, FinCatX]:
    """Every monoid on one object up to max_order elements, up to isomorphism.

    Within each order the named structures come first, then the others as
    ``M<order>.<k>`` in order of their canonical tables.

    Args:
        max_order: Largest number of morphisms to include, at most MAX_ORDER.

    Returns:
        dict[str, FinCatX]: Name to category, smallest first.
    """
    catalogue: dict[str, FinCatX] = {}
    for order in range(1, min(max_order, MAX_ORDER) + 1):
        named = {}
        for name, build in _NAMED:
            category = build()
            if category.size == order:
                named[canonical_table(order, monoid_table(category))] = (name, category)
        catalogue.update(named.values())
        unnamed = [table for table in monoid_classes(order) if table not in named]
        for k, table in enumerate(unnamed, start=1):
            catalogue[f"M{order}.{k}"] = build_monoid(order, table)
    return catalogue
