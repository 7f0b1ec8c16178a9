"""Constructors for the small categories used by fixtures and enumerations.

One-object categories get the single object ``*``. Morphism ids follow the
sorted order of their names, so in-memory ids agree with the canonical file
order.
"""

from itertools import permutations
from typing import Callable, Sequence

from spans import ObjSet

from .fincat import FinCatX, check_category

SINGLE_OBJECT = "*"


def discrete(labels: Sequence[str]) -> FinCatX:
    """The discrete category D(X): identities only."""
    objects = ObjSet(tuple(labels))
    n = objects.size
    return FinCatX.from_function(
        objects,
        names=[f"1_{x}" for x in objects.labels],
        src=range(n),
        tgt=range(n),
        identities=range(n),
        compose=lambda g, f: f,
    )


def one_object(
    names: Sequence[str], product: Callable[[str, str], str], unit: str
) -> FinCatX:
    """A monoid as a one-object category.

    Args:
        names: Element names.
        product: product(g, f) is the name of g·f (f first).
        unit: Name of the neutral element.

    Returns:
        FinCatX: The validated one-object category.
    """
    ordered = sorted(names)
    index = {name: i for i, name in enumerate(ordered)}
    n = len(ordered)
    category = FinCatX.from_function(
        ObjSet((SINGLE_OBJECT,)),
        names=ordered,
        src=[0] * n,
        tgt=[0] * n,
        identities=[index[unit]],
        compose=lambda g, f: index[product(ordered[g], ordered[f])],
    )
    return check_category(category)


def monoid_from_table(table: dict[tuple[str, str], str], unit: str) -> FinCatX:
    """A one-object category from a full multiplication table keyed (g, f)."""
    names = {g for g, _ in table} | {f for _, f in table}
    return one_object(sorted(names), lambda g, f: table[(g, f)], unit)


def cyclic_group(n: int, generator: str = "g") -> FinCatX:
    """Z_n with elements 1, g, g2, …; n must stay below 10 for sorted ids."""

    def name(k: int) -> str:
        return "1" if k == 0 else (generator if k == 1 else f"{generator}{k}")

    exponent = {name(k): k for k in range(n)}
    return one_object(
        [name(k) for k in range(n)],
        lambda g, f: name((exponent[g] + exponent[f]) % n),
        unit="1",
    )


def klein_four() -> FinCatX:
    """Z₂×Z₂ with elements 1, a, b, c = ab."""
    bits = {"1": 0, "a": 1, "b": 2, "c": 3}
    names = {v: k for k, v in bits.items()}
    return one_object(list(bits), lambda g, f: names[bits[g] ^ bits[f]], unit="1")


def semilattice() -> FinCatX:
    """The two-element monoid {1, a} with a·a = a."""
    return one_object(["1", "a"], lambda g, f: "1" if g == f == "1" else "a", unit="1")


def idempotent_with_involution() -> FinCatX:
    """The monoid {1, g, a} with g² = 1, a² = a and ag = ga = a."""

    def product(g: str, f: str) -> str:
        if g == "1":
            return f
        if f == "1":
            return g
        if g == "g" and f == "g":
            return "1"
        return "a"

    return one_object(["1", "a", "g"], product, unit="1")


def cycle_notation(perm: tuple[int, ...]) -> str:
    """Cycle notation on points 1..n, e.g. ``(123)``; ``()`` for the identity."""
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, point = [], start
        while point not in seen:
            seen.add(point)
            cycle.append(str(point + 1))
            point = perm[point]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "()"


def _permutation_group(perms: list[tuple[int, ...]]) -> FinCatX:
    by_name = {cycle_notation(p): p for p in perms}
    to_name = {p: name for name, p in by_name.items()}

    def product(g: str, f: str) -> str:
        pg, pf = by_name[g], by_name[f]
        return to_name[tuple(pg[pf[i]] for i in range(len(pf)))]

    return one_object(list(by_name), product, unit="()")


def _is_even(perm: tuple[int, ...]) -> bool:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return inversions % 2 == 0


def symmetric_group(n: int) -> FinCatX:
    """S_n acting on 1..n, composed as functions (right factor first)."""
    return _permutation_group(list(permutations(range(n))))


def alternating_group(n: int) -> FinCatX:
    """A_n, the even permutations, with the same names as in symmetric_group."""
    return _permutation_group([p for p in permutations(range(n)) if _is_even(p)])


def indiscrete_groupoid(labels: Sequence[str]) -> FinCatX:
    """One morphism ``x->y`` for every pair of objects; ``x->x`` are identities."""
    objects = ObjSet(tuple(labels))
    n = objects.size
    pairs = [(x, y) for x in range(n) for y in range(n)]
    index = {pair: i for i, pair in enumerate(pairs)}
    return FinCatX.from_function(
        objects,
        names=[f"{objects.labels[x]}->{objects.labels[y]}" for x, y in pairs],
        src=[x for x, _ in pairs],
        tgt=[y for _, y in pairs],
        identities=[index[(x, x)] for x in range(n)],
        compose=lambda g, f: index[(pairs[f][0], pairs[g][1])],
    )


def bundle_of(labels: Sequence[str], fibres: Sequence[FinCatX]) -> FinCatX:
    """The bundle whose fibre over the k-th object is the k-th one-object category.

    Morphisms are named ``name@object`` and ordered object by object.
    """
    objects = ObjSet(tuple(labels))
    entries = [(x, m) for x, fibre in enumerate(fibres) for m in fibre.morphisms]
    index = {entry: i for i, entry in enumerate(entries)}
    return FinCatX.from_function(
        objects,
        names=[f"{fibres[x].names[m]}@{objects.labels[x]}" for x, m in entries],
        src=[x for x, _ in entries],
        tgt=[x for x, _ in entries],
        identities=[index[(x, fibres[x].identities[0])] for x in range(objects.size)],
        compose=lambda g, f: index[(entries[g][0], fibres[entries[g][0]].table[entries[g][1]][entries[f][1]])],
    )
