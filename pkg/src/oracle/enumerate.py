"""Exhaustive enumerators for functors, actions, (pre-)crossed modules and graph morphisms.

Every enumerator yields its results in lexicographic order of their tables and
raises BudgetExceeded instead of stopping early.
"""

from collections import defaultdict
from typing import Iterator

from distlaw import ActionSystem, validate_action
from equivalences import (
    CrossedModule,
    GraphMorphism,
    InternalCat,
    NotAGraphMorphism,
    PreCrossedModule,
    ReflexiveGraph,
    check_peiffer,
    check_precrossed,
    validate_graph_morphism,
)
from fincat import FinCatX, IdOnObjFunctor, validate_functor
from logtools import get_logger

from .search import TableSearch

logger = get_logger(__name__)


def enumerate_functors(
    dom: FinCatX, cod: FinCatX, search: TableSearch | None = None
) -> Iterator[IdOnObjFunctor]:
    """All identity-on-objects functors dom → cod.

    Args:
        dom: The domain category.
        cod: The codomain category, over the same objects.
        search: The search (and budget) to run on.

    Yields:
        IdOnObjFunctor: Each functor, by lexicographic morphism table.
    """
    search = search or TableSearch()
    candidates = [cod.hom(dom.src[f], dom.tgt[f]) for f in dom.morphisms]
    for x, e in enumerate(dom.identities):
        candidates[e] = [cod.identities[x]]

    checks: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for g, f in dom.composable_pairs():
        gf = dom.table[g][f]
        checks[max(g, f, gf)].append((g, f, gf))

    def consistent(partial: list[int], k: int) -> bool:
        return all(partial[gf] == cod.table[partial[g]][partial[f]] for g, f, gf in checks[k])

    for table in search.solutions(candidates, consistent):
        yield validate_functor(table, dom, cod)


def enumerate_actions(
    base: FinCatX, fiber: FinCatX, search: TableSearch | None = None
) -> Iterator[ActionSystem]:
    """All actions of base on the bundle fiber satisfying the three action axioms.

    Axiom (i), the unit laws and b▷1 = 1 restrict the candidates; the
    multiplicativity laws prune during the search.

    Yields:
        ActionSystem: Each action, by lexicographic table over the composable (b, y).
    """
    search = search or TableSearch()
    B, Y = base, fiber
    cells = [(b, y) for b in B.morphisms for y in Y.morphisms if B.src[b] == Y.tgt[y]]
    index = {cell: k for k, cell in enumerate(cells)}

    candidates = []
    for b, y in cells:
        if B.is_identity(b):
            candidates.append([y])
        elif Y.is_identity(y):
            candidates.append([Y.identities[B.tgt[b]]])
        else:
            candidates.append([v for v in Y.morphisms if Y.tgt[v] == B.tgt[b]])

    def value(partial: list[int], cell: tuple[int, int]) -> int | None:
        k = index[cell]
        return partial[k] if k < len(partial) else None

    def consistent(partial: list[int], k: int) -> bool:
        for b, y in cells[: k + 1]:
            by = partial[index[(b, y)]]
            for y2 in Y.morphisms:
                if Y.src[y2] != Y.src[y]:
                    continue
                by2 = value(partial, (b, y2))
                product = value(partial, (b, Y.table[y][y2]))
                if by2 is not None and product is not None and product != Y.table[by][by2]:
                    return False
            for b2 in B.morphisms:
                if B.src[b2] != B.tgt[b]:
                    continue
                outer = value(partial, (b2, by))
                composite = value(partial, (B.table[b2][b], y))
                if outer is not None and composite is not None and outer != composite:
                    return False
        return True

    for table in search.solutions(candidates, consistent):
        yield validate_action(B, Y, dict(zip(cells, table)))


def enumerate_precrossed(
    base: FinCatX, fiber: FinCatX, search: TableSearch | None = None
) -> Iterator[PreCrossedModule]:
    """All (action, κ) pairs with κ(b▷y)·b = b·κ(y), ordered by action then κ."""
    search = search or TableSearch()
    kappas = list(enumerate_functors(fiber, base, search))
    for action in enumerate_actions(base, fiber, search):
        for kappa in kappas:
            search.tick()
            if check_precrossed(action, kappa):
                yield PreCrossedModule(action, kappa)


def enumerate_xmods(
    base: FinCatX, fiber: FinCatX, search: TableSearch | None = None
) -> Iterator[CrossedModule]:
    """All crossed modules on the pair: pre-crossed modules passing Peiffer."""
    for pxm in enumerate_precrossed(base, fiber, search):
        if check_peiffer(pxm):
            yield CrossedModule(pxm)


def enumerate_graph_morphisms(
    source: ReflexiveGraph | InternalCat,
    target: ReflexiveGraph | InternalCat,
    search: TableSearch | None = None,
) -> Iterator[GraphMorphism]:
    """All morphisms (β, α) of reflexive graphs, ordered by β then α."""
    search = search or TableSearch()
    if isinstance(source, InternalCat):
        source = source.graph
    if isinstance(target, InternalCat):
        target = target.graph
    alphas = list(enumerate_functors(source.total, target.total, search))
    for beta in enumerate_functors(source.base, target.base, search):
        for alpha in alphas:
            search.tick()
            try:
                yield validate_graph_morphism(source, target, beta.table, alpha.table)
            except NotAGraphMorphism:
                continue
