import pytest

from distlaw import semidirect_morphism, semidirect_product, validate_action, validate_action_morphism
from equivalences import (
    CrossedModule,
    InternalCatViolation,
    NoComposition,
    PeifferViolated,
    build_composition_d,
    check_d_closed_form,
    check_graph_morphism_is_functor,
    internal_cat_reports,
    prex_to_reflgraph,
    relcat_to_xmod,
    validate_crossed_module,
    validate_graph_morphism,
    validate_internal_cat,
    xmod_to_relcat,
)
from fincat import alternating_group, cyclic_group, groupoid_inverses
from oracle import enumerate_graph_morphisms, solve_d_by_search


@pytest.fixture(scope="module")
def ic_a(xm_a):
    return xmod_to_relcat(xm_a)


@pytest.fixture(scope="module")
def ic_b(xm_b):
    return xmod_to_relcat(xm_b)


@pytest.fixture(scope="module")
def ic_c(xm_c):
    return xmod_to_relcat(xm_c)


def test_sizes(ic_a, ic_b):
    assert ic_a.graph.total.size == 18
    assert len(ic_a.square.pairs) == 54
    assert ic_b.graph.total.size == 4
    assert len(ic_b.square.pairs) == 8


@pytest.mark.parametrize("name", ["ic_a", "ic_b", "ic_c"])
def test_every_law_holds(name, request):
    for report in internal_cat_reports(request.getfixturevalue(name)):
        assert report, report.note


@pytest.mark.parametrize("name", ["ic_a", "ic_c"])
def test_composition_matches_the_groupoid_closed_form(name, request):
    ic = request.getfixturevalue(name)
    assert check_d_closed_form(ic, groupoid_inverses(ic.graph.base))


@pytest.mark.parametrize("name, fixture", [("ic_a", "xm_a"), ("ic_c", "xm_c")])
def test_composition_in_coordinates(name, fixture, request):
    ic, xm = request.getfixturevalue(name), request.getfixturevalue(fixture)
    product = semidirect_product(xm.action)
    Y = xm.fiber
    for u, v in ic.square.pairs:
        (y, _), (y2, b2) = product.coordinates[u], product.coordinates[v]
        assert ic.compose(u, v) == product.element(Y.compose(y, y2), b2)


def test_peiffer_failure_blocks_the_internal_category(prex_e):
    with pytest.raises(PeifferViolated) as info:
        xmod_to_relcat(CrossedModule(prex_e))
    assert info.value.witness == (1, 2)
    with pytest.raises(NoComposition):
        build_composition_d(prex_to_reflgraph(prex_e))


def test_search_finds_no_composition_without_peiffer(prex_e):
    report = solve_d_by_search(prex_to_reflgraph(prex_e))
    assert report.solutions == 0
    assert report.solution is None


@pytest.mark.parametrize("name", ["ic_a", "ic_b", "ic_c"])
def test_search_finds_exactly_the_constructed_composition(name, request):
    ic = request.getfixturevalue(name)
    report = solve_d_by_search(ic.graph)
    assert report.ok and report.solutions == 1
    assert report.solution == ic.d.table
    assert report.checked == len(ic.square.pairs)


def test_partial_composition_is_rejected(ic_b):
    d = dict(ic_b.d.items())
    missing = next(iter(d))
    del d[missing]
    with pytest.raises(InternalCatViolation) as info:
        validate_internal_cat(ic_b.graph, d)
    assert info.value.witness == missing


def test_composition_off_the_square_is_rejected(ic_b):
    d = dict(ic_b.d.items())
    rg = ic_b.graph
    stray = next(
        (a, a2) for a in rg.total.morphisms for a2 in rg.total.morphisms if rg.s(a) != rg.t(a2)
    )
    d[stray] = 0
    with pytest.raises(InternalCatViolation) as info:
        validate_internal_cat(rg, d)
    assert info.value.witness == stray


def test_broken_composition_fails_a_law(ic_b):
    d = dict(ic_b.d.items())
    rg = ic_b.graph
    unit = rg.i(0)
    for pair in d:
        if unit not in pair:
            d[pair] = unit
            break
    with pytest.raises(InternalCatViolation):
        validate_internal_cat(rg, d)


@pytest.mark.parametrize("name", ["xm_a", "xm_b", "xm_c"])
def test_crossed_module_round_trips_through_its_internal_category(name, request):
    xm = request.getfixturevalue(name)
    back = relcat_to_xmod(xmod_to_relcat(xm))
    assert back.kappa.table == xm.kappa.table
    for b, y in xm.action.composable_pairs():
        assert back.action.act(b, y) == xm.action.act(b, y)


def test_endomorphisms_of_fix_b_preserve_the_composition(ic_b):
    morphisms = list(enumerate_graph_morphisms(ic_b, ic_b))
    assert morphisms
    for morphism in morphisms:
        assert check_graph_morphism_is_functor(morphism, ic_b, ic_b)


def test_sign_quotient_is_an_internal_functor(xm_a, ic_a):
    z2, trivial = cyclic_group(2), cyclic_group(1)
    quotient = validate_crossed_module(validate_action(z2, trivial, [[0], [0]]), [0])
    target = xmod_to_relcat(quotient)

    even = alternating_group(3).names
    sign = [z2.morphism("1" if name in even else "g") for name in xm_a.base.names]
    morphism = validate_action_morphism(xm_a.action, quotient.action, [0] * xm_a.fiber.size, sign)
    alpha, beta = semidirect_morphism(
        morphism, semidirect_product(xm_a.action), semidirect_product(quotient.action)
    )

    graph_morphism = validate_graph_morphism(ic_a.graph, target.graph, beta.table, alpha.table)
    assert check_graph_morphism_is_functor(graph_morphism, ic_a, target)
