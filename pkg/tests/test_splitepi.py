import pytest

from distlaw import semidirect_product
from equivalences import (
    QNotInvertible,
    build_q,
    groupoid_q_inverse,
    kernel_object,
    q_domain,
    splitepi_to_distlaw,
    validate_splitepi,
)
from fincat import groupoid_inverses
from oracle import NotInjective, brute_force_inverse


@pytest.fixture(scope="module")
def product_a(xm_a):
    return semidirect_product(xm_a.action)


def test_kernel_of_a_semidirect_product_is_the_embedded_fiber(xm_a, product_a):
    kernel = kernel_object(product_a.pair)
    assert kernel.members == product_a.embedding.table
    assert kernel.category.size == xm_a.fiber.size
    for y in xm_a.fiber.morphisms:
        assert kernel.position(product_a.embedding(y)) == y
    assert product_a.element(1, 1) not in kernel


@pytest.mark.parametrize("name, points", [("xm_a", 18), ("xm_b", 4), ("xm_c", 8)])
def test_q_is_bijective_on_semidirect_products(name, points, request):
    pair = semidirect_product(request.getfixturevalue(name).action).pair
    q = build_q(pair)
    assert len(q.domain) == points
    assert q.bijective
    for a in pair.total.morphisms:
        y, b = q.preimage(a)
        assert pair.total.compose(y, pair.i(b)) == a


@pytest.mark.parametrize("name", ["xm_a", "xm_c"])
def test_groupoid_closed_form_agrees_with_brute_force(name, request):
    pair = semidirect_product(request.getfixturevalue(name).action).pair
    closed = groupoid_q_inverse(pair, groupoid_inverses(pair.base))
    brute = brute_force_inverse(build_q(pair))
    assert closed.codomain == brute.codomain
    assert closed.table == brute.table


def test_fix_d_identifies_two_points(pair_d):
    kernel = kernel_object(pair_d)
    assert [pair_d.total.names[a] for a in kernel.members] == ["1", "g"]
    assert q_domain(pair_d, kernel) == [(0, 0), (0, 1), (2, 0), (2, 1)]

    q = build_q(pair_d, kernel)
    assert not q.bijective
    with pytest.raises(NotInjective) as info:
        brute_force_inverse(q)
    assert info.value.witness == ((0, 1), (2, 1))


def test_validate_splitepi_reports_the_collision(pair_d):
    with pytest.raises(QNotInvertible) as info:
        validate_splitepi(pair_d.total, pair_d.base, pair_d.i.table, pair_d.s.table)
    assert info.value.witness == ((0, 1), (2, 1))
    with pytest.raises(QNotInvertible):
        splitepi_to_distlaw(pair_d)


@pytest.mark.parametrize("name", ["xm_a", "xm_b", "xm_c", "prex_e"])
def test_kernel_action_recovers_the_action(name, request):
    action = request.getfixturevalue(name).action
    recovered = splitepi_to_distlaw(semidirect_product(action).pair)
    assert recovered.base == action.base
    assert list(recovered.composable_pairs()) == list(action.composable_pairs())
    for b, y in action.composable_pairs():
        assert recovered.act(b, y) == action.act(b, y)


def test_kernel_action_is_conjugation_over_a_group(xm_a, product_a):
    pair = product_a.pair
    action = splitepi_to_distlaw(pair)
    kernel = kernel_object(pair)
    inv = groupoid_inverses(pair.base)
    A = pair.total
    for b, y in action.composable_pairs():
        conjugate = A.compose_all([pair.i(b), kernel.members[y], pair.i(inv(b))])
        assert kernel.members[action.act(b, y)] == conjugate
