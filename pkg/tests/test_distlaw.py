import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distlaw import (
    ActionError,
    ActionNotPreserved,
    AxiomIIIViolation,
    AxiomIIViolation,
    AxiomIViolation,
    DistLawMap,
    NotABundle,
    NotFirstComponentForm,
    NotSplit,
    action_to_distlaw,
    distlaw_to_action,
    semidirect_morphism,
    semidirect_product,
    validate_action,
    validate_action_morphism,
    validate_split_pair,
)
from fincat import (
    alternating_group,
    bundle_of,
    cyclic_group,
    idempotent_with_involution,
    indiscrete_groupoid,
    semilattice,
    symmetric_group,
)
from oracle import check_distlaw_equations, fix_a, generic_distlaw_multiplication


def dense(action):
    return [list(row) for row in action.table]


def test_corrupted_conjugation_reports_the_actor_axiom(xm_a):
    table = dense(xm_a.action)
    table[1][1] = 0  # (12)▷(123) := ()
    with pytest.raises(AxiomIIIViolation) as info:
        validate_action(xm_a.base, xm_a.fiber, table)
    assert info.value.witness == (1, 1, 1)


def test_unit_law_of_the_actor():
    z2 = cyclic_group(2)
    with pytest.raises(AxiomIIIViolation) as info:
        validate_action(z2, cyclic_group(2), [[1, 0], [0, 1]])
    assert info.value.witness == (0,)


def test_fiber_multiplicativity():
    # g swaps g and g2 in Z4: an involution fixing 1, but g▷(g·g) ≠ (g▷g)·(g▷g)
    with pytest.raises(AxiomIIViolation) as info:
        validate_action(cyclic_group(2), cyclic_group(4), [[0, 1, 2, 3], [0, 2, 1, 3]])
    assert info.value.witness == (1, 1, 1)


def test_action_must_land_at_the_target_of_b(xm_c):
    base, fiber = xm_c.base, xm_c.fiber
    table = {cell: xm_c.action.act(*cell) for cell in xm_c.action.composable_pairs()}
    b, y = base.morphism("0->1"), fiber.morphism("1@0")
    table[(b, y)] = y
    with pytest.raises(AxiomIViolation) as info:
        validate_action(base, fiber, table)
    assert info.value.witness == (b, y)


def test_fiber_must_be_a_bundle():
    groupoid = indiscrete_groupoid(("0", "1"))
    with pytest.raises(NotABundle):
        validate_action(groupoid, groupoid, {})


def test_partial_table_is_rejected(z2):
    with pytest.raises(ActionError):
        validate_action(z2, cyclic_group(2), {(0, 0): 0})


@pytest.mark.parametrize("name", ["xm_a", "xm_b", "xm_c"])
def test_distlaw_round_trip_and_equations(name, request):
    action = request.getfixturevalue(name).action
    law = action_to_distlaw(action)
    assert check_distlaw_equations(law)
    assert distlaw_to_action(law) == action


@pytest.mark.parametrize("name", ["xm_a", "xm_b", "xm_c", "prex_e"])
def test_semidirect_product_matches_the_law_driven_multiplication(name, request):
    action = request.getfixturevalue(name).action
    assert semidirect_product(action).total == generic_distlaw_multiplication(action_to_distlaw(action))


def test_semidirect_sizes(xm_a, xm_b, xm_c):
    assert semidirect_product(xm_a.action).total.size == 18
    assert semidirect_product(xm_b.action).total.size == 4
    assert semidirect_product(xm_c.action).total.size == 8


def test_semidirect_composition_formula(xm_a):
    product = semidirect_product(xm_a.action)
    A, B, Y, act = product.total, xm_a.base, xm_a.fiber, xm_a.action.act
    for u, v in A.composable_pairs():
        (y, b), (y2, b2) = product.coordinates[u], product.coordinates[v]
        assert A.compose(u, v) == product.element(Y.compose(y, act(b, y2)), B.compose(b, b2))


def test_law_that_moves_the_base_component(xm_b):
    law = action_to_distlaw(xm_b.action)
    moved = dict(law.table)
    moved[(1, 1)] = (1, 0)
    with pytest.raises(NotFirstComponentForm) as info:
        distlaw_to_action(DistLawMap(law.base, law.fiber, moved))
    assert info.value.witness == (1, 1)


def test_broken_law_fails_an_equation(xm_b):
    law = action_to_distlaw(xm_b.action)
    broken = dict(law.table)
    broken[(1, 1)] = (0, 1)
    report = check_distlaw_equations(DistLawMap(law.base, law.fiber, broken))
    assert not report
    assert report.witness is not None


def test_split_pair_validation():
    monoid, base = idempotent_with_involution(), semilattice()
    pair = validate_split_pair(monoid, base, [0, 1], [0, 1, 0])
    assert pair.s(pair.i(1)) == 1
    # the constant functor is a functor, but not a retraction of i
    with pytest.raises(NotSplit) as info:
        validate_split_pair(monoid, base, [0, 1], [0, 0, 0])
    assert info.value.witness == (1,)


def test_sign_is_an_action_morphism_onto_the_trivial_action(xm_a):
    z2, trivial = cyclic_group(2), cyclic_group(1)
    target = validate_action(z2, trivial, [[0], [0]])
    s3 = xm_a.base
    sign = [z2.morphism("1" if name in alternating_group(3).names else "g") for name in s3.names]
    morphism = validate_action_morphism(xm_a.action, target, [0] * xm_a.fiber.size, sign)

    source_product, target_product = semidirect_product(xm_a.action), semidirect_product(target)
    alpha, beta = semidirect_morphism(morphism, source_product, target_product)
    assert beta.table == tuple(sign)
    for c, (_, b) in enumerate(source_product.coordinates):
        assert target_product.coordinates[alpha(c)] == (0, sign[b])


def test_action_morphism_must_intertwine():
    s3, a3 = symmetric_group(3), alternating_group(3)
    trivial = validate_action(s3, a3, [list(a3.morphisms) for _ in s3.morphisms])
    with pytest.raises(ActionNotPreserved):
        validate_action_morphism(trivial, fix_a().action, list(a3.morphisms), list(s3.morphisms))


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_random_mutations_of_the_transport_action(xm_c, data):
    action = xm_c.action
    cells = list(action.composable_pairs())
    table = {cell: action.act(*cell) for cell in cells}
    cell = data.draw(st.sampled_from(cells))
    table[cell] = data.draw(st.sampled_from(list(xm_c.fiber.morphisms)))
    try:
        mutated = validate_action(xm_c.base, xm_c.fiber, table)
    except ActionError:
        return
    assert check_distlaw_equations(action_to_distlaw(mutated))


def test_bundle_names_are_ordered_object_by_object():
    bundle = bundle_of(("0", "1"), [cyclic_group(2), cyclic_group(2)])
    assert bundle.names == ("1@0", "g@0", "1@1", "g@1")
