import time
from itertools import product

import pytest

from equivalences import tabulate
from fincat import alternating_group, cyclic_group, symmetric_group
from oracle import (
    BudgetExceeded,
    NotSurjective,
    SweepRunner,
    TableSearch,
    all_fixtures,
    brute_force_inverse,
    enumerate_actions,
    enumerate_functors,
    enumerate_precrossed,
    enumerate_xmods,
    get_fixture,
    small_catalogue,
)
from oracle.catalogue import build_monoid, canonical_table, monoid_classes, monoid_table


def test_actions_of_s3_on_a3():
    s3, a3 = symmetric_group(3), alternating_group(3)
    actions = list(enumerate_actions(s3, a3))
    assert len(actions) == 2
    trivial, conjugation = actions
    assert all(trivial.act(b, y) == y for b, y in trivial.composable_pairs())
    # odd permutations invert 3-cycles
    assert a3.names[conjugation.act(s3.morphism("(12)"), a3.morphism("(123)"))] == "(132)"


def test_functor_counts():
    assert len(list(enumerate_functors(cyclic_group(3), cyclic_group(3)))) == 3
    assert len(list(enumerate_functors(cyclic_group(2), cyclic_group(3)))) == 1
    assert len(list(enumerate_functors(symmetric_group(3), cyclic_group(2)))) == 2


def test_crossed_modules_on_z2(xm_b):
    z2 = cyclic_group(2)
    xmods = list(enumerate_xmods(z2, z2))
    assert len(xmods) == 2
    assert xmods[1].kappa.table == xm_b.kappa.table
    assert xmods[1].action == xm_b.action
    assert len(list(enumerate_precrossed(z2, z2))) == 2


def test_nonabelian_fiber_over_the_trivial_group():
    trivial, s3 = cyclic_group(1), symmetric_group(3)
    assert list(enumerate_xmods(trivial, s3)) == []
    assert len(list(enumerate_precrossed(trivial, s3))) == 1


def test_enumeration_is_deterministic():
    s3, a3 = symmetric_group(3), alternating_group(3)
    first = [action.table for action in enumerate_actions(s3, a3)]
    second = [action.table for action in enumerate_actions(s3, a3)]
    assert first == second == sorted(first)


def test_budget_is_a_hard_stop():
    search = TableSearch(budget=5)
    with pytest.raises(BudgetExceeded) as info:
        list(enumerate_actions(symmetric_group(3), alternating_group(3), search))
    assert info.value.witness == (5,)
    assert search.evaluations == 6


def test_shared_budget_spans_several_searches():
    search = TableSearch(budget=1_000)
    list(enumerate_functors(cyclic_group(2), cyclic_group(2), search))
    used = search.evaluations
    list(enumerate_functors(cyclic_group(2), cyclic_group(2), search))
    assert search.evaluations == 2 * used


def test_brute_force_inverse_names_a_missed_point():
    f = tabulate("X", "Y", [0], [0, 1], lambda x: 0)
    with pytest.raises(NotSurjective) as info:
        brute_force_inverse(f)
    assert info.value.witness == (1,)


def test_catalogue_orders():
    assert list(small_catalogue(2)) == ["trivial", "Z2", "semilattice"]
    catalogue = small_catalogue()
    assert catalogue["V4"].size == 4
    assert catalogue["monoid3"].names == ("1", "a", "g")


def test_catalogue_holds_every_small_monoid_once():
    assert [len(monoid_classes(order)) for order in range(1, 5)] == [1, 2, 7, 35]
    catalogue = small_catalogue()
    assert len(catalogue) == 45
    tables = {(c.size, canonical_table(c.size, monoid_table(c))) for c in catalogue.values()}
    assert len(tables) == 45
    assert list(small_catalogue(3))[3:] == ["Z3", "monoid3", "M3.1", "M3.2", "M3.3", "M3.4", "M3.5"]


def test_generated_monoids_are_categories():
    for table in monoid_classes(4):
        monoid = build_monoid(4, table)
        assert monoid.names == ("1", "a", "b", "c")
        assert canonical_table(4, monoid_table(monoid)) == table


def test_sweep_over_every_monoid_up_to_order_four():
    catalogue = small_catalogue(4)
    pairs = [(b, catalogue[b], y, catalogue[y]) for b, y in product(catalogue, repeat=2)]
    started = time.perf_counter()
    outcomes = SweepRunner(max_workers=4).run(pairs)
    assert time.perf_counter() - started < 60
    assert len(outcomes) == 45 * 45
    failed = [(o.base, o.fiber, o.error, o.disagreements) for o in outcomes if not o.ok]
    assert failed == []
    assert all(o.peiffer == o.composed for o in outcomes)


def test_sweep_pair_agrees_on_groups():
    runner = SweepRunner(budget=100_000)
    outcome = runner.sweep_pair("Z2", cyclic_group(2), "Z3", cyclic_group(3))
    assert outcome.ok
    assert (outcome.instances, outcome.peiffer, outcome.composed) == (2, 2, 2)

    outcome = runner.sweep_pair("trivial", cyclic_group(1), "S3", symmetric_group(3))
    assert outcome.ok
    assert (outcome.instances, outcome.peiffer, outcome.composed) == (1, 0, 0)


def test_sweep_records_budget_errors_in_order():
    z2, s3 = cyclic_group(2), symmetric_group(3)
    runner = SweepRunner(budget=20, max_workers=2)
    outcomes = runner.run([("Z2", z2, "Z2", z2), ("Z2", z2, "S3", s3)])
    assert [(o.base, o.fiber) for o in outcomes] == [("Z2", "Z2"), ("Z2", "S3")]
    assert outcomes[0].ok
    assert outcomes[1].error is not None and not outcomes[1].ok
    assert outcomes[1].to_dict()["ok"] is False


def test_fixture_registry():
    names = [fixture.name for fixture in all_fixtures()]
    assert names == ["fix-a", "fix-b", "fix-c", "fix-d", "fix-e"]
    fixture = get_fixture("fix-d")
    assert fixture.kind == "splitepi"
    assert fixture.filename == "fix-d.splitepi.json"
