from .catalogue import MAX_ORDER, monoid_classes, small_catalogue
from .enumerate import (
    enumerate_actions,
    enumerate_functors,
    enumerate_graph_morphisms,
    enumerate_precrossed,
    enumerate_xmods,
)
from .errors import BudgetExceeded, NotInjective, NotSurjective
from .fixtures import (
    FIXTURE_BUILDERS,
    Fixture,
    all_fixtures,
    fix_a,
    fix_b,
    fix_c,
    fix_d,
    fix_e,
    get_fixture,
)
from .inverse import brute_force_inverse
from .laws import brute_force_pullback, check_distlaw_equations, generic_distlaw_multiplication
from .search import DEFAULT_BUDGET, TableSearch
from .solve_d import solve_d_by_search
from .sweep import SweepOutcome, SweepRunner

__all__ = [
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "MAX_ORDER",
    "FIXTURE_BUILDERS",
    "Fixture",
    "NotInjective",
    "NotSurjective",
    "SweepOutcome",
    "SweepRunner",
    "TableSearch",
    "all_fixtures",
    "brute_force_inverse",
    "brute_force_pullback",
    "check_distlaw_equations",
    "enumerate_actions",
    "enumerate_functors",
    "enumerate_graph_morphisms",
    "enumerate_precrossed",
    "enumerate_xmods",
    "fix_a",
    "fix_b",
    "fix_c",
    "fix_d",
    "fix_e",
    "generic_distlaw_multiplication",
    "get_fixture",
    "monoid_classes",
    "small_catalogue",
    "solve_d_by_search",
]
