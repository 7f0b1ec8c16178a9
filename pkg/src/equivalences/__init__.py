from .errors import (
    InternalCatViolation,
    InvariantError,
    NoComposition,
    NotAGraphMorphism,
    PeifferViolated,
    PreCrossedViolated,
    Q2NotInvertible,
    QNotInvertible,
    StructureMismatch,
    UnsupportedN,
)
from .iterated import (
    MAX_N,
    IteratedKind,
    b_map,
    build_iterated,
    check_b2_unit_identities,
    check_bn_qn_biconditional,
    check_bn_square,
    check_qn_factorization,
    composable_strings,
    fiber_strings,
    kappa_t,
)
from .morphism_map import MorphismMap, failure_witness, tabulate
from .reflgraph import (
    CrossedModule,
    GraphMorphism,
    PreCrossedModule,
    ReflexiveGraph,
    check_peiffer,
    check_precrossed,
    prex_to_reflgraph,
    reflgraph_to_prex,
    validate_crossed_module,
    validate_graph_morphism,
    validate_precrossed,
    validate_reflexive_graph,
)
from .relcat import (
    InternalCat,
    build_composition_d,
    check_associativity,
    check_d_closed_form,
    check_graph_morphism_is_functor,
    check_interchange,
    check_source_target,
    check_unit_laws,
    composition_square,
    internal_cat_reports,
    relcat_to_xmod,
    validate_internal_cat,
    xmod_to_relcat,
)
from .roundtrip import RoundTrip, natural_iso_check
from .splitepi import (
    KernelObject,
    build_q,
    groupoid_q_inverse,
    kernel_object,
    q_domain,
    splitepi_to_distlaw,
    validate_splitepi,
)

__all__ = [
    "MAX_N",
    "CrossedModule",
    "GraphMorphism",
    "InternalCat",
    "InternalCatViolation",
    "InvariantError",
    "IteratedKind",
    "KernelObject",
    "MorphismMap",
    "NoComposition",
    "NotAGraphMorphism",
    "PeifferViolated",
    "PreCrossedModule",
    "PreCrossedViolated",
    "Q2NotInvertible",
    "QNotInvertible",
    "ReflexiveGraph",
    "RoundTrip",
    "StructureMismatch",
    "UnsupportedN",
    "b_map",
    "build_composition_d",
    "build_iterated",
    "build_q",
    "check_associativity",
    "check_b2_unit_identities",
    "check_bn_qn_biconditional",
    "check_bn_square",
    "check_d_closed_form",
    "check_graph_morphism_is_functor",
    "check_interchange",
    "check_peiffer",
    "check_precrossed",
    "check_qn_factorization",
    "check_source_target",
    "check_unit_laws",
    "composable_strings",
    "composition_square",
    "failure_witness",
    "fiber_strings",
    "groupoid_q_inverse",
    "internal_cat_reports",
    "kappa_t",
    "kernel_object",
    "natural_iso_check",
    "prex_to_reflgraph",
    "q_domain",
    "reflgraph_to_prex",
    "relcat_to_xmod",
    "splitepi_to_distlaw",
    "tabulate",
    "validate_crossed_module",
    "validate_graph_morphism",
    "validate_internal_cat",
    "validate_precrossed",
    "validate_reflexive_graph",
    "validate_splitepi",
    "xmod_to_relcat",
]
