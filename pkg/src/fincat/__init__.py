from .builders import (
    alternating_group,
    bundle_of,
    cycle_notation,
    cyclic_group,
    discrete,
    idempotent_with_involution,
    indiscrete_groupoid,
    klein_four,
    monoid_from_table,
    one_object,
    semilattice,
    symmetric_group,
)
from .fincat import (
    UNDEFINED,
    AssociativityViolation,
    BadComposabilityDomain,
    BundleFlag,
    CategoryError,
    CompositionNotPreserved,
    FibreProduct,
    FinCatX,
    FunctorError,
    IdentityNotPreserved,
    IdOnObjFunctor,
    InverseMap,
    MissingIdentity,
    NotComposable,
    NotGroupoid,
    RawCategoryData,
    SrcTgtNotPreserved,
    UnitLawViolation,
    UnknownName,
    check_category,
    compose_functors,
    fibre_product,
    groupoid_inverses,
    identity_functor,
    is_bundle,
    validate_category,
    validate_functor,
)

__all__ = [
    "UNDEFINED",
    "AssociativityViolation",
    "BadComposabilityDomain",
    "BundleFlag",
    "CategoryError",
    "CompositionNotPreserved",
    "FibreProduct",
    "FinCatX",
    "FunctorError",
    "IdentityNotPreserved",
    "IdOnObjFunctor",
    "InverseMap",
    "MissingIdentity",
    "NotComposable",
    "NotGroupoid",
    "RawCategoryData",
    "SrcTgtNotPreserved",
    "UnitLawViolation",
    "UnknownName",
    "alternating_group",
    "bundle_of",
    "check_category",
    "compose_functors",
    "cycle_notation",
    "cyclic_group",
    "discrete",
    "fibre_product",
    "groupoid_inverses",
    "idempotent_with_involution",
    "identity_functor",
    "indiscrete_groupoid",
    "is_bundle",
    "klein_four",
    "monoid_from_table",
    "one_object",
    "semilattice",
    "symmetric_group",
    "validate_category",
    "validate_functor",
]
