from .distlaw import (
    ActionError,
    ActionMorphism,
    ActionNotPreserved,
    ActionSystem,
    AxiomIIIViolation,
    AxiomIIViolation,
    AxiomIViolation,
    DistLawMap,
    NotABundle,
    NotFirstComponentForm,
    NotSplit,
    SplitEpiPair,
    action_to_distlaw,
    distlaw_to_action,
    validate_action,
    validate_action_morphism,
    validate_split_pair,
)
from .semidirect import SemidirectProduct, semidirect_morphism, semidirect_product

__all__ = [
    "ActionError",
    "ActionMorphism",
    "ActionNotPreserved",
    "ActionSystem",
    "AxiomIIIViolation",
    "AxiomIIViolation",
    "AxiomIViolation",
    "DistLawMap",
    "NotABundle",
    "NotFirstComponentForm",
    "NotSplit",
    "SemidirectProduct",
    "SplitEpiPair",
    "action_to_distlaw",
    "distlaw_to_action",
    "semidirect_morphism",
    "semidirect_product",
    "validate_action",
    "validate_action_morphism",
    "validate_split_pair",
]
