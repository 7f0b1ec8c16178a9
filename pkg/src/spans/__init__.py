from .spans import (
    ConeError,
    FiniteMap,
    MismatchedObjSet,
    ObjSet,
    PullbackResult,
    Span,
    SpanError,
    associator,
    induced_map,
    left_unitor,
    preserves_legs,
    pullback,
    right_unitor,
    span_product,
    trivial_span,
)

__all__ = [
    "ConeError",
    "FiniteMap",
    "MismatchedObjSet",
    "ObjSet",
    "PullbackResult",
    "Span",
    "SpanError",
    "associator",
    "induced_map",
    "left_unitor",
    "preserves_legs",
    "pullback",
    "right_unitor",
    "span_product",
    "trivial_span",
]
