from common.errors import XmodkitError


class QNotInvertible(XmodkitError):
    """Raised when q: (A□_B I)B → A is not a bijection."""


class Q2NotInvertible(XmodkitError):
    """Raised when q₂: (A□_B I)A → A□_B A is not a bijection."""


class PreCrossedViolated(XmodkitError):
    """Raised when κ(b▷y)·b = b·κ(y) fails."""


class PeifferViolated(XmodkitError):
    """Raised when (κ(y)▷y')·y = y·y' fails."""


class NoComposition(XmodkitError):
    """Raised when no composition d exists on a reflexive graph."""


class UnsupportedN(XmodkitError):
    """Raised for iterated maps beyond n = 3."""


class StructureMismatch(XmodkitError):
    """Raised when an iterated map is asked of the wrong kind of structure."""


class NotAGraphMorphism(XmodkitError):
    """Raised when (β, α) does not commute with i, s and t."""


class InternalCatViolation(XmodkitError):
    """Raised when a composition table breaks an internal-category law."""


class InvariantError(XmodkitError):
    """Raised when a construction proven to succeed does not."""
