from common.errors import XmodkitError


class NotInjective(XmodkitError):
    """Raised when two domain elements share an image; witness is the first such pair."""


class NotSurjective(XmodkitError):
    """Raised when a codomain element has no preimage; witness is the first one."""


class BudgetExceeded(XmodkitError):
    """Raised when a search evaluates more candidates than its budget allows."""
