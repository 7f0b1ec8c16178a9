class XmodkitError(Exception):
    """Base class for every structured error raised by xmodkit.

    Carries the witness that makes the failure reproducible: a tuple of dense
    element ids (or nested tuples of them), empty when there is nothing to point
    at.

    Attributes:
        witness: The lexicographically first offending element(s).
    """

    def __init__(self, message: str, witness: tuple = ()) -> None:
        super().__init__(message)
        self.witness: tuple = tuple(witness)

    def __str__(self) -> str:
        base = super().__str__()
        return f"{base} (witness: {self.witness})" if self.witness else base
