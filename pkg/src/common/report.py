from dataclasses import dataclass


@dataclass(frozen=True)
class OracleReport:
    """Outcome of a brute-force verification.

    Produced by every exhaustive checker: whether the property held, how many
    points were examined, and the first failing point when it did not.

    Attributes:
        ok: Whether the checked property holds everywhere.
        checked: Number of points (elements, pairs, tuples) examined.
        witness: The lexicographically first failing point; required when not ok.
        note: Free-form detail, e.g. the name of the failing law.
        solutions: Number of solutions found, for search-based reports.
        solution: The unique solution table when one was found.
    """

    ok: bool
    checked: int
    witness: tuple | None = None
    note: str = ""
    solutions: int | None = None
    solution: tuple | None = None

    def __post_init__(self):
        if not self.ok and self.witness is None:
            raise ValueError("A failing OracleReport needs a witness")

    def to_dict(self) -> dict:
        """Convert the report into a JSON-ready mapping.

        Tuples are rendered as lists so the result can be passed to json.dumps.
        """
        data = {"ok": self.ok, "checked": self.checked, "note": self.note}
        if self.witness is not None:
            data["witness"] = listify(self.witness)
        if self.solutions is not None:
            data["solutions"] = self.solutions
        return data

    def __bool__(self) -> bool:
        return self.ok


def listify(value):
    """Render nested tuples as nested lists for JSON."""
    if isinstance(value, tuple):
        return [listify(v) for v in value]
    return value
