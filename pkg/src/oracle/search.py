"""Backtracking search over finite tables, shared by every enumerator."""

from typing import Callable, Iterator, Sequence

from common.logging import Logger, NullLogger

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10_000_000

Consistent = Callable[[list[int], int], bool]


class TableSearch:
    """
    Fills a table cell by cell, pruning with a consistency predicate.

    Every candidate value tried counts against the budget; running out raises
    BudgetExceeded rather than returning a truncated result. One instance may
    drive several searches, which then share the budget.
    """

    def __init__(self, budget: int = DEFAULT_BUDGET, logger: Logger | None = None):
        """
        Initialize the search.

        Args:
            budget: Maximum number of candidate evaluations.
            logger: Optional logger for progress and budget warnings.
        """
        self.budget = budget
        self.logger = logger or NullLogger()
        self.evaluations = 0

    def tick(self) -> None:
        """Count one candidate evaluation."""
        self.evaluations += 1
        if self.evaluations > self.budget:
            self.logger.warning(f"Search budget of {self.budget} evaluations exhausted")
            raise BudgetExceeded(f"Search budget of {self.budget} evaluations exceeded", (self.budget,))

    def solutions(
        self, candidates: Sequence[Sequence[int]], consistent: Consistent
    ) -> Iterator[tuple[int, ...]]:
        """
        Yield every complete assignment, in lexicographic order.

        Args:
            candidates: Allowed values of each cell, each list in increasing order.
            consistent: consistent(partial, k) is called right after cell k is
                assigned (cells 0..k are set) and must return False only when
                some constraint among the assigned cells fails.

        Yields:
            tuple[int, ...]: One value per cell.
        """
        n = len(candidates)
        if n == 0:
            yield ()
            return
        partial: list[int] = []

        def extend(k: int) -> Iterator[tuple[int, ...]]:
            for value in candidates[k]:
                self.tick()
                partial.append(value)
                if consistent(partial, k):
                    if k == n - 1:
                        yield tuple(partial)
                    else:
                        yield from extend(k + 1)
                partial.pop()

        yield from extend(0)
