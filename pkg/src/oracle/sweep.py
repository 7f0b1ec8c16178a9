"""
Parallel sweep comparing the Peiffer identity with existence of a composition.

For every pre-crossed module on a (base, fiber) pair, check_peiffer and
build_composition_d on the associated reflexive graph must agree.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field

from common.logging import Logger, NullLogger
from equivalences import NoComposition, build_composition_d, check_peiffer, prex_to_reflgraph
from fincat import FinCatX

from .enumerate import enumerate_precrossed
from .search import DEFAULT_BUDGET, TableSearch


@dataclass(frozen=True)
class SweepOutcome:
    """
    Result of sweeping one (base, fiber) pair.

    Attributes:
        base: Name of the acting category.
        fiber: Name of the bundle.
        instances: Number of pre-crossed modules examined.
        peiffer: How many satisfied the Peiffer identity.
        composed: How many admitted a composition d.
        disagreements: Positions (in enumeration order) where the two differ.
        error: Message of the error that stopped the sweep, if any.
    """

    base: str
    fiber: str
    instances: int = 0
    peiffer: int = 0
    composed: int = 0
    disagreements: tuple[int, ...] = field(default_factory=tuple)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and not self.disagreements

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "fiber": self.fiber,
            "instances": self.instances,
            "peiffer": self.peiffer,
            "composed": self.composed,
            "disagreements": list(self.disagreements),
            "error": self.error,
            "ok": self.ok,
        }


class SweepRunner:
    """
    Runs the Peiffer/composition comparison over many (base, fiber) pairs.

    Each pair gets its own search budget; pairs are processed on a thread pool
    and the outcomes are returned in input order.
    """

    def __init__(
        self,
        budget: int = DEFAULT_BUDGET,
        logger: Logger | None = None,
        max_workers: int = 4,
    ):
        """
        Initialize the sweep runner.

        Args:
            budget: Search budget per (base, fiber) pair.
            logger: Optional logger for tracking progress.
            max_workers: Maximum number of pairs swept in parallel.
        """
        self.budget = budget
        self.logger = logger or NullLogger()
        self.max_workers = max_workers

    def sweep_pair(self, base_name: str, base: FinCatX, fiber_name: str, fiber: FinCatX) -> SweepOutcome:
        """
        Sweep every pre-crossed module on one pair.

        Args:
            base_name: Name of the acting category, for the report.
            base: The acting category.
            fiber_name: Name of the bundle, for the report.
            fiber: The bundle.

        Returns:
            SweepOutcome: Counts and the positions of any disagreement.

        Raises:
            BudgetExceeded: If the enumeration exhausts the budget.
        """
        search = TableSearch(self.budget, self.logger)
        instances = peiffer = composed = 0
        disagreements = []
        for position, pxm in enumerate(enumerate_precrossed(base, fiber, search)):
            instances += 1
            holds = bool(check_peiffer(pxm))
            try:
                build_composition_d(prex_to_reflgraph(pxm))
                has_d = True
            except NoComposition:
                has_d = False
            peiffer += holds
            composed += has_d
            if holds != has_d:
                self.logger.error(f"{base_name}/{fiber_name} #{position}: Peiffer={holds}, composition={has_d}")
                disagreements.append(position)
        self.logger.debug(f"Swept {base_name}/{fiber_name}: {instances} pre-crossed modules")
        return SweepOutcome(base_name, fiber_name, instances, peiffer, composed, tuple(disagreements))

    def run(self, pairs: list[tuple[str, FinCatX, str, FinCatX]]) -> list[SweepOutcome]:
        """
        Sweep all pairs using parallel workers.

        Errors in one pair (a budget overrun, say) are recorded on its outcome
        and do not stop the others.

        Args:
            pairs: (base name, base, fiber name, fiber) tuples.

        Returns:
            list[SweepOutcome]: One outcome per pair, in input order.
        """
        outcomes: list[SweepOutcome | None] = [None] * len(pairs)
        self.logger.debug(f"Starting sweep of {len(pairs)} pairs (max workers: {self.max_workers})")

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_index = {
                executor.submit(self.sweep_pair, *pair): index for index, pair in enumerate(pairs)
            }
            for completed, future in enumerate(as_completed(future_to_index), start=1):
                index = future_to_index[future]
                base_name, _, fiber_name, _ = pairs[index]
                try:
                    outcomes[index] = future.result()
                    self.logger.debug(f"[{completed}/{len(pairs)}] Swept {base_name}/{fiber_name}")
                except Exception as e:
                    outcomes[index] = SweepOutcome(base_name, fiber_name, error=str(e))
                    self.logger.error(f"Failed to sweep {base_name}/{fiber_name}: {e}")

        self.logger.debug(f"Sweep complete for {len(pairs)} pairs")
        return outcomes
