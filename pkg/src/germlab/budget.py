"""Reduction-step budget: turns potential non-termination into a clean error."""

from .errors import BudgetExceededError

DEFAULT_STEP_BUDGET = 10**6


class Budget:
    """Counts reduction steps; raises once the limit is exhausted.

    A single Budget is threaded through one top-level computation so that
    nested basis computations share the same pool.
    """

    __slots__ = ("limit", "used")

    def __init__(self, limit=DEFAULT_STEP_BUDGET):
        if limit <= 0:
            raise ValueError("step budget must be positive")
        self.limit = limit
        self.used = 0

    def tick(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceededError(
                f"step budget exceeded ({self.used} > {self.limit})"
            )

    def remaining(self):
        return self.limit - self.used


def ensure_budget(budget):
    return budget if budget is not None else Budget()
