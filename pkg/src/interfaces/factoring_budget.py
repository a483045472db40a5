"""Step and wall-clock limits shared by the factoring oracles."""

import time
from typing import Optional

from src.errors import BudgetExceededError, InputError


class FactoringBudget:
    """Counts oracle steps and raises once a step cap or deadline is passed.

    The clock starts when the budget is created; oracles charge work in
    batches so the clock is read rarely.
    """

    def __init__(self, max_steps: Optional[int] = None, timeout_seconds: Optional[float] = None):
        if max_steps is not None and max_steps <= 0:
            raise InputError(f"max_steps must be positive, got {max_steps}")
        if timeout_seconds is not None and timeout_seconds <= 0:
            raise InputError(f"timeout_seconds must be positive, got {timeout_seconds}")
        self.max_steps = max_steps
        self.timeout_seconds = timeout_seconds
        self.steps = 0
        self._deadline = time.perf_counter() + timeout_seconds if timeout_seconds is not None else None

    def charge(self, steps: int = 1) -> None:
        self.steps += steps
        if self.max_steps is not None and self.steps > self.max_steps:
            raise BudgetExceededError(f"step budget of {self.max_steps} exhausted", self.steps)
        if self._deadline is not None and time.perf_counter() > self._deadline:
            raise BudgetExceededError(f"time budget of {self.timeout_seconds}s exhausted", self.steps)

    def __repr__(self) -> str:
        return (f"FactoringBudget(max_steps={self.max_steps}, "
                f"timeout_seconds={self.timeout_seconds}, steps={self.steps})")
