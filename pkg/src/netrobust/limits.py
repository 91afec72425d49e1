"""Search caps, wall-clock budgets and the errors they raise."""

from __future__ import annotations

import os
import time


class CapExceeded(RuntimeError):
    """An exact search would exceed its configured size cap."""


class BudgetExceeded(CapExceeded):
    """A wall-clock budget ran out before an exact search finished."""


class Budget:
    """Cooperative deadline checked from inside long-running loops.

    ``Budget(None)`` never expires. Loops call :meth:`tick` cheaply; the clock
    is only read every ``stride`` ticks.
    """

    def __init__(self, ms: float | None = None, stride: int = 256):
        self.deadline = None if ms is None else time.monotonic() + ms / 1000.0
        self.stride = stride
        self._count = 0

    @classmethod
    def from_env(cls) -> "Budget":
        return cls(budget_ms_from_env())

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline

    def tick(self) -> None:
        self._count += 1
        if self._count >= self.stride:
            self._count = 0
            if self.expired():
                raise BudgetExceeded("time budget exhausted")

    def check(self) -> None:
        if self.expired():
            raise BudgetExceeded("time budget exhausted")


UNLIMITED = Budget(None)


def budget_ms_from_env() -> float:
    """Per-computation budget in milliseconds (NETROBUST_BUDGET_MS, default 10 min)."""
    return float(os.environ.get("NETROBUST_BUDGET_MS", "600000"))


def worker_count() -> int:
    return max(1, int(os.environ.get("NETROBUST_THREADS", "1")))
