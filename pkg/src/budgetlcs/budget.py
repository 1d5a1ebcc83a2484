"""Deterministic step accounting and the abort contract."""

from __future__ import annotations

__all__ = ["BudgetMeter", "BudgetExceededError", "UNLIMITED"]

UNLIMITED = None


class BudgetExceededError(RuntimeError):
    """Raised by a meter whose step limit was reached; carries the meter."""

    def __init__(self, meter: "BudgetMeter"):
        super().__init__(f"budget exceeded: {meter.steps} steps, limit {meter.limit}")
        self.meter = meter


class BudgetMeter:
    """Counts abstract steps and aborts once a limit is crossed.

    Charges propagate to ancestor meters, so an outer budget bounds the sum of
    all nested work.  Counters saturate at the limit, which keeps the "total
    charged steps never exceed the limit" invariant exact even though the
    aborting batch is only partially accounted.
    """

    __slots__ = ("limit", "steps", "aborted", "parent")

    def __init__(self, limit: int | None = UNLIMITED, parent: "BudgetMeter | None" = None):
        if limit is not None and limit < 0:
            raise ValueError("limit must be non-negative")
        self.limit = limit
        self.steps = 0
        self.aborted = False
        self.parent = parent

    def charge(self, steps: int) -> None:
        if steps < 0:
            raise ValueError("cannot charge negative steps")
        node: BudgetMeter | None = self
        tripped: BudgetMeter | None = None
        while node is not None:
            new = node.steps + steps
            if node.limit is not None and new > node.limit:
                node.steps = node.limit
                node.aborted = True
                tripped = node  # outermost violation wins
            else:
                node.steps = new
            node = node.parent
        if tripped is not None:
            raise BudgetExceededError(tripped)

    def submeter(self, limit: int | None) -> "BudgetMeter":
        return BudgetMeter(limit=limit, parent=self)

    def remaining(self) -> int | None:
        if self.limit is None:
            return None
        return max(0, self.limit - self.steps)

    def __repr__(self) -> str:  # pragma: no cover
        return f"BudgetMeter(steps={self.steps}, limit={self.limit}, aborted={self.aborted})"
