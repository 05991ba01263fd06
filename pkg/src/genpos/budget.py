"""Search budgets: node-count and wall-clock limits for the exact solvers.

A solver that exhausts its budget returns its best incumbent with status
"lower-bound" instead of raising, so callers can always use the result.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

EXACT = "exact"
LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class Budget:
    """Limits for a single solver call. ``None`` means unlimited."""

    max_nodes: int | None = None
    max_ms: float | None = None


class SearchClock:
    """Mutable per-call search state: node counter plus deadline checks.

    The wall clock is only consulted every 256 nodes to keep the per-node
    overhead to a couple of integer operations.
    """

    __slots__ = ("max_nodes", "deadline", "nodes", "started", "exhausted")

    def __init__(self, budget: Budget | None = None):
        budget = budget or Budget()
        self.max_nodes = budget.max_nodes
        self.started = time.monotonic()
        self.deadline = (
            None if budget.max_ms is None else self.started + budget.max_ms / 1000.0
        )
        self.nodes = 0
        self.exhausted = False

    def tick(self) -> bool:
        """Count one search node; return False once the budget is spent.

        A call rejected by the node limit is not counted, so on exhaustion
        ``nodes == max_nodes`` exactly.
        """
        if self.exhausted:
            return False
        if self.max_nodes is not None and self.nodes >= self.max_nodes:
            self.exhausted = True
            return False
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() > self.deadline:
                self.exhausted = True
        return not self.exhausted

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self.started) * 1000.0

    @property
    def status(self) -> str:
        return LOWER_BOUND if self.exhausted else EXACT
