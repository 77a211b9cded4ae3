"""Uniform result container for all decode backends."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class DecodeOutcome:
    """Functional result of one decoded code block."""

    tb_id: int
    cb_id: int
    output_slot: int
    bits: np.ndarray
    iterations_used: int
    converged: bool


@dataclass
class BackendReport:
    """Per-TB latency plus functional outcomes and backend counters.

    clock_type is "wall" for the real CPU pool and "virtual" for the
    simulated accelerators.  enq/deq counters apply to the lookaside queue
    (conserved: equal after a successful drain); utilization applies to the
    inline launch models; failure carries an explicit error state such as a
    drain shortfall instead of raising.
    """

    backend: str
    clock_type: str
    tb_latency_us: dict[int, float] = field(default_factory=dict)
    outcomes: list[DecodeOutcome] = field(default_factory=list)
    total_us: float = 0.0
    utilization: float | None = None
    enq_count: int | None = None
    deq_count: int | None = None
    failure: str | None = None

    @property
    def latencies(self) -> np.ndarray:
        return np.array([self.tb_latency_us[k] for k in sorted(self.tb_latency_us)])

    @property
    def mean_iterations(self) -> float:
        if not self.outcomes:
            return 0.0
        return float(np.mean([o.iterations_used for o in self.outcomes]))

    def bits_by_tb(self) -> dict[int, list[np.ndarray]]:
        """Decoded CB bit blocks grouped by TB, in cb_id order."""
        grouped: dict[int, list[DecodeOutcome]] = {}
        for o in self.outcomes:
            grouped.setdefault(o.tb_id, []).append(o)
        return {
            tb: [o.bits for o in sorted(v, key=lambda o: o.cb_id)]
            for tb, v in grouped.items()
        }
