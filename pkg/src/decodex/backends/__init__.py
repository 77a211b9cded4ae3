"""Acceleration models behind one submit() contract.

Functional outputs are identical across backends; only timing, utilization,
and counters differ.
"""

from __future__ import annotations

from .cpu import cpu_decode_batch
from .descriptor import DecodeDescriptor
from .inline import (
    inline_decode_parallel,
    inline_decode_sequential,
    inline_timing_parallel,
    inline_timing_sequential,
)
from .lookaside import (
    DEFAULT_QUEUE_DEPTH,
    QueuePair,
    lookaside_dequeue,
    lookaside_enqueue,
    run_lookaside_bulk,
    run_lookaside_sequential,
)
from .model import (
    LatencyModel,
    inline_default,
    lookaside_default,
    model_from_mapping,
    unified_default,
)
from .report import BackendReport, DecodeOutcome

BACKEND_KINDS = ("cpu", "lookaside", "inline", "inline-unified")


class CpuBackend:
    clock_type = "wall"

    def __init__(self, workers: int = 1):
        self.workers = workers

    def submit(self, descriptors: list[DecodeDescriptor]) -> BackendReport:
        return cpu_decode_batch(descriptors, workers=self.workers)


class LookasideBackend:
    clock_type = "virtual"

    def __init__(self, model: LatencyModel | None = None, depth: int = DEFAULT_QUEUE_DEPTH,
                 mode: str = "bulk"):
        if mode not in ("bulk", "sequential"):
            raise ValueError(f"unknown lookaside dispatch mode {mode!r}")
        self.model = model or lookaside_default()
        self.depth = depth
        self.mode = mode

    def submit(self, descriptors: list[DecodeDescriptor]) -> BackendReport:
        if self.mode == "sequential":
            return run_lookaside_sequential(descriptors, self.model, depth=self.depth)
        return run_lookaside_bulk(descriptors, self.model, depth=self.depth)


class InlineBackend:
    clock_type = "virtual"

    def __init__(self, model: LatencyModel | None = None, parallel: bool = True,
                 unified: bool = False):
        if model is None:
            model = unified_default() if unified else inline_default()
        self.model = model
        self.parallel = parallel
        self.unified = unified

    def submit(self, descriptors: list[DecodeDescriptor]) -> BackendReport:
        groups: dict[int, list[DecodeDescriptor]] = {}
        for d in descriptors:
            groups.setdefault(d.tb_id, []).append(d)
        batches = [sorted(v, key=lambda d: d.cb_id) for _, v in sorted(groups.items())]
        if self.parallel:
            report = inline_decode_parallel(batches, self.model)
        else:
            report = inline_decode_sequential(batches, self.model)
        report.backend = "inline-unified" if self.unified else "inline"
        return report


def make_backend(kind: str, model: LatencyModel | None = None, **knobs):
    """Uniform factory: submit(descriptors) -> BackendReport."""
    if kind == "cpu":
        return CpuBackend(workers=knobs.pop("workers", 1))
    if kind == "lookaside":
        return LookasideBackend(
            model=model,
            depth=knobs.pop("depth", DEFAULT_QUEUE_DEPTH),
            mode=knobs.pop("mode", "bulk"),
        )
    if kind == "inline":
        return InlineBackend(model=model, parallel=knobs.pop("parallel", True))
    if kind == "inline-unified":
        return InlineBackend(model=model, parallel=knobs.pop("parallel", True), unified=True)
    raise ValueError(f"unknown backend kind {kind!r}")


__all__ = [
    "BACKEND_KINDS",
    "BackendReport",
    "CpuBackend",
    "DEFAULT_QUEUE_DEPTH",
    "DecodeDescriptor",
    "DecodeOutcome",
    "InlineBackend",
    "LatencyModel",
    "LookasideBackend",
    "QueuePair",
    "cpu_decode_batch",
    "inline_decode_parallel",
    "inline_decode_sequential",
    "inline_default",
    "inline_timing_parallel",
    "inline_timing_sequential",
    "lookaside_default",
    "lookaside_dequeue",
    "lookaside_enqueue",
    "make_backend",
    "model_from_mapping",
    "run_lookaside_bulk",
    "run_lookaside_sequential",
    "unified_default",
]
