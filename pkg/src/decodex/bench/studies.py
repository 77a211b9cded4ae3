"""Focused dispatch studies: bulk vs sequential queues, parallel launches,
and forced-iteration CPU scaling."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, replace

import numpy as np

from ..backends import (
    LatencyModel,
    inline_decode_parallel,
    inline_decode_sequential,
    inline_default,
    inline_timing_parallel,
    inline_timing_sequential,
    lookaside_default,
    run_lookaside_bulk,
    run_lookaside_sequential,
)
from ..backends.inline import _transfer_time
from ..ldpc import ConfigurationError, decode_layered_minsum, encode
from ..nr import (
    make_transport_block,
    random_transport_block,
    segment,
    select_base_graph,
    split_coded_bits,
)
from ..nr.pipeline import code_block_bits
from ..nr.ratematch import rate_dematch, rate_match
from ..phy import bits_to_llrs, generate_cell_vectors, prepare_tb_vectors

DEFAULT_STUDY_MCS = 9
DEFAULT_STUDY_SNR_DB = 30.0
DEFAULT_BULK_SEED = 7


@dataclass(frozen=True)
class BulkStudyRow:
    n_ops: int
    sequential_tput: float  # ops per virtual us
    bulk_tput: float
    ratio: float


def run_bulk_study(
    n_ops_list: list[int],
    model: LatencyModel | None = None,
    seed: int = DEFAULT_BULK_SEED,
) -> list[BulkStudyRow]:
    """Throughput of sequential vs bulk enqueue/dequeue over op-count sweeps.

    Ops are single-CB transport blocks small enough that the real decode at
    dequeue time stays cheap; timing depends only on the model.
    """
    model = model or lookaside_default()
    rows = []
    n_max = max(n_ops_list)
    vectors = generate_cell_vectors(
        mcs=0, prb=2, snr_db=DEFAULT_STUDY_SNR_DB, n_tb=n_max, seed=seed
    )
    descriptors = [d for v in vectors for d in v.descriptors]
    for n_ops in n_ops_list:
        ops = descriptors[:n_ops]
        seq = run_lookaside_sequential(ops, model)
        blk = run_lookaside_bulk(ops, model)
        seq_tput = n_ops / seq.total_us
        blk_tput = n_ops / blk.total_us
        rows.append(
            BulkStudyRow(
                n_ops=n_ops,
                sequential_tput=seq_tput,
                bulk_tput=blk_tput,
                ratio=blk_tput / seq_tput,
            )
        )
    return rows


@dataclass(frozen=True)
class ParallelStudyRow:
    n_ue: int
    sequential_kernel_us: float
    parallel_kernel_us: float
    sequential_total_us: float
    parallel_total_us: float
    sequential_utilization: float
    parallel_utilization: float


def run_parallel_study(
    n_ue_list: list[int],
    prb_total: int,
    mcs: int = DEFAULT_STUDY_MCS,
    model: LatencyModel | None = None,
    seed: int = 2024,
) -> list[ParallelStudyRow]:
    """Sequential vs parallel launches at constant total data volume.

    Each UE gets floor(prb_total / n_ue) PRBs (remainder to the last UE) and
    one TB; both launch modes decode the same descriptors.  Kernel columns
    exclude transfers, total columns include them.
    """
    model = model or inline_default()
    rows = []
    for n_ue in n_ue_list:
        if n_ue < 1 or n_ue > prb_total:
            raise ConfigurationError(f"n_ue={n_ue} incompatible with prb_total={prb_total}")
        share = prb_total // n_ue
        prbs = [share] * (n_ue - 1) + [prb_total - share * (n_ue - 1)]
        batches = []
        for ue, prb in enumerate(prbs):
            vec = prepare_tb_vectors(
                random_transport_block(mcs, prb, np.random.default_rng(seed ^ ue)),
                DEFAULT_STUDY_SNR_DB,
                seed ^ ue,
                tb_id=ue,
            )
            batches.append(vec.descriptors)

        seq_report = inline_decode_sequential(batches, model)
        par_report = inline_decode_parallel(batches, model)
        counts = [len(b) for b in batches]
        seq_transfer = sum(_transfer_time(b, model) for b in batches)
        par_transfer = _transfer_time([d for b in batches for d in b], model)
        seq_timing = inline_timing_sequential(counts, model, seq_transfer)
        par_timing = inline_timing_parallel(counts, model, par_transfer)
        rows.append(
            ParallelStudyRow(
                n_ue=n_ue,
                sequential_kernel_us=seq_timing.kernel_us,
                parallel_kernel_us=par_timing.kernel_us,
                sequential_total_us=seq_report.total_us,
                parallel_total_us=par_report.total_us,
                sequential_utilization=seq_timing.utilization,
                parallel_utilization=par_timing.utilization,
            )
        )
    return rows


@dataclass(frozen=True)
class IterationStudyRow:
    k: int
    rate: float
    iterations: int
    mean_us: float


def run_iteration_study(
    k_list: list[int] = (1936, 4224, 8440),
    rate_list: list[float] = (0.33, 0.88),
    iter_list: list[int] = (2, 4, 8),
    repeats: int = 10,
    seed: int = 99,
) -> list[IterationStudyRow]:
    """Wall-clock CPU decode time with early termination disabled.

    K is the per-CB information length including the TB CRC; the code rate
    sets the rate-matched length E = ceil(K / rate).
    """
    rows = []
    for k in k_list:
        for rate in rate_list:
            b = k - 24
            if b <= 0:
                raise ConfigurationError(f"K={k} leaves no payload after the TB CRC")
            bg = select_base_graph(b, rate)
            plan = segment(b, bg)
            if plan.c != 1:
                raise ConfigurationError(f"K={k} does not fit a single code block")
            e_total = math.ceil(k / rate)
            rng = np.random.default_rng(seed)
            payload = rng.integers(0, 2, b, dtype=np.uint8)
            tb = make_transport_block(payload, 0, 1)  # mcs/prb unused below
            blocks = code_block_bits(tb, plan)
            params = replace(plan.params[0], e=split_coded_bits(e_total, plan.c)[0])
            cw = encode(blocks[0], params)
            llr = rate_dematch(bits_to_llrs(rate_match(cw, params)), params)
            for iters in iter_list:
                # untimed warmup absorbs matrix expansion and cache faults
                decode_layered_minsum(llr, params, max_iterations=iters,
                                      early_termination=False)
                times = []
                for _ in range(repeats):
                    t0 = time.perf_counter()
                    decode_layered_minsum(
                        llr, params, max_iterations=iters, early_termination=False
                    )
                    times.append((time.perf_counter() - t0) * 1e6)
                rows.append(
                    IterationStudyRow(
                        k=k, rate=rate, iterations=iters, mean_us=float(np.mean(times))
                    )
                )
    return rows
