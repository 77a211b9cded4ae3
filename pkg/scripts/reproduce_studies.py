#!/usr/bin/env python3
"""Reproduce the three dispatch studies with default models.

Prints: bulk vs sequential queue throughput (ratio rises toward 30x),
sequential vs parallel launch times (about 20x at 10 UEs), and the
forced-iteration CPU timing table.
"""

from decodex.bench import run_bulk_study, run_iteration_study, run_parallel_study

print("== lookaside queue: sequential vs bulk ==")
print("n_ops  seq_tput     bulk_tput    ratio")
for r in run_bulk_study([1, 10, 100, 1000]):
    print(f"{r.n_ops:5d}  {r.sequential_tput:.6f}  {r.bulk_tput:.6f}  {r.ratio:6.2f}")

print()
print("== inline launches: sequential vs parallel (200 PRB split across UEs) ==")
print("n_ue  seq_kernel  par_kernel  seq_total  par_total  seq_util  par_util")
for r in run_parallel_study([1, 2, 5, 10], 200):
    print(
        f"{r.n_ue:4d}  {r.sequential_kernel_us:9.1f}  {r.parallel_kernel_us:9.1f}"
        f"  {r.sequential_total_us:9.1f}  {r.parallel_total_us:8.1f}"
        f"  {r.sequential_utilization:8.4f}  {r.parallel_utilization:8.4f}"
    )

print()
print("== forced-iteration CPU decode ==")
print("    K  rate  iters   mean_us")
for r in run_iteration_study():
    print(f"{r.k:5d}  {r.rate:.2f}  {r.iterations:5d}  {r.mean_us:8.1f}")
