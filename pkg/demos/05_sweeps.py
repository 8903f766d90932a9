"""Exhaustive property sweeps at desk scale.

Every suite walks a complete instance space (all creation sequences, or all
labelled graphs) and reports pass/fail counts with the smallest
counterexample.  Set THRESHOLD_GRAPHS_WORKERS to spread shards over processes.
"""

from threshold_graphs.enumeration import SweepConfig, default_workers, run_sweep

plan = [
    ("eigenbasis", 1, 12),
    ("spectrum", 1, 10),
    ("structure", 1, 10),
    ("agreement", 1, 6),
    ("commute", 1, 8),
    ("majorization", 1, 6),
    ("grone-merris", 1, 6),
    ("converse", 1, 5),
]
for suite, lo, hi in plan:
    report = run_sweep(SweepConfig(lo, hi, check_set=(suite,), worker_count=default_workers()))
    print(f"\n== {suite}, n = {lo}..{hi}")
    print(report.to_table())
