"""Exhaustive instance generators and the property-sweep harness.

Instances are addressed by integer codes so that work can be cut into
contiguous ranges and farmed out to worker processes:

* a creation sequence of length ``n`` is the code whose ``n - 1`` binary
  digits (most significant first) are ``b_2 ... b_n``;
* a labelled graph on ``n`` vertices is the code whose binary digits are the
  upper triangle of its adjacency matrix read row by row.

Partial results merge associatively, and each failed check keeps the
counterexample that comes first in enumeration order, so a sweep reports the
same thing regardless of how it was sharded.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from .errors import TooLarge
from .ferrers import fyd_to_adjacency, is_threshold_degrees, majorizes, sorted_degrees
from .graph_core import BinaryCreationSequence, ThresholdGraph, build_graph, complement, laplacian
from .graph_core import verify_weights, weight_realization
from .recognition import (
    ArbitraryGraph,
    block_form_check,
    equitable_partition_check,
    find_forbidden_subgraph,
    nested_neighborhood_check,
    peel_recognize,
)
from .spectral import (
    grone_merris_batch,
    spectrum_from_cells,
    spectrum_from_charpoly,
    spectrum_from_conjugate,
    standard_eigenbasis,
    verify_shared_eigenbasis,
)

__all__ = [
    "ALL_GRAPHS_MAX_N",
    "SUITES",
    "SweepConfig",
    "CheckResult",
    "SweepReport",
    "enumerate_bcs",
    "bcs_from_code",
    "bcs_count",
    "enumerate_all_graphs",
    "graph_from_code",
    "graph_code",
    "adjacency_stack",
    "run_sweep",
]

ALL_GRAPHS_MAX_N = 7
WORKERS_ENV = "THRESHOLD_GRAPHS_WORKERS"


def bcs_count(n: int, connected_only: bool = False) -> int:
    if n == 1:
        return 1
    return 2 ** (n - 2) if connected_only else 2 ** (n - 1)


def bcs_from_code(n: int, code: int) -> BinaryCreationSequence:
    if n == 1:
        return BinaryCreationSequence((code & 1,))
    tail = format(code, f"0{n - 1}b")
    return BinaryCreationSequence.from_string(tail[0] + tail)


def _bcs_codes(n: int, connected_only: bool, lo: int = 0, hi: Optional[int] = None) -> range:
    if n == 1:
        code = 1 if connected_only else 0
        return range(code, code + 1)[lo:hi]
    if connected_only:
        return range(1, 2 ** (n - 1), 2)[lo:hi]
    return range(2 ** (n - 1))[lo:hi]


def enumerate_bcs(n: int, connected_only: bool = False) -> Iterator[BinaryCreationSequence]:
    """Every creation sequence of length ``n`` in lexicographic order.

    With ``connected_only`` only sequences ending in 1 are produced.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    for code in _bcs_codes(n, connected_only):
        yield bcs_from_code(n, code)


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def adjacency_stack(n: int, codes) -> np.ndarray:
    """Adjacency matrices for an array of graph codes, shape ``(len(codes), n, n)``."""
    codes = np.asarray(codes, dtype=np.int64)
    pairs = _pairs(n)
    width = len(pairs)
    a = np.zeros((codes.size, n, n), dtype=np.int64)
    for j, (u, v) in enumerate(pairs):
        bit = (codes >> (width - 1 - j)) & 1
        a[:, u, v] = bit
        a[:, v, u] = bit
    return a


def graph_from_code(n: int, code: int) -> ArbitraryGraph:
    return ArbitraryGraph(adjacency_stack(n, [code])[0])


def graph_code(g) -> str:
    """Upper-triangle bitstring, row-major."""
    a = np.asarray(g.adjacency)
    return "".join(str(int(a[u, v])) for u, v in _pairs(a.shape[0]))


def _check_all_graphs_n(n: int) -> None:
    if not 1 <= n <= ALL_GRAPHS_MAX_N:
        raise TooLarge(f"all-graph enumeration is limited to 1 <= n <= {ALL_GRAPHS_MAX_N}, got {n}")


def enumerate_all_graphs(n: int) -> Iterator[ArbitraryGraph]:
    """Every labelled graph on ``n`` vertices, in code order."""
    _check_all_graphs_n(n)
    total = 2 ** (n * (n - 1) // 2)
    chunk = 4096
    for lo in range(0, total, chunk):
        for a in adjacency_stack(n, np.arange(lo, min(lo + chunk, total))):
            yield ArbitraryGraph(a)


# --------------------------------------------------------------------------
# Reports


@dataclass
class CheckResult:
    passed: int = 0
    failed: int = 0
    # (n, code, encoding, message) of the earliest failure seen
    counterexample: Optional[tuple[int, int, str, str]] = None

    def record(self, ok: bool, n: int, code: int, encoding: Callable[[], str],
               message: Callable[[], str] | str = "") -> None:
        """Count one instance; ``encoding`` and ``message`` are only evaluated on failure."""
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.counterexample is None or (n, code) < self.counterexample[:2]:
            text = message() if callable(message) else message
            self.counterexample = (n, code, encoding(), text)

    def merge(self, other: "CheckResult") -> "CheckResult":
        candidates = [c for c in (self.counterexample, other.counterexample) if c is not None]
        first = min(candidates, key=lambda c: c[:2]) if candidates else None
        return CheckResult(self.passed + other.passed, self.failed + other.failed, first)

    @property
    def total(self) -> int:
        return self.passed + self.failed

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SweepReport:
    results: dict[str, CheckResult] = field(default_factory=dict)
    wall_time: float = 0.0

    def merge(self, other: "SweepReport") -> "SweepReport":
        merged = dict(self.results)
        for name, res in other.results.items():
            merged[name] = merged[name].merge(res) if name in merged else res
        return SweepReport(merged, self.wall_time + other.wall_time)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def to_json(self) -> dict:
        out = {"ok": self.ok, "wall_time": round(self.wall_time, 3), "checks": {}}
        for name in sorted(self.results):
            r = self.results[name]
            entry = {"passed": r.passed, "failed": r.failed}
            if r.counterexample is not None:
                n, _, enc, msg = r.counterexample
                entry["counterexample"] = {"n": n, "encoding": enc, "message": msg}
            out["checks"][name] = entry
        return out

    def to_table(self) -> str:
        rows = [("check", "passed", "failed", "first counterexample")]
        for name in sorted(self.results):
            r = self.results[name]
            ce = "" if r.counterexample is None else f"n={r.counterexample[0]} {r.counterexample[2]}"
            rows.append((name, str(r.passed), str(r.failed), ce))
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        lines.append(f"{'PASS' if self.ok else 'FAIL'} in {self.wall_time:.2f}s")
        return "\n".join(lines)


# --------------------------------------------------------------------------
# Suites.  Each takes (n, lo, hi, connected_only) and returns {check: CheckResult}.


def _bcs_unit(n, lo, hi, connected_only):
    for code in _bcs_codes(n, connected_only, lo, hi):
        yield code, build_graph(bcs_from_code(n, code))


def _suite_eigenbasis(n, lo, hi, connected_only):
    res = CheckResult()
    for code, g in _bcs_unit(n, lo, hi, connected_only):
        report = verify_shared_eigenbasis(g)
        res.record(report.all_passed, n, code, lambda: str(g.bcs), lambda: f"x_{report.first_failure} fails")
    return {"eigenbasis": res}


def _suite_spectrum(n, lo, hi, connected_only):
    agree, trace = CheckResult(), CheckResult()
    for code, g in _bcs_unit(n, lo, hi, connected_only):
        by_conj = spectrum_from_conjugate(g)
        by_cells = spectrum_from_cells(g)
        by_poly = spectrum_from_charpoly(g)
        agree.record(by_conj == by_cells == by_poly, n, code, lambda: str(g.bcs),
                     lambda: f"conjugate {by_conj} cells {by_cells} charpoly {by_poly}")
        traces = {s.trace for s in (by_conj, by_cells, by_poly)}
        totals = {s.total for s in (by_conj, by_cells, by_poly)}
        trace.record(traces == {2 * g.edge_count} and totals == {n}, n, code, lambda: str(g.bcs))
    return {"spectrum-agreement": agree, "spectrum-trace": trace}


def _suite_weights(n, lo, hi, connected_only):
    res = CheckResult()
    for code, g in _bcs_unit(n, lo, hi, connected_only):
        res.record(verify_weights(g, weight_realization(g)), n, code, lambda: str(g.bcs))
    return {"weights": res}


def _degree_order(g: ThresholdGraph) -> np.ndarray:
    return np.argsort(-np.asarray(g.degrees), kind="stable")


def _suite_structure(n, lo, hi, connected_only):
    out = {name: CheckResult() for name in ("block-form", "nested", "equitable", "fyd", "complement")}
    for code, g in _bcs_unit(n, lo, hi, connected_only):
        enc = lambda: str(g.bcs)  # noqa: E731
        out["block-form"].record(block_form_check(g), n, code, enc)
        out["nested"].record(nested_neighborhood_check(g), n, code, enc)
        out["equitable"].record(equitable_partition_check(g), n, code, enc)
        order = _degree_order(g)
        d = sorted_degrees(g)
        fyd_ok = is_threshold_degrees(d) and np.array_equal(
            fyd_to_adjacency(d), g.adjacency[np.ix_(order, order)])
        out["fyd"].record(fyd_ok, n, code, enc)
        gc = complement(g)
        comp_ok = (np.array_equal(gc.adjacency, 1 - np.eye(n, dtype=np.int64) - g.adjacency)
                   and complement(gc) == g)
        out["complement"].record(comp_ok, n, code, enc)
    return out


def _agreement_record(res, rebuild, a, n, code, enc):
    forb = find_forbidden_subgraph(a) is None
    peel = peel_recognize(a)
    degs = is_threshold_degrees(tuple(sorted(a.sum(axis=1).tolist(), reverse=True)))
    res.record(forb == peel.is_threshold == degs, n, code, enc,
               lambda: f"forbidden={forb} peel={peel.is_threshold} degrees={degs}")
    if peel.is_threshold:
        order = np.asarray(peel.peel_order)
        rebuilt = build_graph(peel.bcs).adjacency
        rebuild.record(np.array_equal(rebuilt, a[np.ix_(order, order)]), n, code, enc)
    return forb


def _suite_agreement(n, lo, hi, connected_only):
    _check_all_graphs_n(n)
    res, rebuild = CheckResult(), CheckResult()
    total = 2 ** (n * (n - 1) // 2)
    codes = np.arange(lo, min(hi if hi is not None else total, total))
    for code, a in zip(codes.tolist(), adjacency_stack(n, codes)):
        _agreement_record(res, rebuild, a, n, code, lambda: graph_code(ArbitraryGraph(a)))
    return {"agreement": res, "peel-rebuild": rebuild}


def _scramble(n: int) -> np.ndarray:
    # fixed non-trivial relabelling so peeling has real work to do
    return np.random.default_rng(n).permutation(n)


def _suite_agreement_threshold(n, lo, hi, connected_only):
    res, rebuild = CheckResult(), CheckResult()
    perm = _scramble(n)
    for code, g in _bcs_unit(n, lo, hi, connected_only):
        a = np.asarray(g.adjacency)[np.ix_(perm, perm)]
        _agreement_record(res, rebuild, a, n, code, lambda: str(g.bcs))
    return {"agreement-threshold": res, "peel-rebuild-threshold": rebuild}


def _suite_commute(n, lo, hi, connected_only):
    """Pairs ``i < j`` of threshold Laplacians of order ``n``; the unit range indexes the first member."""
    res = CheckResult()
    codes = list(_bcs_codes(n, connected_only))
    laps = np.stack([laplacian(build_graph(bcs_from_code(n, c))) for c in codes]).astype(np.int64)
    for i in range(len(codes))[lo:hi]:
        left = laps[i]
        rest = laps[i + 1:]
        if rest.shape[0] == 0:
            continue
        ok = (np.matmul(left, rest) == np.matmul(rest, left)).all(axis=(1, 2))
        for j, flag in enumerate(ok.tolist(), start=i + 1):
            pair_code = i * len(codes) + j
            res.record(flag, n, pair_code,
                       lambda j=j: f"{bcs_from_code(n, codes[i])},{bcs_from_code(n, codes[j])}")
    return {"commute": res}


def _graphic_sequences(n: int) -> dict[int, set[tuple[int, ...]]]:
    total = 2 ** (n * (n - 1) // 2)
    by_m: dict[int, set] = {}
    for lo in range(0, total, 1 << 14):
        a = adjacency_stack(n, np.arange(lo, min(lo + (1 << 14), total)))
        degs = -np.sort(-a.sum(axis=2), axis=1)
        for row in np.unique(degs, axis=0).tolist():
            by_m.setdefault(sum(row) // 2, set()).add(tuple(row))
    return by_m


def _suite_majorization(n, lo, hi, connected_only):
    _check_all_graphs_n(n)
    res = CheckResult()
    graphic = _graphic_sequences(n)
    for code, g in _bcs_unit(n, lo, hi, connected_only):
        t = sorted_degrees(g)
        rivals = graphic.get(g.edge_count, set())
        beaten = [d for d in rivals if d != t and majorizes(d, t)]
        res.record(not beaten, n, code, lambda: str(g.bcs),
                   lambda: f"{beaten[0]} strictly majorizes {t}" if beaten else "")
    return {"majorization": res}


def _suite_grone_merris(n, lo, hi, connected_only):
    _check_all_graphs_n(n)
    bound, equality = CheckResult(), CheckResult()
    total = 2 ** (n * (n - 1) // 2)
    codes = np.arange(lo, min(hi if hi is not None else total, total))
    a = adjacency_stack(n, codes)
    out = grone_merris_batch(a)
    degrees = (-np.sort(-a.sum(axis=2), axis=1)).tolist()
    for idx, code in enumerate(codes.tolist()):
        threshold = is_threshold_degrees(degrees[idx])
        holds, equal = bool(out["holds"][idx]), bool(out["equality"][idx])
        enc = lambda idx=idx: graph_code(ArbitraryGraph(a[idx]))  # noqa: E731
        bound.record(holds, n, code, enc, lambda idx=idx: f"eigenvalues {out['eigenvalues'][idx]}")
        equality.record(equal == threshold, n, code, enc,
                        lambda e=equal, t=threshold: f"equality={e} threshold={t}")
    return {"grone-merris-bound": bound, "grone-merris-equality": equality}


def _suite_converse(n, lo, hi, connected_only):
    """Connected non-threshold graphs: no relabelling makes every standard column an eigenvector."""
    _check_all_graphs_n(n)
    res = CheckResult()
    total = 2 ** (n * (n - 1) // 2)
    codes = np.arange(lo, min(hi if hi is not None else total, total))
    x = standard_eigenbasis(n).matrix
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    for code, a in zip(codes.tolist(), adjacency_stack(n, codes)):
        g = ArbitraryGraph(a)
        if not g.is_connected() or find_forbidden_subgraph(a) is None:
            continue
        lap = laplacian(g)
        relabelled = lap[perms[:, :, None], perms[:, None, :]]
        lx = relabelled @ x
        # x_k has entry k at row k, so its only candidate eigenvalue is (L x_k)[k] / k
        ks = np.arange(n)
        cand = np.diagonal(lx, axis1=1, axis2=2)
        is_eig = (lx * ks[None, None, :] == x[None] * cand[:, None, :]).all(axis=1)
        # x_0 = j is an eigenvector of every Laplacian
        is_eig[:, 0] = True
        every_column = is_eig.all(axis=1)
        res.record(not every_column.any(), n, code, lambda: graph_code(g),
                   "some relabelling makes the standard basis an eigenbasis")
    return {"converse": res}


SUITES: dict[str, tuple[Callable, str]] = {
    "eigenbasis": (_suite_eigenbasis, "bcs"),
    "spectrum": (_suite_spectrum, "bcs"),
    "weights": (_suite_weights, "bcs"),
    "structure": (_suite_structure, "bcs"),
    "agreement": (_suite_agreement, "graphs"),
    "agreement-threshold": (_suite_agreement_threshold, "bcs"),
    "commute": (_suite_commute, "bcs"),
    "majorization": (_suite_majorization, "bcs"),
    "grone-merris": (_suite_grone_merris, "graphs"),
    "converse": (_suite_converse, "graphs"),
}


@dataclass(frozen=True)
class SweepConfig:
    n_min: int
    n_max: int
    connected_only: bool = False
    worker_count: int = 1
    check_set: tuple[str, ...] = ("eigenbasis",)
    shard_size: int = 2048

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")
        unknown = set(self.check_set) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}; choose from {sorted(SUITES)}")
        object.__setattr__(self, "check_set", tuple(self.check_set))


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _units(cfg: SweepConfig) -> list[tuple[str, int, int, int, bool]]:
    units = []
    for suite in cfg.check_set:
        universe = SUITES[suite][1]
        for n in range(cfg.n_min, cfg.n_max + 1):
            if universe == "graphs":
                _check_all_graphs_n(n)
                size = 2 ** (n * (n - 1) // 2)
            else:
                size = len(_bcs_codes(n, cfg.connected_only))
            if suite == "commute" or suite == "majorization":
                units.append((suite, n, 0, size, cfg.connected_only))
                continue
            for lo in range(0, size, cfg.shard_size):
                units.append((suite, n, lo, min(lo + cfg.shard_size, size), cfg.connected_only))
    return units


def _run_unit(unit) -> SweepReport:
    suite, n, lo, hi, connected_only = unit
    fn = SUITES[suite][0]
    return SweepReport(fn(n, lo, hi, connected_only))


def run_sweep(cfg: SweepConfig) -> SweepReport:
    """Run the selected suites over every instance in ``cfg.n_min .. cfg.n_max``."""
    start = time.perf_counter()
    units = _units(cfg)
    report = SweepReport()
    if cfg.worker_count == 1 or len(units) == 1:
        parts = map(_run_unit, units)
    else:
        pool = ProcessPoolExecutor(max_workers=cfg.worker_count)
        parts = pool.map(_run_unit, units)
    try:
        for part in parts:
            report = report.merge(part)
    finally:
        if cfg.worker_count != 1 and len(units) != 1:
            pool.shutdown()
    report.wall_time = time.perf_counter() - start
    return report
