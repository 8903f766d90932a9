"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".  The file also runs as a script::

    python3 tests/test_acceptance.py
"""

import itertools
import math
import time

import numpy as np
import pytest

from threshold_graphs import (
    ArbitraryGraph,
    antiregular_graph,
    antiregular_spectrum,
    build_graph,
    ccs_to_bcs,
    commute_check,
    laplacian,
    spectrum_from_cells,
    spectrum_from_charpoly,
    spectrum_from_conjugate,
    standard_eigenbasis,
    verify_eigenpair,
)
from threshold_graphs.enumeration import (
    SweepConfig,
    adjacency_stack,
    bcs_from_code,
    enumerate_bcs,
    run_sweep,
)
from threshold_graphs.recognition import find_forbidden_subgraph
from threshold_graphs.spectral import predicted_eigenvalue, predicted_eigenvalues


def _sweep(suite, n_min, n_max):
    return run_sweep(SweepConfig(n_min, n_max, check_set=(suite,)))


def _summary(report):
    return ", ".join(f"{k} {r.passed}/{r.total}" for k, r in sorted(report.results.items()))


def _finish(log, number, description, ok, detail=""):
    log.record(number, description, ok, detail)
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_01_shared_eigenbasis(acceptance_log):
    start = time.perf_counter()
    report = _sweep("eigenbasis", 1, 12)
    elapsed = time.perf_counter() - start
    res = report.results["eigenbasis"]
    ok = res.ok and res.total == 4095 and elapsed < 30
    _finish(acceptance_log, 1, "standard basis is a shared eigenbasis, n=1..12", ok,
            f"{res.passed}/{res.total} graphs, {elapsed:.1f}s, counterexample={res.counterexample}")


def test_criterion_02_converse(acceptance_log):
    """Literal route: every relabelling of every connected non-threshold graph, via verify_eigenpair."""
    graphs = relabellings = 0
    survivors = []
    for n in range(1, 6):
        x = standard_eigenbasis(n)
        perms = list(itertools.permutations(range(n)))
        total = 2 ** (n * (n - 1) // 2)
        for a in adjacency_stack(n, np.arange(total)):
            g = ArbitraryGraph(a)
            if not g.is_connected() or find_forbidden_subgraph(a) is None:
                continue
            graphs += 1
            for p in perms:
                h = g.relabel(p)
                L = laplacian(h)
                relabellings += 1
                if all(verify_eigenpair(L, x.column(k), predicted_eigenvalue(h, k)) for k in range(1, n)):
                    survivors.append((n, p, g.edges()))
    # the batched sweep checks the stronger statement (no eigenvalue at all fits)
    stronger = _sweep("converse", 1, 5).results["converse"]
    ok = not survivors and graphs > 0 and stronger.ok and stronger.total == graphs
    _finish(acceptance_log, 2, "no relabelling of a connected non-threshold graph (n<=5) passes", ok,
            f"{graphs} graphs, {relabellings} relabellings, survivors={survivors[:1]}")


def test_criterion_03_triple_spectrum(acceptance_log):
    report = _sweep("spectrum", 1, 10)
    agree, trace = report.results["spectrum-agreement"], report.results["spectrum-trace"]
    ok = report.ok and agree.total == trace.total == 1023
    _finish(acceptance_log, 3, "conjugate = cell rule = char-poly roots, trace 2m, n<=10", ok, _summary(report))


def test_criterion_04_figure_values(acceptance_log):
    big = build_graph(ccs_to_bcs([2, 3, 4, 5, 6, 7]))
    small = build_graph(ccs_to_bcs([2, 1, 1, 5, 1, 3, 1]))
    dominating = sum(k - 1 for k, b in enumerate(small.bcs.bits, start=1) if k >= 2 and b == 1)
    stable = build_graph(small.bcs).edge_count == small.edge_count == len(small.edges())
    ok = (big.n, big.edge_count, len(big.cells)) == (27, 225, 6) and stable and small.edge_count == dominating
    _finish(acceptance_log, 4, "C(2,3,4,5,6,7) has n=27, m=225, 6 cells", ok,
            f"n={big.n} m={big.edge_count} cells={len(big.cells)}; "
            f"C(2,1,1,5,1,3,1) m={small.edge_count} (sum over dominating steps {dominating})")


def test_criterion_05_antiregular(acceptance_log):
    bad = []
    for n in range(2, 13):
        g = antiregular_graph(n)
        expected = antiregular_spectrum(n)
        expected_values = [v for v in range(n + 1) if v != math.ceil(n / 2)]
        routes = (spectrum_from_conjugate(g), spectrum_from_cells(g), spectrum_from_charpoly(g))
        if any(s != expected or s.values() != expected_values for s in routes):
            bad.append(n)
    _finish(acceptance_log, 5, "antiregular spectrum is {0..n} minus ceil(n/2), simple, n=2..12", not bad,
            f"failing n: {bad}")


def test_criterion_06_commuting_laplacians(acceptance_log):
    pairs, bad = 0, []
    for n in range(1, 9):
        laps = [laplacian(build_graph(b)) for b in enumerate_bcs(n)]
        for i, j in itertools.combinations(range(len(laps)), 2):
            pairs += 1
            if not commute_check(laps[i], laps[j]):
                bad.append((n, i, j))
    sweep = _sweep("commute", 1, 8).results["commute"]
    ok = not bad and sweep.ok and sweep.total == pairs
    _finish(acceptance_log, 6, "threshold Laplacians of equal order commute, n<=8", ok,
            f"{pairs} pairs, failures={bad[:1]}")


def test_criterion_07_recognizer_agreement(acceptance_log):
    labelled = _sweep("agreement", 1, 6)
    threshold = _sweep("agreement-threshold", 1, 10)
    counts_ok = (labelled.results["agreement"].total == sum(2 ** (n * (n - 1) // 2) for n in range(1, 7))
                 and threshold.results["agreement-threshold"].total == 1023)
    ok = labelled.ok and threshold.ok and counts_ok
    _finish(acceptance_log, 7, "three recognizers agree; peeled BCS rebuilds the graph", ok,
            f"{_summary(labelled)}; {_summary(threshold)}")


def test_criterion_08_grone_merris(acceptance_log):
    """Majorization form of the bound, plus exact equality iff threshold."""
    report = _sweep("grone-merris", 1, 6)
    ok = report.ok and report.results["grone-merris-bound"].total == 33867
    _finish(acceptance_log, 8, "Grone-Merris majorization bound, equality iff threshold, n<=6", ok,
            _summary(report) + "; bound read as prefix-sum majorization")


@pytest.mark.xfail(strict=True, reason="the entrywise reading of the bound is false; P4 is a counterexample")
def test_criterion_08_entrywise_reading(acceptance_log):
    from threshold_graphs.spectral import grone_merris_batch

    failures = 0
    for n in range(1, 7):
        out = grone_merris_batch(adjacency_stack(n, np.arange(2 ** (n * (n - 1) // 2))))
        failures += int((~out["pointwise"]).sum())
    acceptance_log.record("8b", "entrywise reading lambda_k <= conj_k over all graphs n<=6", failures == 0,
                          f"{failures} graphs violate it; expected, see P4")
    assert failures == 0


def test_criterion_09_majorization(acceptance_log):
    report = _sweep("majorization", 1, 6)
    res = report.results["majorization"]
    _finish(acceptance_log, 9, "no graphic sequence strictly majorizes a threshold sequence, n<=6",
            report.ok and res.total == 63, _summary(report))


def test_criterion_10_weights(acceptance_log):
    report = _sweep("weights", 1, 10)
    _finish(acceptance_log, 10, "weight realization reproduces every edge, n<=10",
            report.ok and report.results["weights"].total == 1023, _summary(report))


def test_predicted_eigenvalues_match_formula_spot_check():
    # mu_k = deg(vertex k+1) + a(1, k+1), cross-checked against a naive reading of the bits
    for bcs in enumerate_bcs(7):
        g = build_graph(bcs)
        bits = bcs.bits
        for k in range(1, 7):
            degree = k * bits[k] + sum(bits[k + 1:])
            assert predicted_eigenvalues(g)[k] == degree + bits[k]


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-rA"]))
