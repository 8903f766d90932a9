"""Command-line interface: ``threshold-graphs <command> [options]``.

Exit codes: 0 success, 1 a checked property failed, 2 bad input, 3 the
spectrum methods disagree (an internal error).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

import numpy as np

from .enumeration import SUITES, SweepConfig, default_workers, enumerate_bcs, run_sweep
from .errors import NonIntegralSpectrum, NotThreshold, ThresholdGraphError
from .ferrers import FerrersDiagram, sorted_degrees
from .graph_core import (
    CellKind,
    CompactCreationSequence,
    ThresholdGraph,
    build_graph,
    ccs_to_bcs,
    graph_to_json,
    laplacian,
    validate_bcs,
)
from .recognition import (
    as_threshold_graph,
    forbidden_subgraph_check,
    parse_graph_text,
    peel_recognize,
)
from .spectral import (
    char_poly,
    commute_check,
    grone_merris_check,
    integer_roots,
    spectrum_from_cells,
    spectrum_from_conjugate,
    standard_eigenbasis,
    verify_shared_eigenbasis,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3

CLIQUE_COLOR = "lightcoral"
COCLIQUE_COLOR = "lightblue"


class InputError(Exception):
    pass


# --------------------------------------------------------------------------
# input


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise InputError(f"expected N or LO..HI, got {text!r}") from None


def _graph_from_ccs(text: str, first_run: Optional[str]) -> ThresholdGraph:
    runs = _parse_ints(text)
    if first_run:
        ccs = CompactCreationSequence(tuple(runs), CellKind(first_run))
    else:
        ccs = CompactCreationSequence.connected(tuple(runs))
    return build_graph(ccs_to_bcs(ccs))


def _graphs(args, stdin) -> list:
    graphs = [build_graph(validate_bcs(b)) for b in args.bcs or []]
    graphs += [_graph_from_ccs(c, args.first_run) for c in args.ccs or []]
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            graphs.append(parse_graph_text(fh.read()))
    if not graphs:
        text = stdin.read()
        if not text.strip():
            raise InputError("no graph given: use --bcs, --ccs, --file or pipe a graph on stdin")
        graphs.append(parse_graph_text(text))
    return graphs


def _one_graph(args, stdin):
    graphs = _graphs(args, stdin)
    if len(graphs) != 1:
        raise InputError(f"{args.command} takes exactly one graph, got {len(graphs)}")
    return graphs[0]


# --------------------------------------------------------------------------
# output


def _dot(g) -> str:
    lines = ["graph threshold {", "  node [shape=circle, style=filled];"]
    if isinstance(g, ThresholdGraph):
        for i, cell in enumerate(g.cells, start=1):
            color = CLIQUE_COLOR if cell.kind is CellKind.CLIQUE else COCLIQUE_COLOR
            lines.append(f"  subgraph cluster_{i} {{")
            lines.append(f'    label="cell {i}: {cell.kind.value} ({cell.size})";')
            members = " ".join(str(v + 1) for v in cell.vertices)
            lines.append(f'    node [fillcolor="{color}"]; {members};')
            lines.append("  }")
    else:
        lines.append("  " + " ".join(str(v) for v in range(1, g.n + 1)) + ";")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def _csv(matrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(matrix).tolist():
        writer.writerow(row)
    return buf.getvalue().rstrip("\n")


def _graph_record(g) -> dict:
    return graph_to_json(g) if isinstance(g, ThresholdGraph) else g.to_json()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# --------------------------------------------------------------------------
# commands; each returns (text, exit_code)


def cmd_build(args, stdin):
    g = _one_graph(args, stdin)
    if args.format == "dot":
        return _dot(g), EXIT_OK
    if args.format == "text":
        if isinstance(g, ThresholdGraph):
            return f"{g!r}\ncells: {[(c.size, c.kind.value) for c in g.cells]}\ndegrees: {list(g.degrees)}", EXIT_OK
        return f"n={g.n} m={g.edge_count}", EXIT_OK
    return _dump(_graph_record(g)), EXIT_OK


def cmd_recognize(args, stdin):
    g = _one_graph(args, stdin)
    forb = forbidden_subgraph_check(g)
    peel = peel_recognize(g)
    degrees = FerrersDiagram.from_degrees(sorted_degrees(g))
    out = {
        "is_threshold": forb.is_threshold,
        "forbidden_subgraph": forb.to_json(),
        "peel": peel.to_json(),
        "durfee_condition": degrees.is_threshold,
    }
    agree = forb.is_threshold == peel.is_threshold == degrees.is_threshold
    out["recognizers_agree"] = agree
    if args.format == "text":
        verdict = "threshold" if forb.is_threshold else f"not threshold (induced {forb.witness_kind})"
        return verdict, EXIT_OK if agree else EXIT_DISAGREE
    return _dump(out), EXIT_OK if agree else EXIT_DISAGREE


def cmd_spectrum(args, stdin):
    g = _one_graph(args, stdin)
    methods = ["conjugate", "cells", "charpoly"] if args.method == "all" else [args.method]
    results = {}
    try:
        tg = as_threshold_graph(g)
    except NotThreshold:
        tg = None
    for method in methods:
        if method in ("conjugate", "cells") and tg is None:
            if args.method != "all":
                raise InputError(f"method '{method}' needs a threshold graph")
            continue
        if method == "conjugate":
            results[method] = spectrum_from_conjugate(tg).to_json()
        elif method == "cells":
            results[method] = spectrum_from_cells(tg).to_json()
        else:
            L = laplacian(g)
            poly = char_poly(L)
            try:
                results[method] = integer_roots(poly, nonnegative=True, bound=L.shape[0]).to_json()
            except NonIntegralSpectrum:
                results[method] = {"integral": False, "charpoly": list(poly.coeffs)}
    distinct = {json.dumps(v, sort_keys=True) for v in results.values()}
    agree = len(distinct) <= 1
    out = {"methods": results, "agree": agree}
    if args.format == "text":
        text = "\n".join(f"{k}: " + ", ".join(f"{e['value']}^{e['multiplicity']}" for e in v.get("eigenvalues", []))
                         for k, v in results.items())
        text += f"\nagree: {agree}"
    else:
        text = _dump(out)
    return text, EXIT_OK if agree else EXIT_DISAGREE


def cmd_eigenbasis(args, stdin):
    if args.n is None:
        raise InputError("eigenbasis needs --n")
    n = _parse_range(args.n)[1]
    x = standard_eigenbasis(n).matrix
    if args.format == "csv":
        return _csv(x), EXIT_OK
    if args.format == "text":
        width = max(len(str(v)) for v in x.ravel())
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in x.tolist()), EXIT_OK
    return _dump({"n": n, "columns": x.T.tolist()}), EXIT_OK


def cmd_verify(args, stdin):
    g = _one_graph(args, stdin)
    report = verify_shared_eigenbasis(g)
    code = EXIT_OK if report.all_passed else EXIT_FAIL
    if args.format == "text":
        lines = [f"x_{c.index}: mu={c.eigenvalue} {'ok' if c.passed else 'FAIL'}" for c in report.checks]
        lines.append("all pass" if report.all_passed else f"first failure at index {report.first_failure}")
        return "\n".join(lines), code
    return _dump(report.to_json()), code


def cmd_fyd(args, stdin):
    if args.degrees is not None:
        d = _parse_ints(args.degrees)
    else:
        d = sorted_degrees(_one_graph(args, stdin))
    diagram = FerrersDiagram.from_degrees(d)
    verdict = "threshold" if diagram.is_threshold else "not threshold"
    if args.format == "json":
        return _dump({**diagram.to_json(), "is_threshold": diagram.is_threshold}), EXIT_OK
    text = "\n".join([
        diagram.render(),
        f"conjugate: {list(diagram.conjugate)}",
        f"durfee: {diagram.durfee}",
        f"verdict: {verdict}",
    ])
    return text, EXIT_OK


def cmd_commute(args, stdin):
    if args.n is not None and not (args.bcs or args.ccs or args.file):
        lo, hi = _parse_range(args.n)
        report = run_sweep(SweepConfig(lo, hi, check_set=("commute",), worker_count=1))
        res = report.results["commute"]
        out = {"pairs": res.total, "commuting": res.passed}
        return _dump(out) if args.format != "text" else f"{res.passed}/{res.total} pairs commute", (
            EXIT_OK if res.ok else EXIT_FAIL)
    graphs = _graphs(args, stdin)
    if len(graphs) != 2:
        raise InputError(f"commute takes two graphs (or --n), got {len(graphs)}")
    ok = commute_check(laplacian(graphs[0]), laplacian(graphs[1]))
    text = _dump({"commute": ok}) if args.format != "text" else ("commute" if ok else "do not commute")
    return text, EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(args, stdin):
    if args.n is None:
        raise InputError("enumerate needs --n")
    lo, hi = _parse_range(args.n)
    seqs = [str(b) for n in range(lo, hi + 1) for b in enumerate_bcs(n, args.connected)]
    if args.format == "text":
        return "\n".join(seqs), EXIT_OK
    return _dump({"count": len(seqs), "bcs": seqs}), EXIT_OK


def cmd_sweep(args, stdin):
    lo, hi = _parse_range(args.n or "1..8")
    suites = []
    for item in args.suite or ["eigenbasis"]:
        suites += [s for s in item.split(",") if s]
    if "all" in suites:
        suites = list(SUITES)
    workers = args.workers if args.workers is not None else default_workers()
    cfg = SweepConfig(lo, hi, connected_only=args.connected, worker_count=workers, check_set=tuple(suites))
    report = run_sweep(cfg)
    text = _dump(report.to_json()) if args.format == "json" else report.to_table()
    return text, EXIT_OK if report.ok else EXIT_FAIL


def cmd_export(args, stdin):
    if args.matrix == "eigenbasis":
        if args.n is not None:
            n = _parse_range(args.n)[1]
        else:
            n = _one_graph(args, stdin).n
        matrix = standard_eigenbasis(n).matrix
    else:
        g = _one_graph(args, stdin)
        if args.format == "dot":
            return _dot(g), EXIT_OK
        matrix = laplacian(g) if args.matrix == "laplacian" else np.asarray(g.adjacency)
    if args.format == "json":
        return _dump({"matrix": args.matrix, "rows": np.asarray(matrix).tolist()}), EXIT_OK
    return _csv(matrix), EXIT_OK


def cmd_grone_merris(args, stdin):
    g = _one_graph(args, stdin)
    report = grone_merris_check(g, tol=args.tol)
    if args.format == "text":
        eig = ", ".join(f"{v:.12g}" if not report.exact else str(v) for v in report.eigenvalues)
        text = f"eigenvalues: {eig}\nconjugate: {list(report.conjugate)}\n" \
               f"bound holds: {report.holds}\nequality: {report.equality}"
    else:
        text = _dump(report.to_json())
    return text, EXIT_OK if report.holds else EXIT_FAIL


COMMANDS = {
    "build": (cmd_build, "build a threshold graph from a creation sequence", "json"),
    "recognize": (cmd_recognize, "run the three threshold recognizers", "json"),
    "spectrum": (cmd_spectrum, "Laplacian spectrum by conjugate degrees, cells and char-poly", "json"),
    "eigenbasis": (cmd_eigenbasis, "print the standard integer eigenbasis of order n", "text"),
    "verify": (cmd_verify, "check the standard eigenbasis against a graph's Laplacian", "json"),
    "fyd": (cmd_fyd, "Ferrers diagram, conjugate and Durfee square", "text"),
    "commute": (cmd_commute, "check that Laplacians commute", "json"),
    "enumerate": (cmd_enumerate, "list creation sequences", "text"),
    "sweep": (cmd_sweep, "run exhaustive property suites", "text"),
    "export": (cmd_export, "export adjacency, Laplacian or eigenbasis matrices", "csv"),
    "grone-merris": (cmd_grone_merris, "compare Laplacian eigenvalues with conjugate degrees", "json"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="threshold-graphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text, default_format) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--bcs", action="append", help="binary creation sequence, e.g. 001")
        p.add_argument("--ccs", action="append", help="compact creation sequence, e.g. 2,3,4")
        p.add_argument("--first-run", choices=[k.value for k in CellKind],
                       help="kind of the first CCS run (default: connected convention)")
        p.add_argument("--file", help="graph file: JSON record, edge-list JSON or 0/1 matrix")
        p.add_argument("--degrees", help="comma-separated degree sequence (fyd)")
        p.add_argument("--format", choices=["json", "text", "dot", "csv"], default=default_format)
        p.add_argument("--method", choices=["conjugate", "cells", "charpoly", "all"], default="all")
        p.add_argument("--suite", action="append", help=f"sweep suite(s): {', '.join(SUITES)}, or all")
        p.add_argument("--n", help="order N or range LO..HI")
        p.add_argument("--workers", type=int, help="sweep worker processes (env THRESHOLD_GRAPHS_WORKERS)")
        p.add_argument("--connected", action="store_true", help="only connected creation sequences")
        p.add_argument("--matrix", choices=["adjacency", "laplacian", "eigenbasis"], default="adjacency")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--out", help="write output to this file instead of stdout")
    return parser


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    handler = COMMANDS[args.command][0]
    try:
        text, code = handler(args, stdin)
    except (InputError, ThresholdGraphError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
