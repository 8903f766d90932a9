"""Recognizers for threshold graphs on arbitrary labelled input.

Three characterizations are implemented independently of each other:

* :func:`forbidden_subgraph_check` scans every 4-subset for an induced
  ``P4``, ``C4`` or ``2K2``;
* :func:`peel_recognize` strips dominating or isolated vertices one at a time;
* :func:`.ferrers.is_threshold_degrees` tests the degree sequence alone.

The structural validators (nesting, equitable partition, block form) check a
given cell partition of a creation-ordered adjacency matrix.
"""

from __future__ import annotations

import json
from itertools import combinations
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidGraph
from .graph_core import BinaryCreationSequence, Cell, CellKind, ThresholdGraph, build_graph

__all__ = [
    "ArbitraryGraph",
    "RecognitionReport",
    "forbidden_subgraph_check",
    "find_forbidden_subgraph",
    "peel_recognize",
    "nested_neighborhood_check",
    "equitable_partition_check",
    "block_form_check",
    "parse_adjacency_json",
    "parse_matrix_text",
    "parse_graph_text",
]

P4, C4, TWO_K2 = "P4", "C4", "2K2"


@dataclass(frozen=True, eq=False)
class ArbitraryGraph:
    """A simple undirected graph given by a symmetric 0/1 matrix with zero diagonal."""

    adjacency: np.ndarray

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidGraph(f"adjacency must be square, got shape {a.shape}")
        if not np.isin(a, (0, 1)).all():
            raise InvalidGraph("adjacency entries must be 0 or 1")
        if not np.array_equal(a, a.T):
            raise InvalidGraph("adjacency must be symmetric")
        if a.diagonal().any():
            raise InvalidGraph("adjacency must have a zero diagonal (no loops)")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], one_based: bool = True):
        a = np.zeros((n, n), dtype=np.int64)
        off = 1 if one_based else 0
        for u, v in edges:
            u, v = int(u) - off, int(v) - off
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InvalidGraph(f"bad edge ({u + off}, {v + off}) for n={n}")
            a[u, v] = a[v, u] = 1
        return cls(a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.adjacency.sum(axis=1))

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)]

    def relabel(self, order: Sequence[int]) -> "ArbitraryGraph":
        """Graph whose vertex ``k`` is vertex ``order[k]`` of this one (0-based)."""
        idx = np.asarray(order)
        return ArbitraryGraph(self.adjacency[np.ix_(idx, idx)])

    def is_connected(self) -> bool:
        n = self.n
        if n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in np.flatnonzero(self.adjacency[v]):
                if int(u) not in seen:
                    seen.add(int(u))
                    stack.append(int(u))
        return len(seen) == n

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}


@dataclass(frozen=True)
class RecognitionReport:
    """Verdict plus certificate.

    A non-threshold verdict carries a ``witness``: four 0-based vertices
    inducing the forbidden graph named by ``witness_kind``.  A threshold
    verdict carries the creation sequence ``bcs`` and ``peel_order``, where
    ``peel_order[k]`` is the input vertex playing creation-order vertex ``k``.
    """

    is_threshold: bool
    witness: Optional[tuple[int, int, int, int]] = None
    witness_kind: Optional[str] = None
    peel_order: Optional[tuple[int, ...]] = None
    bcs: Optional[BinaryCreationSequence] = None

    def to_json(self) -> dict:
        out: dict = {"is_threshold": self.is_threshold}
        if self.witness is not None:
            out["witness"] = {"vertices": [v + 1 for v in self.witness], "kind": self.witness_kind}
        if self.bcs is not None:
            out["bcs"] = str(self.bcs)
            out["peel_order"] = [v + 1 for v in self.peel_order]
        return out


def _adjacency(g) -> np.ndarray:
    return np.asarray(getattr(g, "adjacency", g), dtype=np.int64)


def _classify_four(a: np.ndarray, quad) -> Optional[str]:
    sub = a[np.ix_(quad, quad)]
    deg = sorted(int(x) for x in sub.sum(axis=1))
    if deg == [1, 1, 1, 1]:
        return TWO_K2
    if deg == [2, 2, 2, 2]:
        return C4
    if deg == [1, 1, 2, 2]:
        return P4
    return None


_SMALL = 12


def _find_forbidden_small(a: np.ndarray):
    rows = [int("".join(map(str, r[::-1])), 2) for r in a.tolist()]
    for quad in combinations(range(a.shape[0]), 4):
        mask = (1 << quad[0]) | (1 << quad[1]) | (1 << quad[2]) | (1 << quad[3])
        if all(1 <= (rows[v] & mask).bit_count() <= 2 for v in quad):
            return quad, _classify_four(a, list(quad))
    return None


def find_forbidden_subgraph(g) -> Optional[tuple[tuple[int, int, int, int], str]]:
    """First 4-subset (lexicographic) inducing P4, C4 or 2K2, with its kind.

    Within a 4-vertex induced subgraph the three forbidden graphs are told
    apart by their degree multisets: 2K2 is (1,1,1,1), C4 is (2,2,2,2) and P4
    is (1,1,2,2).  The scan fixes the first two vertices and vectorizes over
    the remaining pairs.
    """
    a = _adjacency(g)
    n = a.shape[0]
    if n < 4:
        return None
    if n <= _SMALL:
        return _find_forbidden_small(a)
    cs, ds = np.triu_indices(n, k=1)
    for p in range(n - 3):
        for q in range(p + 1, n - 2):
            mask = cs > q
            c, d = cs[mask], ds[mask]
            e_pq = a[p, q]
            pc, pd, qc, qd, cd = a[p, c], a[p, d], a[q, c], a[q, d], a[c, d]
            deg_p = e_pq + pc + pd
            deg_q = e_pq + qc + qd
            deg_c = pc + qc + cd
            deg_d = pd + qd + cd
            degs = np.stack([deg_p, deg_q, deg_c, deg_d])
            # degree sums are even, so {1,2}-valued degrees force one of the three
            hit = (degs.min(axis=0) >= 1) & (degs.max(axis=0) <= 2)
            hits = np.flatnonzero(hit)
            if hits.size:
                k = hits[0]
                quad = (p, q, int(c[k]), int(d[k]))
                return quad, _classify_four(a, list(quad))
    return None


def forbidden_subgraph_check(g) -> RecognitionReport:
    """Recognize by searching for an induced P4, C4 or 2K2.

    On success the report is completed with a creation sequence from
    :func:`peel_recognize`; the verdict itself never depends on peeling.
    """
    found = find_forbidden_subgraph(g)
    if found is not None:
        quad, kind = found
        return RecognitionReport(False, witness=quad, witness_kind=kind)
    certificate = peel_recognize(g)
    return RecognitionReport(True, peel_order=certificate.peel_order, bcs=certificate.bcs)


def peel_recognize(g) -> RecognitionReport:
    """Recognize by repeatedly deleting a dominating or an isolated vertex.

    A dominating vertex is preferred over an isolated one, and ties go to the
    lowest index.  Reversing the deletions gives the creation order.  When the
    peeling gets stuck, the remaining core has no dominating or isolated
    vertex and therefore contains a forbidden 4-vertex subgraph, which is
    returned as the witness.
    """
    a = _adjacency(g)
    n = a.shape[0]
    alive = list(range(n))
    deg = a.sum(axis=1).astype(np.int64)
    removed: list[tuple[int, int]] = []  # (vertex, bit)
    while len(alive) > 1:
        size = len(alive)
        pick = None
        for v in alive:
            if deg[v] == size - 1:
                pick = (v, 1)
                break
        if pick is None:
            for v in alive:
                if deg[v] == 0:
                    pick = (v, 0)
                    break
        if pick is None:
            core = np.asarray(alive)
            sub = a[np.ix_(core, core)]
            quad, kind = find_forbidden_subgraph(sub)
            return RecognitionReport(False, witness=tuple(int(core[i]) for i in quad), witness_kind=kind)
        v, bit = pick
        removed.append(pick)
        alive.remove(v)
        deg -= a[v]
    order = alive + [v for v, _ in reversed(removed)]
    bits = [0] + [bit for _, bit in reversed(removed)]
    if n >= 2:
        bits[0] = bits[1]
    return RecognitionReport(True, peel_order=tuple(order), bcs=BinaryCreationSequence(tuple(bits)))


def _cells_for(g, cells) -> tuple[Cell, ...]:
    if cells is None:
        cells = g.cells
    out = []
    start = 0
    for c in cells:
        size, kind = c[0], CellKind(c[1])
        out.append(Cell(int(size), kind, start))
        start += int(size)
    if start != _adjacency(g).shape[0]:
        raise InvalidGraph("cell sizes must add up to the number of vertices")
    return tuple(out)


def nested_neighborhood_check(g, cells: Optional[Sequence] = None) -> bool:
    """Check the nested-neighbourhood structure of a creation-ordered cell partition.

    Every vertex of a clique cell must share one closed neighbourhood and
    every vertex of a coclique cell one open neighbourhood.  Closed
    neighbourhoods of successive clique cells strictly increase and open
    neighbourhoods of successive coclique cells strictly decrease.
    """
    a = _adjacency(g).astype(bool)
    cells = _cells_for(g, cells)
    n = a.shape[0]
    closed = a | np.eye(n, dtype=bool)
    clique_nbhds, coclique_nbhds = [], []
    for cell in cells:
        rows = closed if cell.kind is CellKind.CLIQUE else a
        block = rows[cell.start: cell.start + cell.size]
        if not (block == block[0]).all():
            return False
        target = clique_nbhds if cell.kind is CellKind.CLIQUE else coclique_nbhds
        target.append(block[0])

    def strictly_inside(small, big):
        return bool((~small | big).all()) and bool((big & ~small).any())

    if not all(strictly_inside(x, y) for x, y in zip(clique_nbhds, clique_nbhds[1:])):
        return False
    return all(strictly_inside(y, x) for x, y in zip(coclique_nbhds, coclique_nbhds[1:]))


def equitable_partition_check(g, partition: Optional[Sequence[Sequence[int]]] = None) -> bool:
    """Every vertex of part ``i`` has the same number of neighbours in part ``j``.

    ``partition`` lists 0-based vertex groups; it defaults to the cells of a
    :class:`ThresholdGraph`.
    """
    a = _adjacency(g)
    if partition is None:
        partition = [list(c.vertices) for c in g.cells]
    parts = [np.asarray(p, dtype=np.int64) for p in partition]
    covered = np.sort(np.concatenate(parts)) if parts else np.array([], dtype=np.int64)
    if not np.array_equal(covered, np.arange(a.shape[0])):
        raise InvalidGraph("partition must cover every vertex exactly once")
    for pi in parts:
        for pj in parts:
            counts = a[np.ix_(pi, pj)].sum(axis=1)
            if counts.size and (counts != counts[0]).any():
                return False
    return True


def block_form_check(g, cells: Optional[Sequence] = None) -> bool:
    """Check the creation-order block pattern of the adjacency matrix.

    Diagonal blocks must be ``J - I`` for clique cells and ``0`` for coclique
    cells; every block to the left of the diagonal in a cell's row band must
    be all ones for a clique cell and all zeros for a coclique cell.
    """
    a = _adjacency(g)
    if not np.array_equal(a, a.T):
        return False
    cells = _cells_for(g, cells)
    for cell in cells:
        lo, hi = cell.start, cell.start + cell.size
        value = cell.kind.bit
        diag = a[lo:hi, lo:hi]
        expected = value * (np.ones_like(diag) - np.eye(cell.size, dtype=diag.dtype))
        if not np.array_equal(diag, expected):
            return False
        if lo and not (a[lo:hi, :lo] == value).all():
            return False
    return True


def parse_adjacency_json(record) -> ArbitraryGraph:
    if isinstance(record, str):
        record = json.loads(record)
    if "edges" not in record or "n" not in record:
        raise InvalidGraph("adjacency JSON needs 'n' and 'edges'")
    return ArbitraryGraph.from_edges(int(record["n"]), record["edges"])


def parse_matrix_text(text: str) -> ArbitraryGraph:
    """Parse ``n`` lines of ``n`` characters ``0``/``1`` (whitespace between entries is allowed)."""
    rows = []
    for line in text.strip().splitlines():
        line = "".join(line.split())
        if not line:
            continue
        if any(ch not in "01" for ch in line):
            raise InvalidGraph(f"matrix rows may only contain 0 and 1, got {line!r}")
        rows.append([int(ch) for ch in line])
    if not rows:
        raise InvalidGraph("empty matrix")
    if any(len(r) != len(rows) for r in rows):
        raise InvalidGraph("matrix must be square")
    return ArbitraryGraph(np.array(rows, dtype=np.int64))


def parse_graph_text(text: str):
    """Parse a graph from JSON (threshold record or edge list) or matrix text.

    A JSON record with a creation sequence becomes a :class:`ThresholdGraph`;
    anything else becomes an :class:`ArbitraryGraph`.
    """
    from .graph_core import graph_from_json

    stripped = text.strip()
    if stripped.startswith("{"):
        record = json.loads(stripped)
        if "bcs" in record or "ccs" in record:
            return graph_from_json(record)
        return parse_adjacency_json(record)
    return parse_matrix_text(stripped)


def as_threshold_graph(g) -> ThresholdGraph:
    """Relabel a threshold input into creation order; raise if it is not threshold."""
    from .errors import NotThreshold

    if isinstance(g, ThresholdGraph):
        return g
    report = peel_recognize(g)
    if not report.is_threshold:
        raise NotThreshold(f"input contains an induced {report.witness_kind}")
    return build_graph(report.bcs)
