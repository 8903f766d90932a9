"""Creation sequences and the threshold graphs they build.

Vertices are labelled in creation order: vertex ``k`` (1-based) is the one
added at step ``k`` of the binary creation sequence.  Internally arrays are
0-based, so vertex ``k`` lives at row ``k - 1``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import EmptySequence, InvalidGraph, InvalidRuns, MismatchedPrefix

__all__ = [
    "CellKind",
    "Cell",
    "BinaryCreationSequence",
    "CompactCreationSequence",
    "ThresholdGraph",
    "WeightRealization",
    "validate_bcs",
    "bcs_to_ccs",
    "ccs_to_bcs",
    "build_graph",
    "laplacian",
    "complement",
    "weight_realization",
    "verify_weights",
    "antiregular_graph",
    "graph_to_json",
    "graph_from_json",
]


class CellKind(str, enum.Enum):
    CLIQUE = "clique"
    COCLIQUE = "coclique"

    @classmethod
    def from_bit(cls, bit: int) -> "CellKind":
        return cls.CLIQUE if bit else cls.COCLIQUE

    @property
    def bit(self) -> int:
        return 1 if self is CellKind.CLIQUE else 0


class Cell(NamedTuple):
    size: int
    kind: CellKind
    start: int  # 0-based index of the first vertex in the cell

    @property
    def vertices(self) -> range:
        return range(self.start, self.start + self.size)


@dataclass(frozen=True)
class BinaryCreationSequence:
    """The 0/1 construction string ``b_1 ... b_n`` with ``b_1 == b_2``.

    A 1 adds a dominating vertex, a 0 adds an isolated vertex.  Build one with
    :func:`validate_bcs` rather than calling the constructor directly if the
    input is untrusted; the constructor validates as well.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise EmptySequence("a creation sequence needs at least one vertex")
        if any(b not in (0, 1) for b in bits):
            raise InvalidRuns(f"creation sequence entries must be 0 or 1, got {bits!r}")
        if len(bits) >= 2 and bits[0] != bits[1]:
            raise MismatchedPrefix("b_1 = b_2 violated: the first two entries must agree")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> "BinaryCreationSequence":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise InvalidRuns(f"creation sequence must contain only 0 and 1, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def is_connected(self) -> bool:
        return self.n == 1 or self.bits[-1] == 1


@dataclass(frozen=True)
class CompactCreationSequence:
    """Run lengths ``a_1, ..., a_r`` of a BCS together with the kind of the first run."""

    runs: tuple[int, ...]
    first_run_kind: CellKind

    def __post_init__(self):
        runs = tuple(int(a) for a in self.runs)
        if not runs:
            raise EmptySequence("a compact creation sequence needs at least one run")
        if any(a < 1 for a in runs):
            raise InvalidRuns("a_i ≥ 1 violated: every run must be positive")
        if runs[0] < 2 and sum(runs) > 1:
            raise InvalidRuns("a_1 ≥ 2 violated: the first run must contain at least two vertices")
        object.__setattr__(self, "runs", runs)
        object.__setattr__(self, "first_run_kind", CellKind(self.first_run_kind))

    @classmethod
    def connected(cls, runs: Sequence[int]) -> "CompactCreationSequence":
        """Interpret bare runs under the connected convention (last run is a clique)."""
        kind = CellKind.CLIQUE if len(runs) % 2 == 1 else CellKind.COCLIQUE
        return cls(tuple(runs), kind)

    @property
    def n(self) -> int:
        return sum(self.runs)

    @property
    def r(self) -> int:
        return len(self.runs)

    def kinds(self) -> list[CellKind]:
        first = self.first_run_kind.bit
        return [CellKind.from_bit(first ^ (i % 2)) for i in range(self.r)]


def validate_bcs(bits: Iterable[int] | str) -> BinaryCreationSequence:
    """Validate a 0/1 sequence as a binary creation sequence.

    Raises
    ------
    EmptySequence
        For a zero-length input.
    MismatchedPrefix
        If the first two entries differ.
    """
    if isinstance(bits, BinaryCreationSequence):
        return bits
    if isinstance(bits, str):
        return BinaryCreationSequence.from_string(bits)
    return BinaryCreationSequence(tuple(bits))


def bcs_to_ccs(bcs: BinaryCreationSequence | str) -> CompactCreationSequence:
    bcs = validate_bcs(bcs)
    runs = tuple(len(list(group)) for _, group in itertools.groupby(bcs.bits))
    return CompactCreationSequence(runs, CellKind.from_bit(bcs.bits[0]))


def ccs_to_bcs(ccs: CompactCreationSequence | Sequence[int]) -> BinaryCreationSequence:
    """Expand run lengths back to a binary creation sequence.

    A bare sequence of integers is read under the connected convention: the
    last run consists of dominating vertices, so the first run is a clique
    exactly when the number of runs is odd.
    """
    if not isinstance(ccs, CompactCreationSequence):
        ccs = CompactCreationSequence.connected(tuple(ccs))
    bits: list[int] = []
    for size, kind in zip(ccs.runs, ccs.kinds()):
        bits.extend([kind.bit] * size)
    return BinaryCreationSequence(tuple(bits))


def _cells_of(bcs: BinaryCreationSequence) -> tuple[Cell, ...]:
    cells = []
    start = 0
    for bit, group in itertools.groupby(bcs.bits):
        size = len(list(group))
        cells.append(Cell(size, CellKind.from_bit(bit), start))
        start += size
    return tuple(cells)


def _creation_adjacency(bits: Sequence[int]) -> np.ndarray:
    n = len(bits)
    b = np.asarray(bits, dtype=np.int64)
    # a_ij for i < j is the bit of the later vertex j
    upper = np.triu(np.broadcast_to(b, (n, n)), k=1)
    return upper + upper.T


@dataclass(frozen=True, eq=False)
class ThresholdGraph:
    """A threshold graph in creation-order labelling.

    Attributes
    ----------
    bcs : BinaryCreationSequence
    adjacency : ndarray of int64, shape (n, n), read-only
    cells : tuple of Cell
        Maximal runs of the BCS in creation order.
    degrees : tuple of int
        Degree of each vertex in creation order (not sorted).
    edge_count : int
    """

    bcs: BinaryCreationSequence
    adjacency: np.ndarray = field(repr=False)
    cells: tuple[Cell, ...]
    degrees: tuple[int, ...]
    edge_count: int

    @property
    def n(self) -> int:
        return self.bcs.n

    @property
    def ccs(self) -> CompactCreationSequence:
        return bcs_to_ccs(self.bcs)

    @property
    def is_connected(self) -> bool:
        return self.bcs.is_connected

    def cell_of(self, vertex: int) -> int:
        """Index of the cell containing 0-based ``vertex``."""
        for i, cell in enumerate(self.cells):
            if vertex < cell.start + cell.size:
                return i
        raise IndexError(vertex)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as 1-based ``(i, j)`` pairs with ``i < j``, sorted."""
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)]

    def __eq__(self, other):
        if not isinstance(other, ThresholdGraph):
            return NotImplemented
        return self.bcs == other.bcs

    def __hash__(self):
        return hash(self.bcs)

    def __repr__(self):
        return f"ThresholdGraph(bcs='{self.bcs}', n={self.n}, m={self.edge_count})"


def build_graph(bcs: BinaryCreationSequence | str | Sequence[int]) -> ThresholdGraph:
    """Build the threshold graph of a creation sequence.

    Vertex ``k >= 2`` is joined to every earlier vertex iff ``b_k = 1``; the
    first vertex only exists as the seed, so ``b_1`` just mirrors ``b_2``.

    >>> g = build_graph("001")
    >>> g.edges(), g.degrees
    ([(1, 3), (2, 3)], (1, 1, 2))
    """
    bcs = validate_bcs(bcs)
    adjacency = _creation_adjacency(bcs.bits)
    adjacency.setflags(write=False)
    degrees = tuple(int(d) for d in adjacency.sum(axis=1))
    edge_count = sum(k for k, bit in enumerate(bcs.bits) if bit and k >= 1)
    return ThresholdGraph(bcs, adjacency, _cells_of(bcs), degrees, edge_count)


def antiregular_graph(n: int) -> ThresholdGraph:
    """Connected antiregular graph ``C(2, 1, ..., 1)`` on ``n >= 2`` vertices."""
    if n < 2:
        raise InvalidRuns("the antiregular graph needs at least two vertices")
    return build_graph(ccs_to_bcs([2] + [1] * (n - 2)))


def laplacian(g) -> np.ndarray:
    """Integer Laplacian ``D - A`` of any object exposing ``adjacency``."""
    a = np.asarray(getattr(g, "adjacency", g), dtype=np.int64)
    return np.diag(a.sum(axis=1)) - a


def complement(g: ThresholdGraph) -> ThresholdGraph:
    """Complement graph; flipping every creation bit swaps dominating and isolated steps."""
    flipped = BinaryCreationSequence(tuple(1 - b for b in g.bcs.bits))
    return build_graph(flipped)


@dataclass(frozen=True)
class WeightRealization:
    """Integer vertex weights and a threshold: ``w_l + w_k > xi`` iff ``{l, k}`` is an edge."""

    weights: tuple[int, ...]
    threshold: int = 0


def weight_realization(g: ThresholdGraph) -> WeightRealization:
    """Weights ``+2**k`` for dominating steps and ``-2**k`` for isolated steps, threshold 0.

    For ``l < k`` the magnitude of ``w_k`` exceeds that of ``w_l``, so the sign
    of the pair sum is the sign of the later vertex.  Python integers keep
    this exact for any ``n``.
    """
    weights = tuple((1 if bit else -1) * 2 ** k for k, bit in enumerate(g.bcs.bits, start=1))
    return WeightRealization(weights, 0)


def verify_weights(g, wr: WeightRealization) -> bool:
    a = np.asarray(g.adjacency)
    n = a.shape[0]
    if len(wr.weights) != n:
        raise InvalidGraph(f"expected {n} weights, got {len(wr.weights)}")
    w = wr.weights
    for i, j in itertools.combinations(range(n), 2):
        if (w[i] + w[j] > wr.threshold) != bool(a[i, j]):
            return False
    return True


def graph_to_json(g: ThresholdGraph) -> dict:
    ccs = g.ccs
    return {
        "n": g.n,
        "bcs": str(g.bcs),
        "ccs": list(ccs.runs),
        "first_run": ccs.first_run_kind.value,
        "edges": [list(e) for e in g.edges()],
    }


def graph_from_json(record: dict) -> ThresholdGraph:
    """Rebuild a graph from its JSON record; the edge list, if present, must match the BCS."""
    if "bcs" in record:
        g = build_graph(str(record["bcs"]))
    elif "ccs" in record:
        kind = record.get("first_run")
        ccs = (CompactCreationSequence(tuple(record["ccs"]), CellKind(kind)) if kind
               else CompactCreationSequence.connected(tuple(record["ccs"])))
        g = build_graph(ccs_to_bcs(ccs))
    else:
        raise InvalidGraph("graph record needs a 'bcs' or 'ccs' field")
    if "n" in record and int(record["n"]) != g.n:
        raise InvalidGraph(f"record says n={record['n']} but the sequence has {g.n} vertices")
    if "edges" in record:
        edges = sorted(tuple(sorted(map(int, e))) for e in record["edges"])
        if edges != g.edges():
            raise InvalidGraph("edge list does not match the creation sequence")
    return g
