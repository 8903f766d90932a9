"""Ferrers-Young diagrams of degree sequences.

Rows of the diagram are the degrees in non-increasing order; columns are the
conjugate degree sequence.  The Durfee square is the largest square that fits
in the top-left corner.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

import numpy as np

from .errors import NotSorted, NotThresholdSequence, UnequalSums

__all__ = [
    "FerrersDiagram",
    "sorted_degrees",
    "conjugate",
    "durfee_size",
    "is_threshold_degrees",
    "fyd_to_adjacency",
    "majorizes",
    "render_fyd",
    "BOX",
    "DURFEE_BOX",
    "EMPTY_ROW",
]

BOX = "■"
DURFEE_BOX = "#"
EMPTY_ROW = "."


def _check_sorted(d: Sequence[int]) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if any(x < 0 for x in d):
        raise NotSorted(f"degrees must be nonnegative, got {d}")
    if any(a < b for a, b in zip(d, d[1:])):
        raise NotSorted(f"degree sequence must be non-increasing, got {d}")
    return d


def sorted_degrees(g) -> tuple[int, ...]:
    """Non-increasing degree sequence of a graph or a raw adjacency matrix."""
    a = np.asarray(getattr(g, "adjacency", g))
    return tuple(sorted((int(x) for x in a.sum(axis=1)), reverse=True))


def conjugate(d: Sequence[int]) -> tuple[int, ...]:
    """Column lengths ``|{j : d_j >= i}|`` for ``i = 1 .. max(d)``.

    >>> conjugate((3, 2, 2, 1))
    (4, 3, 1)
    """
    d = _check_sorted(d)
    top = d[0] if d else 0
    return tuple(sum(1 for x in d if x >= i) for i in range(1, top + 1))


def durfee_size(d: Sequence[int]) -> int:
    d = _check_sorted(d)
    s = 0
    for k, x in enumerate(d, start=1):
        if x >= k:
            s = k
        else:
            break
    return s


def is_threshold_degrees(d: Sequence[int]) -> bool:
    """Threshold test on degrees: conjugate exceeds the row by one across the Durfee square."""
    d = _check_sorted(d)
    s = durfee_size(d)
    dstar = conjugate(d)
    return all(dstar[i] == d[i] + 1 for i in range(s))


def fyd_to_adjacency(d: Sequence[int]) -> np.ndarray:
    """Adjacency matrix read off the Ferrers diagram of a threshold degree sequence.

    Row ``i`` keeps its ``d_i`` boxes filled with ones but has a zero box
    inserted at column ``i``, pushing later boxes one place to the right; the
    row is then padded with zeros to length ``n``.  Vertices come out in
    non-increasing degree order.

    Raises
    ------
    NotThresholdSequence
        If ``d`` fails the Durfee-square condition.
    """
    d = _check_sorted(d)
    if not is_threshold_degrees(d):
        raise NotThresholdSequence(f"{d} is not the degree sequence of a threshold graph")
    n = len(d)
    a = np.zeros((n, n), dtype=np.int64)
    for i, length in enumerate(d):
        row = [1] * length
        if i <= len(row):
            row.insert(i, 0)
        a[i, : min(len(row), n)] = row[:n]
    if not np.array_equal(a, a.T) or a.diagonal().any():
        raise NotThresholdSequence(f"{d} does not produce a symmetric diagram matrix")
    return a


def majorizes(d1: Sequence[int], d2: Sequence[int]) -> bool:
    """True iff every prefix sum of ``d1`` is at least the matching prefix sum of ``d2``.

    Both sequences are compared after sorting non-increasingly and padding the
    shorter one with zeros.
    """
    a = sorted((int(x) for x in d1), reverse=True)
    b = sorted((int(x) for x in d2), reverse=True)
    if sum(a) != sum(b):
        raise UnequalSums(f"sums differ: {sum(a)} vs {sum(b)}")
    width = max(len(a), len(b))
    a += [0] * (width - len(a))
    b += [0] * (width - len(b))
    return all(x >= y for x, y in zip(accumulate(a), accumulate(b)))


def render_fyd(d: Sequence[int], mark_durfee: bool = True) -> str:
    """Text rendering of the diagram, one line per vertex.

    Boxes inside the Durfee square are drawn as ``#`` when ``mark_durfee`` is
    set, so every line still has exactly ``d_i`` glyphs.  A vertex of degree
    zero is shown as ``.``.
    """
    d = _check_sorted(d)
    s = durfee_size(d) if mark_durfee else 0
    lines = []
    for i, length in enumerate(d):
        if length == 0:
            lines.append(EMPTY_ROW)
            continue
        inside = s if i < s else 0
        lines.append(DURFEE_BOX * inside + BOX * (length - inside))
    return "\n".join(lines)


@dataclass(frozen=True)
class FerrersDiagram:
    rows: tuple[int, ...]
    conjugate: tuple[int, ...]
    durfee: int

    @classmethod
    def from_degrees(cls, d: Sequence[int]) -> "FerrersDiagram":
        d = _check_sorted(d)
        return cls(d, conjugate(d), durfee_size(d))

    @property
    def is_threshold(self) -> bool:
        return is_threshold_degrees(self.rows)

    def render(self, mark_durfee: bool = True) -> str:
        return render_fyd(self.rows, mark_durfee)

    def to_json(self) -> dict:
        return {"degrees": list(self.rows), "conjugate": list(self.conjugate), "durfee": self.durfee}
