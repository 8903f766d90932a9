"""Laplacian spectra of threshold graphs and the shared integer eigenbasis.

Every threshold graph on ``n`` vertices, labelled in creation order, has the
columns of :func:`standard_eigenbasis` as Laplacian eigenvectors.  Column
``x_k`` (``k >= 1``) has ``-1`` in its first ``k`` entries, ``k`` in entry
``k + 1`` and zeros below; its eigenvalue is the degree of vertex ``k + 1``
plus one if that vertex was added as a dominating vertex.

The spectrum is computed three independent ways (conjugate degrees, the cell
rule, and integer roots of the exact characteristic polynomial) so they can
be checked against each other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, NonIntegralSpectrum, NotThreshold
from .ferrers import conjugate, is_threshold_degrees, sorted_degrees
from .graph_core import CellKind, ThresholdGraph, laplacian

__all__ = [
    "StandardEigenbasis",
    "Spectrum",
    "ExactPolynomial",
    "EigenpairCheck",
    "EigenbasisReport",
    "GroneMerrisReport",
    "standard_eigenbasis",
    "verify_eigenpair",
    "eigenvalue_of",
    "predicted_eigenvalue",
    "predicted_eigenvalues",
    "verify_shared_eigenbasis",
    "spectrum_from_conjugate",
    "spectrum_from_cells",
    "spectrum_from_charpoly",
    "antiregular_spectrum",
    "char_poly",
    "integer_roots",
    "commute_check",
    "jacobi_eigenvalues",
    "grone_merris_check",
    "grone_merris_batch",
]


@dataclass(frozen=True, eq=False)
class StandardEigenbasis:
    """The ``n x n`` integer matrix whose columns are ``x_0, ..., x_{n-1}``."""

    matrix: np.ndarray

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def column(self, k: int) -> np.ndarray:
        return self.matrix[:, k]

    def is_orthogonal(self) -> bool:
        gram = self.matrix.T.astype(object) @ self.matrix.astype(object)
        return not np.any(gram - np.diag(np.diag(gram)))

    def columns_coprime(self) -> bool:
        return all(gcd(*(int(v) for v in self.matrix[:, k])) == 1 for k in range(self.n))


def standard_eigenbasis(n: int) -> StandardEigenbasis:
    """Columns ``x_0 = (1, ..., 1)`` and ``x_k = (-1, ..., -1, k, 0, ..., 0)``.

    >>> standard_eigenbasis(3).matrix.tolist()
    [[1, -1, -1], [1, 1, -1], [1, 0, 2]]
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    x = np.zeros((n, n), dtype=np.int64)
    x[:, 0] = 1
    for k in range(1, n):
        x[:k, k] = -1
        x[k, k] = k
    x.setflags(write=False)
    return StandardEigenbasis(x)


def _square(m) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def verify_eigenpair(L, x, mu: int) -> bool:
    """Exact test of ``L @ x == mu * x``."""
    L = _square(L)
    x = np.asarray(x)
    if x.shape != (L.shape[0],):
        raise DimensionMismatch(f"vector of length {x.shape} does not fit a {L.shape} matrix")
    return bool(np.array_equal(L.astype(object) @ x.astype(object), x.astype(object) * int(mu)))


def eigenvalue_of(L, x) -> Optional[Fraction]:
    """Eigenvalue of ``x`` under ``L`` if ``x`` is an eigenvector, else None."""
    L = _square(L).astype(object)
    x = np.asarray(x, dtype=object)
    y = L @ x
    pivot = next((i for i, v in enumerate(x) if v != 0), None)
    if pivot is None:
        raise ValueError("the zero vector is not an eigenvector")
    mu = Fraction(int(y[pivot]), int(x[pivot]))
    if all(Fraction(int(yi)) == mu * int(xi) for yi, xi in zip(y, x)):
        return mu
    return None


def predicted_eigenvalue(g, k: int) -> int:
    """Eigenvalue paired with ``x_k``: degree of vertex ``k + 1`` plus its adjacency to vertex 1.

    For a creation-ordered threshold graph the second term is 1 exactly when
    vertex ``k + 1`` was added as a dominating vertex.  ``k`` runs from 1 to
    ``n - 1``; the formula only reads the adjacency matrix, so it can be
    evaluated on any labelled graph.
    """
    a = np.asarray(g.adjacency)
    n = a.shape[0]
    if not 1 <= k <= n - 1:
        raise IndexOutOfRange(f"k must be in 1..{n - 1}, got {k}")
    return int(a[k].sum()) + int(a[0, k])


def predicted_eigenvalues(g) -> list[int]:
    """``[mu_0, ..., mu_{n-1}]`` with ``mu_0 = 0``."""
    a = np.asarray(g.adjacency)
    n = a.shape[0]
    return [0] + [predicted_eigenvalue(g, k) for k in range(1, n)]


@dataclass(frozen=True)
class EigenpairCheck:
    index: int
    eigenvalue: int
    passed: bool


@dataclass(frozen=True)
class EigenbasisReport:
    n: int
    checks: tuple[EigenpairCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def eigenvalues(self) -> list[int]:
        return [c.eigenvalue for c in self.checks]

    @property
    def first_failure(self) -> Optional[int]:
        return next((c.index for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "all_passed": self.all_passed,
            "first_failure": self.first_failure,
            "eigenvalues": self.eigenvalues,
            "checks": [{"index": c.index, "eigenvalue": c.eigenvalue, "passed": c.passed} for c in self.checks],
        }


def verify_shared_eigenbasis(g) -> EigenbasisReport:
    """Check every standard basis column against its predicted eigenvalue, exactly."""
    L = laplacian(g).astype(object)
    n = L.shape[0]
    x = standard_eigenbasis(n).matrix.astype(object)
    mus = predicted_eigenvalues(g)
    lx = L @ x
    checks = tuple(
        EigenpairCheck(k, mus[k], bool(np.array_equal(lx[:, k], x[:, k] * mus[k]))) for k in range(n)
    )
    return EigenbasisReport(n, checks)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of integer eigenvalues stored as sorted ``(value, multiplicity)`` pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(v), int(m)) for v, m in self.pairs if m))
        if any(m < 0 for _, m in pairs):
            raise ValueError("multiplicities must be positive")
        if len({v for v, _ in pairs}) != len(pairs):
            raise ValueError("eigenvalues must be distinct; merge multiplicities first")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Spectrum":
        return cls(tuple(Counter(int(v) for v in values).items()))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "Spectrum":
        return cls(tuple(mapping.items()))

    def values(self) -> list[int]:
        """Eigenvalues in ascending order, repeated by multiplicity."""
        return [v for v, m in self.pairs for _ in range(m)]

    def multiplicity(self, value: int) -> int:
        return dict(self.pairs).get(value, 0)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def trace(self) -> int:
        return sum(v * m for v, m in self.pairs)

    def to_json(self) -> dict:
        return {"eigenvalues": [{"value": v, "multiplicity": m} for v, m in self.pairs]}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{v}^{m}" if m > 1 else str(v) for v, m in self.pairs) + "}"


def spectrum_from_conjugate(g) -> Spectrum:
    """``{0}`` together with the conjugate degree sequence, padded with zeros to ``n`` values.

    Raises
    ------
    NotThreshold
        If the degree sequence fails the Durfee-square condition.
    """
    d = sorted_degrees(g)
    if not is_threshold_degrees(d):
        raise NotThreshold(f"degree sequence {d} is not a threshold sequence")
    dstar = conjugate(d)
    values = list(dstar) + [0] * (len(d) - len(dstar))
    return Spectrum.from_values(values)


def spectrum_from_cells(g: ThresholdGraph) -> Spectrum:
    """Spectrum from the cell partition.

    Each cell contributes its common degree (coclique) or degree plus one
    (clique), once per vertex, except that the first cell contributes one
    fewer; the missing slot is the eigenvalue 0 of the all-ones vector.
    """
    counts: Counter = Counter({0: 1})
    for i, cell in enumerate(g.cells):
        degree = g.degrees[cell.start]
        value = degree + 1 if cell.kind is CellKind.CLIQUE else degree
        counts[value] += cell.size - (1 if i == 0 else 0)
    return Spectrum.from_mapping(counts)


def antiregular_spectrum(n: int) -> Spectrum:
    """``{0, 1, ..., n}`` without ``ceil(n / 2)``, each value simple."""
    if n < 2:
        raise ValueError("the antiregular graph needs n >= 2")
    skip = -(-n // 2)
    return Spectrum.from_values(v for v in range(n + 1) if v != skip)


@dataclass(frozen=True)
class ExactPolynomial:
    """Integer polynomial with coefficients listed from the constant term upward."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            var = "" if power == 0 else ("λ" if power == 1 else f"λ^{power}")
            body = var if mag == 1 and var else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


def char_poly(L) -> ExactPolynomial:
    """Exact ``det(λI - L)`` by the Faddeev-LeVerrier recurrence over Python integers.

    ``M_k = L M_{k-1} + c_{n-k+1} I`` and ``c_{n-k} = -tr(L M_k) / k``; the
    divisions are exact for integer matrices.
    """
    a = [[int(v) for v in row] for row in _square(L).tolist()]
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[0] * n for _ in range(n)]
    cols = None
    for k in range(1, n + 1):
        # m <- a @ m + c_{n-k+1} I
        cols = list(zip(*m))
        m = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        am_trace = sum(sum(a[i][j] * m[j][i] for j in range(n)) for i in range(n))
        q, r = divmod(-am_trace, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        coeffs[n - k] = q
    return ExactPolynomial(tuple(coeffs))


def _deflate(desc: list[int], root: int) -> Optional[list[int]]:
    """Divide a descending-coefficient polynomial by ``(x - root)``; None if not a root."""
    out = [desc[0]]
    for c in desc[1:]:
        out.append(c + out[-1] * root)
    if out[-1] != 0:
        return None
    return out[:-1]


def _divisors(value: int) -> list[int]:
    value = abs(value)
    small, large = [], []
    d = 1
    while d * d <= value:
        if value % d == 0:
            small.append(d)
            if d * d != value:
                large.append(value // d)
        d += 1
    return small + large[::-1]


def integer_roots(p: ExactPolynomial, *, nonnegative: bool = False, bound: Optional[int] = None) -> Spectrum:
    """Factor a monic integer polynomial completely into integer roots.

    Candidate roots are divisors of the lowest nonzero coefficient, tried in
    increasing absolute value.  With ``bound`` only candidates of absolute
    value at most ``bound`` are tried, and with ``nonnegative`` only positive
    ones (the root 0 is always handled by stripping low-order zeros).

    Raises
    ------
    NonIntegralSpectrum
        If a factor of positive degree with no admissible integer root remains.
    """
    if not p.is_monic:
        raise ValueError("integer_roots expects a monic polynomial")
    coeffs = list(p.coeffs)
    roots: Counter = Counter()
    zeros = 0
    while zeros < len(coeffs) - 1 and coeffs[zeros] == 0:
        zeros += 1
    if zeros:
        roots[0] = zeros
    desc = coeffs[zeros:][::-1]
    if len(desc) > 1:
        if bound is not None:
            candidates = list(range(1, bound + 1))
            candidates = [c for c in candidates if desc[-1] % c == 0]
        else:
            candidates = _divisors(desc[-1])
        for c in candidates:
            for root in (c,) if nonnegative else (c, -c):
                while len(desc) > 1:
                    reduced = _deflate(desc, root)
                    if reduced is None:
                        break
                    desc = reduced
                    roots[root] += 1
            if len(desc) == 1:
                break
    if len(desc) > 1:
        raise NonIntegralSpectrum(desc[::-1], roots)
    return Spectrum.from_mapping(roots)


def spectrum_from_charpoly(g) -> Spectrum:
    """Laplacian spectrum as the integer roots of the exact characteristic polynomial."""
    L = laplacian(g)
    return integer_roots(char_poly(L), nonnegative=True, bound=L.shape[0])


def commute_check(L1, L2) -> bool:
    a, b = _square(L1).astype(object), _square(L2).astype(object)
    if a.shape != b.shape:
        raise DimensionMismatch(f"orders differ: {a.shape[0]} vs {b.shape[0]}")
    return bool(np.array_equal(a @ b, b @ a))


def jacobi_eigenvalues(a, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of real symmetric matrices by cyclic Jacobi rotations.

    Accepts a single ``(n, n)`` matrix or a stack ``(..., n, n)``; every
    matrix in the stack is rotated in lockstep, each with its own angle.
    Sweeps stop once the off-diagonal Frobenius norm of every matrix is below
    ``tol``.  Returns eigenvalues in non-increasing order along the last axis.
    """
    a = np.array(a, dtype=np.float64)
    single = a.ndim == 2
    if single:
        a = a[None]
    n = a.shape[-1]
    a = a.reshape(-1, n, n)
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = np.sqrt((a[:, off_mask] ** 2).sum(axis=1))
        if np.all(off < tol):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                active = np.abs(apq) > 1e-300
                if not active.any():
                    continue
                app, aqq = a[:, p, p], a[:, q, q]
                theta = np.where(active, (aqq - app) / (2.0 * np.where(active, apq, 1.0)), 0.0)
                t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
                t = np.where(theta == 0.0, 1.0, t)
                t = np.where(active, t, 0.0)
                c = 1.0 / np.sqrt(t ** 2 + 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) Givens rotation
                ap = a[:, :, p].copy()
                aq = a[:, :, q].copy()
                a[:, :, p] = c[:, None] * ap - s[:, None] * aq
                a[:, :, q] = s[:, None] * ap + c[:, None] * aq
                rp = a[:, p, :].copy()
                rq = a[:, q, :].copy()
                a[:, p, :] = c[:, None] * rp - s[:, None] * rq
                a[:, q, :] = s[:, None] * rp + c[:, None] * rq
    eig = -np.sort(-np.diagonal(a, axis1=1, axis2=2), axis=1)
    return eig[0] if single else eig


@dataclass(frozen=True)
class GroneMerrisReport:
    """Laplacian eigenvalues against the conjugate degree sequence.

    ``holds`` is the Grone-Merris majorization bound: every prefix sum of the
    non-increasing eigenvalues is at most the matching prefix sum of the
    conjugate sequence (padded with zeros to ``n``).  ``pointwise`` records
    the stronger entry-by-entry comparison, which fails for some graphs
    (``P4`` is the smallest).  ``equality`` is decided exactly and holds iff
    the eigenvalues are the conjugate sequence.
    """

    eigenvalues: tuple
    conjugate: tuple[int, ...]
    exact: bool
    holds: bool
    pointwise: bool
    equality: bool

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        eig = [v if self.exact else float(f"{v:.12g}") for v in self.eigenvalues]
        return {
            "eigenvalues": eig,
            "conjugate": list(self.conjugate),
            "exact": self.exact,
            "bound_holds": self.holds,
            "pointwise": self.pointwise,
            "equality": self.equality,
        }


def grone_merris_check(g, tol: float = 1e-9) -> GroneMerrisReport:
    L = laplacian(g)
    n = L.shape[0]
    d = sorted_degrees(g)
    dstar = list(conjugate(d))[:n]
    dstar += [0] * (n - len(dstar))
    try:
        spectrum = integer_roots(char_poly(L), nonnegative=True, bound=n)
        eig = tuple(sorted(spectrum.values(), reverse=True))
        exact, slack = True, 0
    except NonIntegralSpectrum:
        eig = tuple(float(v) for v in jacobi_eigenvalues(L))
        exact, slack = False, tol
    holds = all(x <= y + slack for x, y in zip(accumulate(eig), accumulate(dstar)))
    pointwise = all(x <= y + slack for x, y in zip(eig, dstar))
    equality = exact and list(eig) == dstar
    return GroneMerrisReport(eig, tuple(dstar), exact, holds, pointwise, equality)


def _power_sums_match(laps: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Exact multiset comparison of each Laplacian spectrum with an integer vector.

    The first ``n`` power sums determine a multiset of ``n`` numbers, and
    ``tr(L^k)`` is the ``k``-th power sum of the eigenvalues, so comparing
    traces of matrix powers decides equality without solving for roots.
    Object arithmetic keeps it exact at any size.
    """
    laps = laps.astype(object)
    targets = targets.astype(object)
    n = laps.shape[-1]
    ok = np.ones(laps.shape[0], dtype=bool)
    power = np.broadcast_to(np.eye(n, dtype=np.int64).astype(object), laps.shape)
    for k in range(1, n + 1):
        power = np.matmul(power, laps)
        traces = np.trace(power, axis1=1, axis2=2)
        ok &= traces == (targets ** k).sum(axis=1)
    return ok


def grone_merris_batch(adjacencies, tol: float = 1e-9) -> dict:
    """Grone-Merris comparison for a stack of adjacency matrices of equal order.

    Eigenvalues come from the lockstep Jacobi solver, so ``holds`` and
    ``pointwise`` are float comparisons at tolerance ``tol``.  ``equality`` is
    exact (power sums of integer matrices).  Returns boolean arrays keyed
    ``holds``, ``pointwise`` and ``equality`` plus the float ``eigenvalues``.
    """
    a = np.asarray(adjacencies, dtype=np.int64)
    count, n = a.shape[0], a.shape[-1]
    deg = a.sum(axis=2)
    laps = -a.copy()
    idx = np.arange(n)
    laps[:, idx, idx] = deg
    # conjugate of the degree sequence, padded to n: #{j : d_j >= i} for i = 1..n
    dstar = (deg[:, None, :] >= np.arange(1, n + 1)[None, :, None]).sum(axis=2)
    if count == 0:
        empty = np.zeros(0, dtype=bool)
        return {"holds": empty, "pointwise": empty, "equality": empty, "eigenvalues": np.zeros((0, n))}
    eig = jacobi_eigenvalues(laps) if n > 1 else np.zeros((count, 1))
    holds = (np.cumsum(eig, axis=1) <= np.cumsum(dstar, axis=1) + tol).all(axis=1)
    pointwise = (eig <= dstar + tol).all(axis=1)
    equality = _power_sums_match(laps, dstar)
    return {"holds": holds, "pointwise": pointwise, "equality": equality, "eigenvalues": eig}
