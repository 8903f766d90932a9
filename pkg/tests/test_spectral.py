import itertools
import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from threshold_graphs import (
    ArbitraryGraph,
    DimensionMismatch,
    ExactPolynomial,
    IndexOutOfRange,
    NonIntegralSpectrum,
    NotThreshold,
    Spectrum,
    antiregular_graph,
    antiregular_spectrum,
    build_graph,
    ccs_to_bcs,
    char_poly,
    commute_check,
    grone_merris_check,
    integer_roots,
    jacobi_eigenvalues,
    laplacian,
    predicted_eigenvalue,
    spectrum_from_cells,
    spectrum_from_charpoly,
    spectrum_from_conjugate,
    standard_eigenbasis,
    verify_eigenpair,
    verify_shared_eigenbasis,
)
from threshold_graphs.spectral import eigenvalue_of, grone_merris_batch
from threshold_graphs.enumeration import adjacency_stack, enumerate_bcs

from oracles import oracle_laplacian_eigenvalues

P4 = ArbitraryGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
C4 = ArbitraryGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
STAR = build_graph("001")
K3 = build_graph("111")


@st.composite
def threshold_graphs(draw, max_n=14):
    n = draw(st.integers(1, max_n))
    bits = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    if n >= 2:
        bits[0] = bits[1]
    return build_graph(bits)


def test_eigenbasis_n3():
    x = standard_eigenbasis(3)
    assert [x.column(k).tolist() for k in range(3)] == [[1, 1, 1], [-1, 1, 0], [-1, -1, 2]]


@pytest.mark.parametrize("n", [1, 2, 5, 17, 64])
def test_eigenbasis_orthogonal_and_coprime(n):
    x = standard_eigenbasis(n)
    assert x.is_orthogonal() and x.columns_coprime()
    assert np.linalg.matrix_rank(x.matrix.astype(float)) == n


def test_eigenbasis_is_read_only():
    with pytest.raises(ValueError):
        standard_eigenbasis(3).matrix[0, 0] = 5


@pytest.mark.parametrize("k, mu", [(1, 1), (2, 3)])
def test_star_eigenpairs(k, mu):
    L = laplacian(STAR)
    x = standard_eigenbasis(3).column(k)
    assert verify_eigenpair(L, x, mu)
    assert not verify_eigenpair(L, x, mu + 1)


def test_all_ones_is_always_an_eigenvector():
    L = laplacian(P4)
    assert verify_eigenpair(L, np.ones(4, dtype=int), 0)


def test_verify_eigenpair_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        verify_eigenpair(laplacian(STAR), [1, 1], 0)


def test_eigenvalue_of():
    L = laplacian(STAR)
    assert eigenvalue_of(L, [-1, -1, 2]) == 3
    assert eigenvalue_of(L, [1, 0, 0]) is None


@pytest.mark.parametrize("k, mu", [(1, 1), (2, 3)])
def test_predicted_star(k, mu):
    assert predicted_eigenvalue(STAR, k) == mu


@pytest.mark.parametrize("n", [2, 4, 7])
def test_predicted_complete(n):
    g = build_graph("1" * n)
    assert all(predicted_eigenvalue(g, k) == n for k in range(1, n))


@pytest.mark.parametrize("k", [0, 3])
def test_predicted_out_of_range(k):
    with pytest.raises(IndexOutOfRange):
        predicted_eigenvalue(STAR, k)


def test_paw_eigenbasis():
    report = verify_shared_eigenbasis(antiregular_graph(4))
    assert report.all_passed and sorted(report.eigenvalues) == [0, 1, 3, 4]


def test_p4_fails_under_every_labelling():
    x = standard_eigenbasis(4)
    for perm in itertools.permutations(range(4)):
        h = P4.relabel(perm)
        assert not verify_shared_eigenbasis(h).all_passed
        # and no eigenvalue at all rescues the basis
        assert any(eigenvalue_of(laplacian(h), x.column(k)) is None for k in range(1, 4))


@settings(max_examples=80, deadline=None)
@given(threshold_graphs(max_n=30))
def test_eigenbasis_holds_for_random_threshold_graphs(g):
    report = verify_shared_eigenbasis(g)
    assert report.all_passed and report.first_failure is None


def test_eigenbasis_report_json():
    out = verify_shared_eigenbasis(STAR).to_json()
    assert out["all_passed"] and out["eigenvalues"] == [0, 1, 3]


@pytest.mark.parametrize("g, values", [
    (STAR, [0, 1, 3]),
    (K3, [0, 3, 3]),
    (antiregular_graph(4), [0, 1, 3, 4]),
    (build_graph("000"), [0, 0, 0]),
])
def test_three_routes_examples(g, values):
    for route in (spectrum_from_conjugate, spectrum_from_cells, spectrum_from_charpoly):
        assert route(g).values() == values


@pytest.mark.parametrize("n", [1, 3, 6])
def test_cells_complete_graph(n):
    assert spectrum_from_cells(build_graph("1" * n)) == Spectrum.from_mapping({0: 1, n: n - 1} if n > 1 else {0: 1})


def test_figure_graph_spectra_agree():
    g = build_graph(ccs_to_bcs([2, 3, 4, 5, 6, 7]))
    s = spectrum_from_conjugate(g)
    assert s == spectrum_from_cells(g) == spectrum_from_charpoly(g)
    assert s.trace == 2 * 225 and s.total == 27


@pytest.mark.parametrize("n", range(2, 9))
def test_spectra_match_sympy(n):
    for bcs in enumerate_bcs(n):
        g = build_graph(bcs)
        oracle = oracle_laplacian_eigenvalues(g.adjacency.tolist())
        assert spectrum_from_conjugate(g) == Spectrum.from_mapping({int(k): v for k, v in oracle.items()})


def test_conjugate_route_rejects_non_threshold():
    with pytest.raises(NotThreshold):
        spectrum_from_conjugate(P4)


@pytest.mark.parametrize("n, values", [(3, [0, 1, 3]), (4, [0, 1, 3, 4])])
def test_antiregular_spectrum(n, values):
    assert antiregular_spectrum(n).values() == values
    assert spectrum_from_conjugate(antiregular_graph(n)) == antiregular_spectrum(n)


def test_spectrum_formatting():
    s = Spectrum.from_values([0, 3, 3])
    assert str(s) == "{0, 3^2}"
    assert s.to_json() == {"eigenvalues": [{"value": 0, "multiplicity": 1}, {"value": 3, "multiplicity": 2}]}
    assert s.multiplicity(3) == 2 and s.multiplicity(1) == 0


@pytest.mark.parametrize("g, text", [(K3, "λ^3 - 6λ^2 + 9λ"), (STAR, "λ^3 - 4λ^2 + 3λ")])
def test_char_poly_examples(g, text):
    assert str(char_poly(laplacian(g))) == text


def test_char_poly_zero_matrix():
    assert char_poly(np.zeros((4, 4), dtype=int)).coeffs == (0, 0, 0, 0, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_char_poly_matches_sympy(n, seed):
    rng = np.random.default_rng(seed)
    m = rng.integers(-5, 6, size=(n, n))
    lam = sympy.Symbol("lam")
    expected = sympy.Matrix(m.tolist()).charpoly(lam).all_coeffs()[::-1]
    assert list(char_poly(m).coeffs) == [int(c) for c in expected]


def test_integer_roots_examples():
    assert integer_roots(ExactPolynomial((0, 3, -4, 1))).values() == [0, 1, 3]
    assert integer_roots(ExactPolynomial((0, 0, 0, 1))).values() == [0, 0, 0]
    assert integer_roots(ExactPolynomial((6, -5, 1))).values() == [2, 3]
    assert integer_roots(ExactPolynomial((-4, 0, 1))).values() == [-2, 2]


def test_integer_roots_irrational():
    with pytest.raises(NonIntegralSpectrum) as info:
        integer_roots(ExactPolynomial((-2, 0, 1)))
    assert info.value.residual == (-2, 0, 1)


def test_charpoly_route_on_p4_is_not_integral():
    with pytest.raises(NonIntegralSpectrum):
        spectrum_from_charpoly(P4)


def test_commute_examples():
    assert commute_check(laplacian(STAR), laplacian(K3))
    assert commute_check(laplacian(P4), laplacian(P4))
    a, b = laplacian(P4), laplacian(C4)
    assert commute_check(a, b) == (a.tolist() and (a @ b == b @ a).all())


def test_commute_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        commute_check(laplacian(STAR), laplacian(P4))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 9), st.integers(0, 2**32 - 1))
def test_jacobi_matches_numpy(n, seed):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(n, n))
    m = m + m.T
    assert np.allclose(jacobi_eigenvalues(m), np.sort(np.linalg.eigvalsh(m))[::-1], atol=1e-9)


def test_jacobi_batched():
    stack = adjacency_stack(5, np.arange(0, 1024, 37))
    out = jacobi_eigenvalues(stack)
    expected = np.sort(np.linalg.eigvalsh(stack.astype(float)), axis=1)[:, ::-1]
    assert np.allclose(out, expected, atol=1e-10)


def test_grone_merris_p4():
    report = grone_merris_check(P4)
    r2 = math.sqrt(2)
    assert not report.exact
    assert np.allclose(report.eigenvalues, [2 + r2, 2, 2 - r2, 0], atol=1e-9)
    assert report.conjugate == (4, 2, 0, 0)
    assert report.holds and report.eigenvalues[0] < 4
    # the entrywise comparison fails at the third position
    assert not report.pointwise and not report.equality


def test_grone_merris_empty_graph():
    report = grone_merris_check(np.zeros((4, 4), dtype=int))
    assert report.holds and report.equality and report.eigenvalues == (0, 0, 0, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_grone_merris_threshold_equality(n):
    for bcs in enumerate_bcs(n):
        report = grone_merris_check(build_graph(bcs))
        assert report.exact and report.holds and report.pointwise and report.equality


@pytest.mark.parametrize("n", [4, 5])
def test_batch_matches_single(n):
    total = 2 ** (n * (n - 1) // 2)
    stack = adjacency_stack(n, np.arange(total))
    batch = grone_merris_batch(stack)
    for idx in range(0, total, 7):
        single = grone_merris_check(stack[idx])
        assert bool(batch["holds"][idx]) == single.holds
        assert bool(batch["equality"][idx]) == single.equality
        assert bool(batch["pointwise"][idx]) == single.pointwise
