"""Naive reference implementations used as oracles; independent of the package code paths."""

import itertools


def oracle_threshold_edges(bits):
    """Grow the graph vertex by vertex with plain sets; 1-based edges."""
    edges = set()
    for k, bit in enumerate(bits, start=1):
        if k >= 2 and bit == 1:
            edges.update((j, k) for j in range(1, k))
    return edges


def oracle_adjacency(n, edges):
    a = [[0] * n for _ in range(n)]
    for u, v in edges:
        a[u - 1][v - 1] = a[v - 1][u - 1] = 1
    return a


def oracle_has_forbidden(a):
    """Brute force: does some 4-subset induce P4, C4 or 2K2 (checked by isomorphism)?"""
    n = len(a)
    p4 = {(0, 1), (1, 2), (2, 3)}
    c4 = {(0, 1), (1, 2), (2, 3), (0, 3)}
    two_k2 = {(0, 1), (2, 3)}
    patterns = [p4, c4, two_k2]
    for quad in itertools.combinations(range(n), 4):
        for perm in itertools.permutations(quad):
            induced = {(i, j) for i in range(4) for j in range(i + 1, 4) if a[perm[i]][perm[j]]}
            if induced in patterns:
                return True
    return False


def oracle_laplacian_eigenvalues(a):
    """Exact eigenvalues via sympy as a {value: multiplicity} dict (values may be algebraic)."""
    import sympy

    n = len(a)
    L = sympy.Matrix(n, n, lambda i, j: sum(a[i]) if i == j else -a[i][j])
    return L.eigenvals()


