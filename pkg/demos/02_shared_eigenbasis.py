"""One integer eigenbasis diagonalizes every threshold Laplacian of a given order.

With vertices in creation order, column k of the basis is
(-1, ..., -1, k, 0, ..., 0).  Its eigenvalue can be read straight from the
graph: the degree of vertex k+1, plus one when that vertex was dominating.
"""

import itertools

from threshold_graphs import (
    ArbitraryGraph,
    build_graph,
    laplacian,
    standard_eigenbasis,
    verify_shared_eigenbasis,
)
from threshold_graphs.enumeration import enumerate_bcs

x = standard_eigenbasis(5)
print("standard basis for n=5 (columns):")
print(x.matrix)
print("orthogonal:", x.is_orthogonal(), " coprime columns:", x.columns_coprime())

for text in ("00101", "11010", "11111", "00011"):
    report = verify_shared_eigenbasis(build_graph(text))
    print(f"  {text}: eigenvalues {report.eigenvalues}  all pass: {report.all_passed}")

failures = sum(not verify_shared_eigenbasis(build_graph(b)).all_passed for n in range(1, 11) for b in enumerate_bcs(n))
print(f"\nevery threshold graph with n <= 10: {failures} failures")

# The converse: P4 is not threshold, and no relabelling makes the basis work.
p4 = ArbitraryGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
passing = [p for p in itertools.permutations(range(4)) if verify_shared_eigenbasis(p4.relabel(p)).all_passed]
print("relabellings of P4 that pass:", passing)
print("Laplacian of P4:\n", laplacian(p4))
