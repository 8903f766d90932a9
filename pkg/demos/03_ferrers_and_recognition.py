"""Degree sequences, Ferrers diagrams, and three ways to recognize a threshold graph.

The Durfee square is the largest square fitting in the diagram.  A degree
sequence is a threshold sequence exactly when, along the Durfee square,
every column is one box longer than the matching row.
"""

import numpy as np

from threshold_graphs import (
    FerrersDiagram,
    ArbitraryGraph,
    build_graph,
    ccs_to_bcs,
    forbidden_subgraph_check,
    peel_recognize,
    sorted_degrees,
)

g = build_graph(ccs_to_bcs([2, 3, 4, 5]))
fd = FerrersDiagram.from_degrees(sorted_degrees(g))
print("degrees of C(2,3,4,5):", fd.rows)
print(fd.render())
print("conjugate:", fd.conjugate, " durfee:", fd.durfee, " threshold:", fd.is_threshold)

p4 = FerrersDiagram.from_degrees((2, 2, 1, 1))
print("\nP4 degrees (2,2,1,1):")
print(p4.render())
print("threshold:", p4.is_threshold)

# Hide a threshold graph behind a random relabelling and recover it.
rng = np.random.default_rng(1)
hidden = build_graph("0010110011011")
perm = rng.permutation(hidden.n)
scrambled = ArbitraryGraph(hidden.adjacency[np.ix_(perm, perm)])
report = peel_recognize(scrambled)
print("\npeeled creation sequence:", str(report.bcs), "(original", str(hidden.bcs) + ")")
print("creation order of the scrambled vertices (1-based):", [v + 1 for v in report.peel_order])

c5 = ArbitraryGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
bad = forbidden_subgraph_check(c5)
print("\nC5:", bad.witness_kind, "on vertices", [v + 1 for v in bad.witness])
