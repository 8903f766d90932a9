"""Creation sequences, cells, and the block structure of a threshold graph.

A threshold graph is grown one vertex at a time: each new vertex is either
isolated (bit 0) or joined to everything already present (bit 1).  Runs of
equal bits are the cells.
"""

from threshold_graphs import (
    bcs_to_ccs,
    build_graph,
    ccs_to_bcs,
    complement,
    verify_weights,
    weight_realization,
)

star = build_graph("001")
print("star from '001':", star.edges(), "degrees", star.degrees)

g = build_graph(ccs_to_bcs([2, 3, 4, 5, 6, 7]))
print(f"\nC(2,3,4,5,6,7): n={g.n}, m={g.edge_count}, {len(g.cells)} cells")
for i, cell in enumerate(g.cells, start=1):
    print(f"  cell {i}: {cell.kind.value:8s} size {cell.size}  degree {g.degrees[cell.start]}")

# Adjacency drawn cell by cell: 'J' all ones, '0' all zeros, 'J-I' a clique.
print("\nblock pattern (row cell vs column cell):")
for ci in g.cells:
    row = []
    for cj in g.cells:
        block = g.adjacency[ci.start, cj.start:cj.start + cj.size]
        if ci is cj:
            row.append("J-I" if ci.kind.value == "clique" else " 0 ")
        else:
            row.append(" J " if block.all() else " 0 ")
    print("  " + " ".join(row))

print("\nround trip:", str(g.bcs), "->", bcs_to_ccs(g.bcs).runs)
print("complement of the star:", str(complement(star).bcs))

wr = weight_realization(star)
print("\nweights for the star:", wr.weights, "threshold", wr.threshold, "valid:", verify_weights(star, wr))
