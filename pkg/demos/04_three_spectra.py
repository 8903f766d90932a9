"""Three independent routes to a threshold Laplacian spectrum, and the Grone-Merris bound.

* the conjugate degree sequence, read off the Ferrers diagram,
* one value per cell (degree, or degree plus one for a clique cell),
* exact integer roots of the characteristic polynomial.
"""

from threshold_graphs import (
    ArbitraryGraph,
    antiregular_graph,
    antiregular_spectrum,
    build_graph,
    ccs_to_bcs,
    char_poly,
    grone_merris_check,
    laplacian,
    spectrum_from_cells,
    spectrum_from_charpoly,
    spectrum_from_conjugate,
)

g = build_graph(ccs_to_bcs([2, 3, 4, 5, 6, 7]))
print("C(2,3,4,5,6,7)")
print("  conjugate:", spectrum_from_conjugate(g))
print("  cells:    ", spectrum_from_cells(g))
print("  charpoly: ", spectrum_from_charpoly(g))

star = build_graph("001")
print("\nstar characteristic polynomial:", char_poly(laplacian(star)))

print("\nantiregular graphs have simple spectra with one gap:")
for n in range(2, 9):
    print(f"  n={n}: {spectrum_from_conjugate(antiregular_graph(n))}  expected {antiregular_spectrum(n)}")

# For any graph the eigenvalues are majorized by the conjugate degrees;
# threshold graphs are exactly the equality cases.
p4 = ArbitraryGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
for name, graph in (("P4", p4), ("paw", antiregular_graph(4))):
    r = grone_merris_check(graph)
    eig = [round(float(v), 4) for v in r.eigenvalues]
    print(f"\n{name}: eigenvalues {eig} conjugate {list(r.conjugate)}")
    print(f"  majorized: {r.holds}  entrywise: {r.pointwise}  equality: {r.equality}")
