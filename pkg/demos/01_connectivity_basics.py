"""
Vertex connectivity, separators and disjoint paths
==================================================

"""

from bipconn.connectivity import disjoint_paths, min_separator, separator_witness, vertex_connectivity
from bipconn.generators import complete_graph, cycle_graph, gnp, petersen_graph

for name, g in [("K6", complete_graph(6)), ("C9", cycle_graph(9)), ("Petersen", petersen_graph())]:
    print(f"{name:9s} kappa = {vertex_connectivity(g)}")

# a sparser random graph, where small separators exist
g = gnp(30, 0.3, seed=4)
kappa = vertex_connectivity(g)
w = separator_witness(g, kappa + 1)
print(f"\nG(30, 0.3): kappa = {kappa}; removing {sorted(w.vertices)} cuts off {sorted(w.side_small)}")

# Menger: the smallest a-b separator has as many vertices as there are disjoint a-b paths
a, b = next((a, b) for a in range(g.n) for b in range(a + 1, g.n) if not g.has_edge(a, b))
cut = min_separator(g, a, b)
paths = disjoint_paths(g, a, b).paths
print(f"\n{a} and {b}: separator {sorted(cut.vertices)}, {len(paths)} disjoint paths")
for p in paths:
    print("  ", " - ".join(map(str, p)))
