"""
Small cases by exhaustive search
================================

The oracle tries every 2-coloring, so it is only usable up to about 20 vertices.
"""

import itertools

from bipconn.connectivity import is_k_connected, vertex_connectivity
from bipconn.generators import even_witness, gnp, odd_cycle_witness
from bipconn.graph import Graph
from bipconn.oracle import best_bipartite_kappa
from bipconn.span2 import span2connected

# 2-connected graphs whose bipartite spanning subgraphs are all at most 1-connected
for g in [odd_cycle_witness(7), even_witness(8)]:
    print(f"n={g.n}: kappa {vertex_connectivity(g)}, best bipartite kappa {best_bipartite_kappa(g).best_kappa}")

# on four vertices 2-connectivity is always enough
pairs = list(itertools.combinations(range(4), 2))
graphs = [Graph.from_edges(4, [e for i, e in enumerate(pairs) if m >> i & 1]) for m in range(64)]
two = [g for g in graphs if is_k_connected(g, 2)]
print(f"\n{len(two)} labeled 2-connected graphs on 4 vertices; "
      f"all keep a 2-connected bipartite subgraph: {all(best_bipartite_kappa(g).best_kappa >= 2 for g in two)}")

# 3-connected graphs always do, and span2connected builds one ear by ear
g = next(h for s in range(100) if vertex_connectivity(h := gnp(24, 0.25, s)) >= 3)
cert, log = span2connected(g)
h, _ = cert.graph()
print(f"\n3-connected G on {g.n} vertices, {g.m} edges -> bipartite subgraph with {len(cert.edges)} edges, "
      f"kappa {vertex_connectivity(h)}; seed cycle {log['seed_cycle']}, {len(log['ears'])} ears")
