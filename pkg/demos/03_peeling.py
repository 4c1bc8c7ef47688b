"""
Peeling a digraph down to a highly connected piece
==================================================

Three blocks that only talk to each other through two hub vertices.
"""

import math

from bipconn.connectivity import vertex_connectivity
from bipconn.generators import clustered_digraph
from bipconn.graph import Digraph, underlying
from bipconn.peel import peel_log

blocks = clustered_digraph([40, 50, 60], out_degree=16, cross=0, seed=3)
# vertices 0 and 1 also point into every block, so {0, 1} is the only way across
hubs = [(h, v) for h in (0, 1) for v in range(40, 150, 7)]
d = Digraph.from_arcs(blocks.n, blocks.arcs() + hubs)
k = 3
print(f"n={d.n}, min out-degree {d.min_out_degree()}, (k-1) log n = {(k - 1) * math.log2(d.n):.2f}")
print(f"underlying kappa before: {vertex_connectivity(underlying(d))}")

res = peel_log(d, k)
for i, w in enumerate(res.removed, 1):
    print(f"step {i}: removed {sorted(w.vertices)}, kept {len(w.side_small)} vertices")
loss = res.out_degree_loss(d)
print(f"{len(res.survivors)} survivors, kappa {vertex_connectivity(underlying(res.D_prime))}, "
      f"largest out-degree loss {max(loss.values())} (budget {res.loss_budget})")
