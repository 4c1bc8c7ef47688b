"""
Random colorings of K_80
========================

Color with r colors at random and keep only the edges whose ends differ.
More colors keep more edges; the question is how much edge connectivity survives.
"""

import numpy as np

from bipconn.experiments import derive_seed, maxcut_edge_conn, rcolor_trial
from bipconn.generators import complete_graph

g = complete_graph(80)
print(" r   success   mean edge conn   min")
for r in (2, 3, 4, 8, 32):
    recs = [rcolor_trial(g, r, 0.15, derive_seed(0, i)) for i in range(40)]
    lam = [x.measured["edge_connectivity"] for x in recs]
    wins = np.mean([x.measured["success"] for x in recs])
    print(f"{r:2d}   {wins:7.2f}   {np.mean(lam):14.1f}   {min(lam):3d}")

# a large cut of K_80 splits it 40/40 and keeps edge connectivity 40
rec = maxcut_edge_conn(g, 12, seed=0)
print(f"\nlocal max cut: {rec.measured}")
