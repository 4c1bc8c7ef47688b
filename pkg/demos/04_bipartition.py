"""
Spanning bipartite k-connected subgraphs of dense graphs
========================================================

"""

import time

from bipconn.generators import gnp
from bipconn.pipeline import params_for, run

# k = 2 at n = 1024 is the one case where the proven thresholds are met by a real graph
params = params_for(2, 1024, "a", seed=0)
print(f"regime a, k=2, n=1024: s = {params.s}, d = {params.d}")
g = gnp(1024, 0.95, seed=0)
t0 = time.perf_counter()
res = run(g, params)
print(f"min degree {g.min_degree()}: {res.outcome} in {time.perf_counter() - t0:.1f}s, "
      f"{len(res.certificate.edges)} of {g.m} edges kept, rounds {res.stats['rounds']}, "
      f"merges {res.stats['merges']}")

# below the thresholds, opportunistic mode tunes s and d to the graph and just tries
print()
for n, p, k in [(60, 0.8, 3), (150, 0.85, 3), (200, 0.9, 3)]:
    g = gnp(n, p, seed=n)
    res = run(g, params_for(k, n, mode="opportunistic", seed=1))
    print(f"n={n:3d} p={p} k={k}: {res.outcome:8s} effective s={res.stats['effective']['s']}, "
          f"d={res.stats['effective']['d']}, retries {res.stats['retries']}")

# strict mode refuses when the graph is too sparse, and says why
res = run(gnp(200, 0.9, seed=2), params_for(2, 200, "a"))
print(f"\nstrict mode on n=200: {res.outcome}: {res.diagnostic['message']}")
