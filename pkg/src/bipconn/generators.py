"""Named graphs and seeded random graphs/digraphs."""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Digraph, Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, [[w for w in range(n) if w != v] for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism_graph(m: int = 3) -> Graph:
    """Two m-cycles joined by a perfect matching (3-connected, planar)."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    return Graph.from_edges(2 * m, edges)


def gnp(n: int, p: float, seed: int | np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p); pairs are drawn in row-major upper-triangle order."""
    if not 0 <= p <= 1:
        raise ValueError(f"p={p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    mask = rng.random(len(iu)) < p
    return Graph.from_edges(n, zip(iu[mask].tolist(), ju[mask].tolist()))


def random_digraph(n: int, out_degree: int, seed: int | np.random.Generator) -> Digraph:
    """Every vertex gets ``out_degree`` distinct out-neighbours, uniformly."""
    rng = np.random.default_rng(seed)
    out = []
    for v in range(n):
        others = np.delete(np.arange(n), v)
        out.append(sorted(rng.choice(others, size=out_degree, replace=False).tolist()))
    return Digraph(n, out)


def clustered_digraph(
    sizes: list[int], out_degree: int, cross: int, seed: int | np.random.Generator
) -> Digraph:
    """Blocks of the given sizes; each vertex sends ``out_degree`` arcs inside its block
    and ``cross`` arcs to random vertices elsewhere."""
    rng = np.random.default_rng(seed)
    starts = list(itertools.accumulate([0] + sizes))
    n = starts[-1]
    out: list[list[int]] = []
    for b, size in enumerate(sizes):
        block = np.arange(starts[b], starts[b + 1])
        outside = np.concatenate([np.arange(0, starts[b]), np.arange(starts[b + 1], n)])
        for v in block:
            inside = block[block != v]
            nbrs = set(rng.choice(inside, size=min(out_degree, len(inside)), replace=False).tolist())
            if cross and len(outside):
                nbrs |= set(rng.choice(outside, size=min(cross, len(outside)), replace=False).tolist())
            out.append(sorted(nbrs))
    return Digraph(n, out)


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, [[w for w in range(n) if w != v] for v in range(n)])


def odd_cycle_witness(n: int) -> Graph:
    """C_n for odd n >= 5: 2-connected with no spanning bipartite 2-connected subgraph."""
    if n < 5 or n % 2 == 0:
        raise ValueError("odd_cycle_witness needs odd n >= 5")
    return cycle_graph(n)


def even_witness(n: int) -> Graph:
    """C_{n-1} on 0..n-2 plus vertex n-1 joined to cycle vertices 0 and 2 (even n >= 6)."""
    if n < 6 or n % 2:
        raise ValueError("even_witness needs even n >= 6")
    m = n - 1
    edges = [(i, (i + 1) % m) for i in range(m)] + [(m, 0), (m, 2)]
    return Graph.from_edges(n, edges)
