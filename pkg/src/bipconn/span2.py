"""Spanning bipartite 2-connected subgraphs of 3-connected graphs.

Start from an even cycle and keep adding ears: a path through vertices not yet
covered, joining two distinct covered vertices, with the parity that keeps the
coloring proper. Ears are searched along a spanning tree of one uncovered
component at a time. In a 3-connected graph some component always offers one,
so the subgraph grows until it spans.
"""

from __future__ import annotations

from collections import deque

from .connectivity import components, disjoint_paths, separator_witness
from .errors import InternalConsistencyError, PreconditionViolation
from .graph import BipartiteCertificate, Graph, _norm, induced_subgraph


def even_cycle(g: Graph) -> list[int]:
    """An even cycle (vertex sequence, first vertex not repeated).

    Three internally disjoint paths between two vertices contain two of equal
    length parity, and those two close an even cycle.
    """
    a = 0
    for b in range(1, g.n):
        ps = disjoint_paths(g, a, b, want=3)
        if len(ps.paths) < 3:
            continue
        by_parity: dict[int, list[list[int]]] = {}
        for p in ps.paths:
            by_parity.setdefault((len(p) - 1) % 2, []).append(p)
        for group in by_parity.values():
            if len(group) >= 2:
                p, q = sorted(group, key=len)[:2]
                return p + q[-2:0:-1]
    raise PreconditionViolation("no vertex pair has three disjoint paths", guarantee="3-connected input")


def _tree(g: Graph, comp: list[int]) -> tuple[dict[int, int | None], dict[int, int]]:
    """BFS tree of one component: parent pointers and depth."""
    inside = set(comp)
    root = comp[0]
    parent: dict[int, int | None] = {root: None}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in inside and w not in parent:
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)
    return parent, depth


def _tree_path(parent, depth, x: int, y: int) -> list[int]:
    left, right = [x], [y]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return left + right[-2::-1]


def find_ear(g: Graph, color: dict[int, int], comp: list[int]) -> list[int] | None:
    """An ear ``p, x, ..., y, q`` through ``comp`` with distinct ends ``p, q`` covered.

    ``x..y`` is the tree path. Parity works out iff the labels
    ``depth(x) + color(p)`` and ``depth(y) + color(q)`` agree mod 2.
    """
    parent, depth = _tree(g, comp)
    # label -> first attachment (x, p) seen with that label
    first: dict[int, tuple[int, int]] = {}
    for x in comp:
        for p in g.adj[x]:
            if p not in color:
                continue
            lab = (depth[x] + color[p]) % 2
            if lab not in first:
                first[lab] = (x, p)
            elif first[lab][1] != p:
                x0, p0 = first[lab]
                return [p0] + _tree_path(parent, depth, x0, x) + [p]
    return None


def span2connected(g: Graph, check_input: bool = True) -> tuple[BipartiteCertificate, dict]:
    """Spanning bipartite 2-connected subgraph of a 3-connected graph.

    Returns the certificate and a small log (seed cycle length, ears added).
    """
    if check_input:
        w = separator_witness(g, 3)
        if w is not None:
            raise PreconditionViolation(
                "input is not 3-connected", w, guarantee="kappa(G) >= 3")
    cycle = even_cycle(g)
    color = {v: i % 2 for i, v in enumerate(cycle)}
    edges = {_norm(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    log = {"seed_cycle": len(cycle), "ears": []}
    while len(color) < g.n:
        rest = [v for v in range(g.n) if v not in color]
        h, labels = induced_subgraph(g, rest)
        ear = None
        for comp in components(h):
            ear = find_ear(g, color, [labels[x] for x in comp])
            if ear is not None:
                break
        if ear is None:
            stuck = [labels[x] for x in components(h)[0]]
            raise InternalConsistencyError(
                "no ear found; the input must have a separator of size at most 2",
                {"component": stuck, "covered": sorted(color)},
            )
        c = color[ear[0]]
        for v in ear[1:-1]:
            c ^= 1
            color[v] = c
        if color[ear[-1]] != c ^ 1:
            raise InternalConsistencyError(f"ear {ear} has the wrong parity")
        edges.update(_norm(ear[i], ear[i + 1]) for i in range(len(ear) - 1))
        log["ears"].append(len(ear) - 1)
    cert = BipartiteCertificate.build(range(g.n), edges, color, 2)
    errs = cert.structural_errors()
    if errs or separator_witness(cert.graph()[0], 2) is not None:
        raise InternalConsistencyError(f"result failed verification: {errs or 'not 2-connected'}")
    return cert, log
