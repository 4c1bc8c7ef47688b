"""Vertex and edge connectivity, minimum separators and Menger path systems.

Vertex connectivity is computed with unit-capacity max flow on the
vertex-split network (``v`` becomes ``v_in -> v_out`` with capacity 1).
Augmenting paths are found by BFS over arcs in insertion order, which makes
every cut and path system reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, maximum_flow

from .graph import Graph


@dataclass(frozen=True)
class SeparatorWitness:
    """A vertex set whose removal disconnects the graph.

    ``side_small`` is the smallest component left after the removal (ties go to
    the component with the smallest vertex). ``reason`` is ``"separator"`` or
    ``"too_few_vertices"``; in the latter case both sets are empty.
    """

    vertices: frozenset[int]
    side_small: frozenset[int]
    reason: str = "separator"

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class PathSystem:
    a: int
    b: int
    paths: list[list[int]]
    # set when fewer paths than requested were found
    cut: SeparatorWitness | None = None
    flow_value: int = 0
    excluded_direct_edge: bool = False


def components(g: Graph, removed: frozenset[int] | set[int] = frozenset()) -> list[list[int]]:
    """Connected components of ``g - removed``, each sorted, ordered by smallest vertex."""
    seen = bytearray(g.n)
    for v in removed:
        seen[v] = 1
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def make_witness(g: Graph, cut: frozenset[int] | set[int]) -> SeparatorWitness:
    cut = frozenset(cut)
    comps = components(g, cut)
    if len(comps) < 2:
        raise ValueError(f"{sorted(cut)} does not separate the graph")
    smallest = min(comps, key=lambda c: (len(c), c[0]))
    return SeparatorWitness(cut, frozenset(smallest))


def _articulation_point(g: Graph) -> int | None:
    """Lowest-labelled cut vertex of a connected graph, or None (iterative Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    adj = g.adj
    cut_vertices = []
    disc[0] = 0
    timer = 1
    root_children = 0
    # stack entries: (vertex, parent, next neighbour index)
    stack = [(0, -1, 0)]
    while stack:
        v, parent, i = stack[-1]
        nbrs = adj[v]
        if i < len(nbrs):
            stack[-1] = (v, parent, i + 1)
            w = nbrs[i]
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, 0))
                if v == 0:
                    root_children += 1
            elif w != parent and disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != 0 and low[v] >= disc[parent]:
                    cut_vertices.append(parent)
    if root_children > 1:
        cut_vertices.append(0)
    return min(cut_vertices) if cut_vertices else None


class VertexFlowNetwork:
    """Reusable vertex-split unit-capacity network over a fixed graph.

    Node ``2v`` is ``v_in`` and ``2v + 1`` is ``v_out``. Arc ``e`` and ``e ^ 1``
    are mutual reverses.
    """

    def __init__(self, g: Graph):
        self.g = g
        n = g.n
        head: list[int] = []
        cap: list[int] = []
        out_arcs: list[list[int]] = [[] for _ in range(2 * n)]
        for v in range(n):
            e = len(head)
            head += [2 * v + 1, 2 * v]
            cap += [1, 0]
            out_arcs[2 * v].append(e)
            out_arcs[2 * v + 1].append(e + 1)
        for u in range(n):
            for w in g.adj[u]:
                # arc u_out -> w_in; the reverse sits at w_in
                e = len(head)
                head += [2 * w, 2 * u + 1]
                cap += [1, 0]
                out_arcs[2 * u + 1].append(e)
                out_arcs[2 * w].append(e + 1)
        self.head = head
        self.cap0 = cap
        self.cap = list(cap)
        self.out_arcs = out_arcs
        self._touched: list[int] = []
        self._mark = [0] * (2 * n)
        self._stamp = 0
        self._parent = [-1] * (2 * n)

    def _reset(self) -> None:
        cap, cap0 = self.cap, self.cap0
        for e in self._touched:
            cap[e] = cap0[e]
            cap[e ^ 1] = cap0[e ^ 1]
        self._touched.clear()

    def _bfs(self, src: int, sink: int) -> bool:
        self._stamp += 1
        stamp = self._stamp
        mark, parent = self._mark, self._parent
        head, cap, out_arcs = self.head, self.cap, self.out_arcs
        mark[src] = stamp
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for e in out_arcs[x]:
                if cap[e]:
                    y = head[e]
                    if mark[y] != stamp:
                        mark[y] = stamp
                        parent[y] = e
                        if y == sink:
                            return True
                        queue.append(y)
        return False

    def _direct_arcs(self, s: int, t: int) -> list[int]:
        found = []
        for x, y in ((2 * s + 1, 2 * t), (2 * t + 1, 2 * s)):
            for e in self.out_arcs[x]:
                if e % 2 == 0 and self.head[e] == y:
                    found.append(e)
        return found

    def flow(self, s: int, t: int, limit: int | None = None, skip_direct: bool = False) -> int:
        """Number of internally disjoint s-t paths, capped at ``limit``.

        Leaves the flow in place so :meth:`cut` and :meth:`paths` can read it.
        """
        self._reset()
        self._s, self._t = s, t
        self._skipped = self._direct_arcs(s, t) if skip_direct else []
        for e in self._skipped:
            self.cap[e] = 0
            self._touched.append(e)
        src, sink = 2 * s + 1, 2 * t
        head, cap, parent = self.head, self.cap, self._parent
        touched = self._touched
        value = 0
        self._saturated = False
        while limit is None or value < limit:
            if not self._bfs(src, sink):
                self._saturated = True
                break
            y = sink
            while y != src:
                e = parent[y]
                cap[e] -= 1
                cap[e ^ 1] += 1
                touched.append(e)
                y = head[e ^ 1]
            value += 1
        self.value = value
        return value

    def cut(self) -> frozenset[int]:
        """Minimum s-t vertex cut for the last flow (which must be maximum)."""
        if not self._saturated:
            raise RuntimeError("cut requested for a flow stopped at its limit")
        stamp, mark, head = self._stamp, self._mark, self.head
        # every forward arc leaving the reached set is saturated; a vertex arc v_in -> v_out
        # names v, an edge arc u_out -> w_in names w. An arc into t_in is the direct edge s-t.
        cut = set()
        for x in range(2 * self.g.n):
            if mark[x] != stamp:
                continue
            for e in self.out_arcs[x]:
                if e % 2 == 0 and mark[head[e]] != stamp and e not in self._skipped:
                    cut.add(head[e] // 2)
        cut.discard(self._t)
        return frozenset(cut)

    def source_side(self) -> frozenset[int]:
        stamp, mark = self._stamp, self._mark
        return frozenset(v for v in range(self.g.n) if mark[2 * v + 1] == stamp)

    def paths(self) -> list[list[int]]:
        """Decompose the current flow into vertex sequences from s to t."""
        s, t = self._s, self._t
        head, cap, cap0 = self.head, self.cap, self.cap0
        used = set(self._skipped)
        result = []
        for e0 in self.out_arcs[2 * s + 1]:
            if e0 % 2 or e0 in used or cap0[e0] - cap[e0] <= 0:
                continue
            path = [s]
            e = e0
            while True:
                used.add(e)
                v = head[e] // 2
                path.append(v)
                if v == t:
                    break
                # through v_in -> v_out, then the unique outgoing flow arc
                nxt = None
                for f in self.out_arcs[2 * v + 1]:
                    if f % 2 == 0 and f not in used and cap0[f] - cap[f] > 0:
                        nxt = f
                        break
                if nxt is None:
                    raise RuntimeError("flow decomposition failed")
                e = nxt
            result.append(path)
        return result


class SparseVertexFlow:
    """The same vertex-split network handed to scipy's Dinic.

    Pays a fixed cost per call instead of one BFS per augmenting path, so it
    wins once flow values exceed a handful.
    """

    def __init__(self, g: Graph):
        n = g.n
        edges = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)
        u, w = edges[:, 0], edges[:, 1]
        v = np.arange(n)
        self.rows = np.concatenate([2 * v, 2 * u + 1, 2 * w + 1])
        self.cols = np.concatenate([2 * v + 1, 2 * w, 2 * u])
        self.caps = csr_matrix(
            (np.ones(len(self.rows), dtype=np.int32), (self.rows, self.cols)), shape=(2 * n, 2 * n)
        )
        self.caps.sort_indices()

    def value(self, s: int, t: int) -> int:
        return int(maximum_flow(self.caps, 2 * s + 1, 2 * t, method="dinic").flow_value)

    def cut(self, s: int, t: int) -> frozenset[int]:
        """Minimum s-t vertex cut, read off the residual graph as in :meth:`VertexFlowNetwork.cut`."""
        res = maximum_flow(self.caps, 2 * s + 1, 2 * t, method="dinic")
        residual = csr_matrix(self.caps - res.flow)
        residual.data[residual.data < 0] = 0
        residual.eliminate_zeros()
        reached = np.zeros(self.caps.shape[0], dtype=bool)
        reached[breadth_first_order(residual, 2 * s + 1, directed=True, return_predecessors=False)] = True
        crossing = reached[self.rows] & ~reached[self.cols]
        cut = set((self.cols[crossing] // 2).tolist())
        cut.discard(t)
        return frozenset(cut)


# above this flow limit the scipy network is used
_SPARSE_LIMIT = 4


def separator_witness(g: Graph, k: int) -> SeparatorWitness | None:
    """None if ``g`` is k-connected, else a separator of at most ``k - 1`` vertices.

    A graph with at most ``k`` vertices gets a witness with reason
    ``"too_few_vertices"``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    if n <= k:
        return SeparatorWitness(frozenset(), frozenset(), reason="too_few_vertices")
    comps = components(g)
    if len(comps) > 1:
        return make_witness(g, frozenset())
    if k == 1:
        return None
    v_min = min(range(n), key=lambda v: (len(g.adj[v]), v))
    if len(g.adj[v_min]) < k:
        # n > k > deg(v_min), so some vertex lies outside N[v_min]
        return make_witness(g, frozenset(g.adj[v_min]))
    if k == 2:
        ap = _articulation_point(g)
        return None if ap is None else make_witness(g, frozenset([ap]))
    if 2 * len(g.adj[v_min]) >= n + k - 2:
        # every non-adjacent pair then shares at least k neighbours
        return None
    net = sparse = None
    for i in range(k):
        for w in range(n):
            if w == i or (w < k and w < i) or g.has_edge(i, w):
                continue
            # k common neighbours are k disjoint paths already
            if len(g.neighbours(i) & g.neighbours(w)) >= k:
                continue
            if k > _SPARSE_LIMIT:
                sparse = sparse or SparseVertexFlow(g)
                if sparse.value(i, w) < k:
                    return make_witness(g, sparse.cut(i, w))
            else:
                net = net or VertexFlowNetwork(g)
                if net.flow(i, w, limit=k) < k:
                    return make_witness(g, net.cut())
    return None


def is_k_connected(g: Graph, k: int) -> bool:
    return separator_witness(g, k) is None


def vertex_connectivity(g: Graph) -> int:
    """kappa(G): 0 if disconnected, n - 1 for K_n."""
    n = g.n
    if n <= 1 or not is_connected(g):
        return 0
    if g.is_complete():
        return n - 1
    v = min(range(n), key=lambda x: (len(g.adj[x]), x))
    best = len(g.adj[v])
    if best > _SPARSE_LIMIT:
        sparse = SparseVertexFlow(g)
        flow = lambda a, b, limit: sparse.value(a, b)  # noqa: E731
    else:
        flow = VertexFlowNetwork(g).flow
    nbrs = g.adj[v]
    pairs = [(v, w) for w in range(n) if w != v and not g.has_edge(v, w)]
    # v may lie in every minimum separator; then two of its neighbours are split
    pairs += [(x, y) for i, x in enumerate(nbrs) for y in nbrs[i + 1:] if not g.has_edge(x, y)]
    for a, b in pairs:
        # the flow is at least the number of common neighbours
        if len(g.neighbours(a) & g.neighbours(b)) < best:
            best = min(best, flow(a, b, limit=best))
    return best


def min_separator(g: Graph, a: int, b: int) -> SeparatorWitness:
    """Minimum a-b vertex cut; ``side_small`` here is the component containing ``a``."""
    if a == b:
        raise ValueError("a and b must differ")
    if g.has_edge(a, b):
        raise ValueError(f"{a} and {b} are adjacent; no vertex cut separates them")
    net = VertexFlowNetwork(g)
    net.flow(a, b)
    cut = net.cut()
    a_side = next(c for c in components(g, cut) if a in c)
    return SeparatorWitness(cut, frozenset(a_side))


def disjoint_paths(
    g: Graph, a: int, b: int, want: int | None = None, min_length: int = 1
) -> PathSystem:
    """Internally vertex-disjoint a-b paths from a max-flow decomposition.

    With ``min_length >= 2`` the direct edge ``ab`` (if any) is excluded.
    ``want=None`` asks for as many as possible. When fewer than ``want`` exist the
    limiting cut is attached.
    """
    if a == b:
        raise ValueError("a and b must differ")
    skip = min_length >= 2 and g.has_edge(a, b)
    net = VertexFlowNetwork(g)
    value = net.flow(a, b, limit=want, skip_direct=skip)
    paths = net.paths()
    cut = None
    if want is not None and value < want and (skip or not g.has_edge(a, b)):
        cut_set = net.cut()
        comps = components(g, cut_set)
        side = next((c for c in comps if a in c), [a])
        cut = SeparatorWitness(cut_set, frozenset(side))
    return PathSystem(a, b, paths, cut, value, skip)


def edge_connectivity(g: Graph) -> int:
    """Global minimum edge cut size via n - 1 max flows from vertex 0."""
    n = g.n
    if n < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        return 0
    edges = g.edges()
    rows = np.fromiter((x for u, v in edges for x in (u, v)), dtype=np.int32, count=2 * len(edges))
    cols = np.fromiter((x for u, v in edges for x in (v, u)), dtype=np.int32, count=2 * len(edges))
    caps = csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n, n))
    caps.sort_indices()
    best = g.min_degree()
    for t in range(1, n):
        if best == 0:
            break
        best = min(best, int(maximum_flow(caps, 0, t, method="dinic").flow_value))
    return best


def sampled_separator_witness(g: Graph, k: int, probes: int = 64, seed: int = 0) -> SeparatorWitness | None:
    """Like :func:`separator_witness` but with flows between ``probes`` random pairs only.

    Exact for ``k <= 2`` and whenever the degree check already fails; otherwise
    a ``None`` answer is evidence, not proof.
    """
    if k <= 2 or g.n <= k:
        return separator_witness(g, k)
    comps = components(g)
    if len(comps) > 1:
        return make_witness(g, frozenset())
    v_min = min(range(g.n), key=lambda v: (len(g.adj[v]), v))
    if len(g.adj[v_min]) < k:
        return make_witness(g, frozenset(g.adj[v_min]))
    rng = np.random.default_rng(seed)
    net = VertexFlowNetwork(g)
    for _ in range(probes):
        a, b = (int(x) for x in rng.choice(g.n, size=2, replace=False))
        if not g.has_edge(a, b) and net.flow(a, b, limit=k) < k:
            return make_witness(g, net.cut())
    return None
