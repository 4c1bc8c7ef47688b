"""Immutable graphs, digraphs, two-colorings and bipartite certificates.

Vertices are always the dense integers ``0..n-1``. Anything that looks like a
modification (induced subgraphs, bichromatic subgraphs, underlying graphs)
builds a new object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

RED = 0
BLUE = 1


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.
    """

    __slots__ = ("n", "adj", "m", "_nbr_sets")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self.m = sum(len(a) for a in self.adj) // 2
        self._nbr_sets: list[frozenset[int]] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for lineno, (u, v) in enumerate(edges, 1):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {lineno} ({u}, {v}): vertex out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"edge {lineno} ({u}, {v}): self-loop")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [sorted(s) for s in nbrs])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def neighbours(self, v: int) -> frozenset[int]:
        if self._nbr_sets is None:
            self._nbr_sets = [frozenset(a) for a in self.adj]
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbours(u)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adj)


class Digraph:
    """Simple digraph; opposite arcs ``(u, v)`` and ``(v, u)`` may coexist."""

    __slots__ = ("n", "out", "n_arcs")

    def __init__(self, n: int, out: Sequence[Sequence[int]]):
        self.n = n
        self.out: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in out)
        self.n_arcs = sum(len(a) for a in self.out)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        outs: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}): vertex out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"arc ({u}, {v}): self-loop")
            outs[u].add(v)
        return cls(n, [sorted(s) for s in outs])

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.n_arcs})"

    def out_degree(self, v: int) -> int:
        return len(self.out[v])

    def min_out_degree(self) -> int:
        return min((len(a) for a in self.out), default=0)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.out[u]]


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edge_list)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``, relabelled to ``0..|S|-1``.

    Returns the graph and ``labels`` with ``labels[i]`` the original vertex.
    """
    labels = sorted(set(vertices))
    index = {v: i for i, v in enumerate(labels)}
    adj = [[index[w] for w in g.adj[v] if w in index] for v in labels]
    return Graph(len(labels), adj), labels


def subgraph_from_edges(
    vertices: Iterable[int], edges: Iterable[tuple[int, int]]
) -> tuple[Graph, list[int]]:
    """Graph on ``vertices`` (relabelled) with exactly the given edges."""
    labels = sorted(set(vertices))
    index = {v: i for i, v in enumerate(labels)}
    return Graph.from_edges(len(labels), ((index[u], index[v]) for u, v in edges)), labels


def underlying(d: Digraph) -> Graph:
    nbrs: list[set[int]] = [set() for _ in range(d.n)]
    for u in range(d.n):
        for v in d.out[u]:
            nbrs[u].add(v)
            nbrs[v].add(u)
    return Graph(d.n, [sorted(s) for s in nbrs])


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, list[int]]:
    labels = sorted(set(vertices))
    index = {v: i for i, v in enumerate(labels)}
    out = [[index[w] for w in d.out[v] if w in index] for v in labels]
    return Digraph(len(labels), out), labels


@dataclass(frozen=True)
class TwoColoring:
    """Red/blue assignment on a vertex subset (``RED = 0``, ``BLUE = 1``)."""

    color: Mapping[int, int]

    def __post_init__(self):
        bad = [v for v, c in self.color.items() if c not in (RED, BLUE)]
        if bad:
            raise ValueError(f"colors must be 0 or 1; offending vertices {bad[:5]}")

    @classmethod
    def from_list(cls, colors: Sequence[int]) -> "TwoColoring":
        return cls(dict(enumerate(colors)))

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.color)

    def __getitem__(self, v: int) -> int:
        return self.color[v]

    def flipped(self) -> "TwoColoring":
        return TwoColoring({v: 1 - c for v, c in self.color.items()})

    def classes(self) -> tuple[list[int], list[int]]:
        red = sorted(v for v, c in self.color.items() if c == RED)
        blue = sorted(v for v, c in self.color.items() if c == BLUE)
        return red, blue

    def is_proper_for(self, edges: Iterable[tuple[int, int]]) -> bool:
        return all(self.color[u] != self.color[v] for u, v in edges)


def bichromatic_subgraph(g: Graph, colors: Mapping[int, int] | Sequence[int] | TwoColoring) -> Graph:
    """Spanning subgraph keeping the edges whose ends get different colors.

    ``colors`` may carry any number of colors; two-colorings are the common case.
    """
    if isinstance(colors, TwoColoring):
        colors = colors.color
    col = [colors[v] for v in range(g.n)]
    return Graph(g.n, [[w for w in g.adj[v] if col[w] != col[v]] for v in range(g.n)])


@dataclass(frozen=True)
class BipartiteCertificate:
    """A bipartite subgraph on ``vertices`` with a proper coloring, claimed ``k``-connected.

    A single vertex with no edges is the degenerate certificate: bipartite with
    one empty color class.
    """

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    coloring: TwoColoring
    k: int
    _graph: tuple = field(default=(), compare=False, repr=False)

    @classmethod
    def singleton(cls, v: int) -> "BipartiteCertificate":
        return cls(frozenset([v]), frozenset(), TwoColoring({v: RED}), 0)

    @classmethod
    def build(
        cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]], coloring: Mapping[int, int], k: int
    ) -> "BipartiteCertificate":
        vs = frozenset(vertices)
        es = frozenset(_norm(u, v) for u, v in edges)
        return cls(vs, es, TwoColoring({v: coloring[v] for v in vs}), k)

    @property
    def is_singleton(self) -> bool:
        return len(self.vertices) == 1

    def graph(self) -> tuple[Graph, list[int]]:
        """Relabelled graph of the certificate and the label map back."""
        if not self._graph:
            object.__setattr__(self, "_graph", subgraph_from_edges(self.vertices, self.edges))
        return self._graph

    def structural_errors(self) -> list[str]:
        """Cheap checks: edges inside the vertex set, coloring total and proper."""
        errs = []
        if set(self.coloring.color) != set(self.vertices):
            errs.append("coloring domain differs from vertex set")
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                errs.append(f"edge ({u}, {v}) leaves the vertex set")
                break
            if self.coloring[u] == self.coloring[v]:
                errs.append(f"edge ({u}, {v}) is monochromatic")
                break
        return errs
