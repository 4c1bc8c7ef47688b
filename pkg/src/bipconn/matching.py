"""Maximum matchings across edge cuts and the per-part representative edge sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .connectivity import make_witness
from .errors import InternalConsistencyError, PreconditionViolation
from .graph import Graph

MATCHING = "matching"
STAR = "star"


def hopcroft_karp(left: Sequence[int], adj: Mapping[int, Sequence[int]]) -> tuple[dict[int, int], set[int]]:
    """Maximum matching of a bipartite graph plus a König vertex cover of equal size.

    ``adj[u]`` lists the right-side neighbours of left vertex ``u``; left and right
    labels may overlap only if the caller keeps them apart. Returns
    ``(mate_of_left, cover)``.
    """
    mate_l: dict[int, int] = {}
    mate_r: dict[int, int] = {}
    inf = float("inf")
    while True:
        dist: dict[int, float] = {}
        queue = deque()
        for u in left:
            if u not in mate_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in adj[u]:
                w = mate_r.get(v)
                if w is None:
                    if found == inf:
                        found = dist[u] + 1
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if found == inf:
            break

        def augment(root: int) -> bool:
            # iterative layered DFS; each frame is (left vertex, neighbour index)
            stack = [[root, 0]]
            path: list[tuple[int, int]] = []
            while stack:
                frame = stack[-1]
                u, i = frame
                nbrs = adj[u]
                if i >= len(nbrs):
                    dist[u] = inf
                    stack.pop()
                    if path:
                        path.pop()
                    continue
                frame[1] += 1
                v = nbrs[i]
                w = mate_r.get(v)
                if w is None:
                    if dist[u] + 1 == found:
                        path.append((u, v))
                        for a, b in path:
                            mate_l[a] = b
                            mate_r[b] = a
                        return True
                elif dist[w] == dist[u] + 1:
                    path.append((u, v))
                    stack.append([w, 0])
            return False

        for u in left:
            if u not in mate_l:
                augment(u)

    # König: alternate from free left vertices
    seen_l = set(u for u in left if u not in mate_l)
    seen_r: set[int] = set()
    queue = deque(seen_l)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen_r:
                seen_r.add(v)
                w = mate_r.get(v)
                if w is not None and w not in seen_l:
                    seen_l.add(w)
                    queue.append(w)
    cover = {u for u in left if u not in seen_l} | seen_r
    return mate_l, cover


@dataclass(frozen=True)
class CutMatching:
    part: frozenset[int]
    edges: tuple[tuple[int, int], ...]  # (inside, outside), sorted
    cover: frozenset[int]
    part_index: int | None = None

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)


def max_cut_matching(
    g: Graph, part: Iterable[int], other: Iterable[int] | None = None, part_index: int | None = None
) -> CutMatching:
    """Maximum matching of the cut between ``part`` and ``other`` (default: its complement)."""
    inside = frozenset(part)
    if not inside or len(inside) >= g.n and other is None:
        raise ValueError("part must be a non-empty proper subset of V(G)")
    outside = frozenset(other) if other is not None else frozenset(range(g.n)) - inside
    left = sorted(inside)
    adj = {u: [w for w in g.adj[u] if w in outside] for u in left}
    mate, cover = hopcroft_karp(left, adj)
    edges = tuple(sorted(mate.items()))
    if len(cover) != len(edges):
        raise InternalConsistencyError("matching and vertex cover sizes differ")
    return CutMatching(inside, edges, frozenset(cover), part_index)


@dataclass(frozen=True)
class RepresentativeSet:
    part_index: int
    edges: tuple[tuple[int, int], ...]  # (endpoint in the part, endpoint outside)
    kind: str
    singleton_type: str | None = None  # "alpha" | "beta" for singleton parts
    matching_size: int | None = None
    notes: tuple[str, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.edges)


def _one_edge_per_part(edges: Iterable[tuple[int, int]], part_of: Sequence[int]) -> list[tuple[int, int]]:
    chosen: dict[int, tuple[int, int]] = {}
    for u, v in sorted(edges, key=lambda e: (min(e), max(e))):
        chosen.setdefault(part_of[v], (u, v))
    return sorted(chosen.values())


def build_S(g: Graph, state, i: int, params) -> RepresentativeSet:
    """Representative edges ``S_i`` leaving part ``i``.

    ``state`` needs ``parts`` and ``part_of``; ``params`` needs ``regime``, ``k``,
    ``s``, ``d`` and ``strict`` (strict mode). In strict mode every
    guaranteed lower bound is checked and a violation raises
    :class:`PreconditionViolation` (with a separator witness when one exists) or
    :class:`InternalConsistencyError`.
    """
    parts, part_of = state.parts, state.part_of
    part = parts[i]
    k, s, d, regime, strict = params.k, params.s, params.d, params.regime, params.strict
    size = [len(p) for p in parts]

    if len(part) > 1:
        cm = max_cut_matching(g, part, part_index=i)
        if strict and len(cm) < d:
            x = cm.endpoints
            try:
                witness = make_witness(g, x)
            except ValueError:
                raise InternalConsistencyError(
                    f"part {i}: cut matching {len(cm)} < d={d} but its endpoints do not separate"
                ) from None
            raise PreconditionViolation(
                f"part {i}: maximum cut matching has {len(cm)} < d={d} edges; "
                f"its {len(x)} endpoints separate the graph",
                witness,
                guarantee="cut matching of a non-singleton part has at least d edges",
            )
        if regime == "a":
            edges = _one_edge_per_part(cm.edges, part_of)
            if strict and k >= 2 and len(edges) * (2 * k - 2) < len(cm):
                raise InternalConsistencyError(
                    f"part {i}: |S|={len(edges)} < |M|/(2k-2); some part receives 2k-1 matching "
                    "edges, so the union rule was not exhausted"
                )
        else:
            edges = sorted((u, v) for u, v in cm.edges if size[part_of[v]] == 1)
            if strict:
                t_star = sum(1 for z in size if z > 1)
                if len(edges) < d - (2 * k - 2) * t_star:
                    raise InternalConsistencyError(
                        f"part {i}: |S|={len(edges)} < d-(2k-2)t* = {d - (2 * k - 2) * t_star}"
                    )
        return RepresentativeSet(i, tuple(edges), MATCHING, None, len(cm))

    (v,) = part
    single_nbrs = [w for w in g.adj[v] if size[part_of[w]] == 1]
    if len(single_nbrs) >= 3 * d:
        edges = [(v, w) for w in single_nbrs[: 3 * d]]
        return RepresentativeSet(i, tuple(edges), STAR, "alpha")

    notes: tuple[str, ...] = ()
    if regime != "a":
        if strict:
            raise PreconditionViolation(
                f"singleton part {i} (vertex {v}) is of type beta under regime {regime}",
                _degree_witness(g, v, s),
                guarantee="no type-beta singletons in the polynomial and linear regimes",
            )
        notes = ("type beta outside regime a: using the regime-a star rule",)
    edges = _one_edge_per_part(((v, w) for w in g.adj[v] if size[part_of[w]] > 1), part_of)
    if strict and k >= 2 and len(edges) * (2 * k - 2) < s - 3 * d:
        witness = _degree_witness(g, v, s)
        if witness is None:
            raise InternalConsistencyError(
                f"singleton {v}: star of {len(edges)} parts is below (s-3d)/(2k-2) although "
                f"deg >= s; the absorb rule was not exhausted"
            )
        raise PreconditionViolation(
            f"vertex {v} has degree {g.degree(v)} < s={s}",
            witness,
            guarantee="every vertex has degree at least s",
        )
    return RepresentativeSet(i, tuple(edges), STAR, "beta", notes=notes)


def _degree_witness(g: Graph, v: int, s: int):
    """N(v) as a separator when deg(v) < s and some vertex lies outside N[v]."""
    if g.degree(v) >= s or g.degree(v) + 1 >= g.n:
        return None
    return make_witness(g, frozenset(g.adj[v]))
