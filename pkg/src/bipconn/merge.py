"""Combining bipartite k-connected certificates.

Two operations: joining two certificates through ``2k - 1`` disjoint cross
edges, and attaching one outside vertex with ``2k - 1`` neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .connectivity import separator_witness
from .errors import InternalConsistencyError
from .graph import BLUE, RED, BipartiteCertificate, _norm


@dataclass(frozen=True)
class MergePlan:
    chosen_edges: tuple[tuple[int, int], ...]
    # "keep" | "flip-second" for unions, "join-red" | "join-blue" for absorbs
    orientation: str
    class_sizes: tuple[int, int] = (0, 0)


def verify_certificate(cert: BipartiteCertificate, k: int | None = None) -> None:
    """Raise InternalConsistencyError unless ``cert`` is proper and k-connected."""
    k = cert.k if k is None else k
    errs = cert.structural_errors()
    if errs:
        raise InternalConsistencyError("; ".join(errs))
    if cert.is_singleton and not cert.edges:
        return
    if k >= 1:
        g, labels = cert.graph()
        w = separator_witness(g, k)
        if w is not None:
            bad = sorted(labels[x] for x in w.vertices)
            raise InternalConsistencyError(
                f"certificate on {len(cert.vertices)} vertices is not {k}-connected "
                f"({w.reason}; separator {bad})"
            )


def split_cross_edges(b1: BipartiteCertificate, b2: BipartiteCertificate, edges):
    """Group cross edges (oriented ``b1 -> b2``) by the color pair of their ends."""
    groups: dict[tuple[int, int], list[tuple[int, int]]] = {
        (RED, RED): [], (RED, BLUE): [], (BLUE, RED): [], (BLUE, BLUE): []
    }
    for u, v in edges:
        groups[(b1.coloring[u], b2.coloring[v])].append((u, v))
    return groups


def union_parts(
    b1: BipartiteCertificate,
    b2: BipartiteCertificate,
    cross: Iterable[tuple[int, int]],
    k: int,
    verify: bool = True,
) -> tuple[BipartiteCertificate, MergePlan]:
    """Join two vertex-disjoint certificates through ``k`` of the given cross edges."""
    if b1.vertices & b2.vertices:
        raise ValueError("certificates share vertices")
    oriented = []
    for u, v in cross:
        if u in b1.vertices and v in b2.vertices:
            oriented.append((u, v))
        elif v in b1.vertices and u in b2.vertices:
            oriented.append((v, u))
        else:
            raise ValueError(f"edge ({u}, {v}) does not join the two certificates")
    ends = [x for e in oriented for x in e]
    if len(set(ends)) != len(ends):
        raise ValueError("cross edges are not pairwise vertex-disjoint")
    if len(oriented) < 2 * k - 1:
        raise ValueError(f"need at least 2k-1 = {2 * k - 1} cross edges, got {len(oriented)}")

    groups = split_cross_edges(b1, b2, oriented)
    same = groups[(RED, RED)] + groups[(BLUE, BLUE)]
    diff = groups[(RED, BLUE)] + groups[(BLUE, RED)]
    # same-colored ends need the second certificate flipped
    if len(same) > len(diff):
        pool, flip = same, True
    else:
        pool, flip = diff, False
    chosen = tuple(sorted(_norm(u, v) for u, v in pool)[:k])

    coloring = dict(b1.coloring.color)
    for v, c in b2.coloring.color.items():
        coloring[v] = 1 - c if flip else c
    cert = BipartiteCertificate.build(
        b1.vertices | b2.vertices, b1.edges | b2.edges | set(chosen), coloring, k
    )
    red = sum(1 for c in coloring.values() if c == RED)
    plan = MergePlan(chosen, "flip-second" if flip else "keep", (red, len(coloring) - red))
    if verify:
        verify_certificate(cert, k)
    return cert, plan


def absorb_vertex(
    b1: BipartiteCertificate,
    v: int,
    nbr_edges: Iterable[tuple[int, int]],
    k: int,
    verify: bool = True,
) -> tuple[BipartiteCertificate, MergePlan]:
    """Attach ``v`` to a certificate using ``k`` edges into one color class."""
    if v in b1.vertices:
        raise ValueError(f"vertex {v} already belongs to the certificate")
    nbrs = set()
    for a, b in nbr_edges:
        w = b if a == v else a if b == v else None
        if w is None:
            raise ValueError(f"edge ({a}, {b}) is not incident with {v}")
        if w not in b1.vertices:
            raise ValueError(f"edge ({a}, {b}) does not end in the certificate")
        nbrs.add(w)
    if len(nbrs) < 2 * k - 1:
        raise ValueError(f"need at least 2k-1 = {2 * k - 1} neighbours, got {len(nbrs)}")

    by_class = {RED: sorted(w for w in nbrs if b1.coloring[w] == RED),
                BLUE: sorted(w for w in nbrs if b1.coloring[w] == BLUE)}
    candidates = [c for c in (RED, BLUE) if len(by_class[c]) >= k]
    red_n = sum(1 for c in b1.coloring.color.values() if c == RED)
    sizes = {RED: red_n, BLUE: len(b1.vertices) - red_n}
    # v joins the class opposite its neighbours; prefer topping up the smaller one
    target = min(candidates, key=lambda c: (sizes[1 - c], c))
    v_color = 1 - target
    chosen = tuple(sorted(_norm(v, w) for w in by_class[target][:k]))

    coloring = dict(b1.coloring.color)
    coloring[v] = v_color
    cert = BipartiteCertificate.build(b1.vertices | {v}, b1.edges | set(chosen), coloring, k)
    sizes[v_color] += 1
    plan = MergePlan(chosen, "join-red" if v_color == RED else "join-blue", (sizes[RED], sizes[BLUE]))
    if verify:
        verify_certificate(cert, k)
    return cert, plan
