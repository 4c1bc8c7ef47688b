"""Exhaustive ground truth for small graphs.

Every spanning bipartite subgraph sits inside the bichromatic subgraph of some
2-coloring, and adding edges never lowers connectivity, so the best
connectivity of a spanning bipartite subgraph is a maximum over colorings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .connectivity import is_k_connected, separator_witness, vertex_connectivity
from .generators import complete_graph, cycle_graph, even_witness, gnp, odd_cycle_witness
from .graph import Graph, TwoColoring, bichromatic_subgraph
from .span2 import span2connected

__all__ = [
    "OracleVerdict", "best_bipartite_kappa", "has_spanning_bipartite_k",
    "odd_cycle_witness", "even_witness", "verify_f2_small",
]

MAX_ORACLE_N = 22


@dataclass(frozen=True)
class OracleVerdict:
    best_kappa: int
    argmax_coloring: TwoColoring
    colorings_checked: int


def _colorings(n: int):
    # vertex 0 stays red; swapping colors leaves the bichromatic subgraph unchanged
    for mask in range(1 << max(n - 1, 0)):
        yield [0] + [(mask >> i) & 1 for i in range(n - 1)]


def _check_size(g: Graph, override: bool) -> None:
    if g.n > MAX_ORACLE_N and not override:
        raise ValueError(f"oracle enumerates 2^(n-1) colorings; n={g.n} exceeds {MAX_ORACLE_N}")


def best_bipartite_kappa(g: Graph, override: bool = False) -> OracleVerdict:
    """Largest kappa over spanning bipartite subgraphs, with a coloring attaining it."""
    _check_size(g, override)
    if g.n == 0:
        raise ValueError("empty graph")
    cap = g.n // 2
    best, arg, checked = 0, [0] * g.n, 0
    for col in _colorings(g.n):
        checked += 1
        h = bichromatic_subgraph(g, col)
        # kappa <= min degree, so only a coloring beating the current best needs a flow check
        if h.min_degree() <= best or not is_k_connected(h, best + 1):
            continue
        best, arg = vertex_connectivity(h), col
        if best >= cap:
            break
    return OracleVerdict(best, TwoColoring.from_list(arg), checked)


def has_spanning_bipartite_k(g: Graph, k: int, override: bool = False) -> bool:
    _check_size(g, override)
    if k <= 0:
        return True
    for col in _colorings(g.n):
        h = bichromatic_subgraph(g, col)
        if h.min_degree() >= k and is_k_connected(h, k):
            return True
    return False


def _three_connected_sample(count: int, seed: int, n_range=(6, 12)) -> list[Graph]:
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(0.4, 0.9))
        g = gnp(n, p, rng)
        if is_k_connected(g, 3):
            out.append(g)
    return out


def verify_f2_small(seed: int = 0, samples: int = 30) -> dict:
    """Check f(2,4) = 2 and f(2,n) = 3 on small cases.

    Lower side: the odd-cycle and cycle-plus-apex witnesses for n = 5..11 are
    2-connected but have no spanning bipartite 2-connected subgraph. n = 4: every
    2-connected labelled graph on 4 vertices has one. Upper side: the ear
    construction succeeds on sampled 3-connected graphs and agrees with the oracle.
    """
    lower = []
    for n in range(5, 12):
        g = odd_cycle_witness(n) if n % 2 else even_witness(n)
        lower.append({
            "n": n, "two_connected": is_k_connected(g, 2),
            "best_kappa": best_bipartite_kappa(g).best_kappa,
        })
    pairs = list(itertools.combinations(range(4), 2))
    four = {"graphs": 0, "two_connected": 0, "passed": 0}
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(4, [e for i, e in enumerate(pairs) if mask >> i & 1])
        four["graphs"] += 1
        if is_k_connected(g, 2):
            four["two_connected"] += 1
            four["passed"] += int(best_bipartite_kappa(g).best_kappa >= 2)
    upper = []
    for g in _three_connected_sample(samples, seed):
        cert, _ = span2connected(g)
        h, _ = cert.graph()
        upper.append({
            "n": g.n, "m": g.m, "span2_ok": separator_witness(h, 2) is None and len(cert.vertices) == g.n,
            "oracle_best": best_bipartite_kappa(g).best_kappa,
        })
    ok = (
        all(r["two_connected"] and r["best_kappa"] <= 1 for r in lower)
        and four["passed"] == four["two_connected"]
        and all(r["span2_ok"] and r["oracle_best"] >= 2 for r in upper)
    )
    return {"lower": lower, "n4": four, "upper": upper, "ok": ok,
            "sanity": {"C5_k2": has_spanning_bipartite_k(cycle_graph(5), 2),
                       "K4_k2": has_spanning_bipartite_k(complete_graph(4), 2)}}
