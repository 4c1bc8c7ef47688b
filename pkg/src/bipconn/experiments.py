"""Seeded empirical studies: random r-colorings, local max cuts, threshold scans
and retry statistics.

Per-trial seeds are derived from ``(master_seed, *indices)`` through
``numpy.random.SeedSequence``, so tables are reproducible byte for byte. Wall
times are kept on the records but left out of tables unless asked for.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .connectivity import disjoint_paths, edge_connectivity
from .generators import gnp
from .graph import Graph, bichromatic_subgraph
from .peel import exact_fraction
from .pipeline import OPPORTUNISTIC, STRICT, params_for, run


@dataclass
class TrialRecord:
    seed: int
    descriptor: dict
    measured: dict
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self, include_time: bool = False) -> dict:
        out = {"seed": self.seed, **self.descriptor, **self.measured}
        if include_time:
            out["wall_time"] = self.wall_time
        return out


def derive_seed(master_seed: int, *indices: int) -> int:
    return int(np.random.SeedSequence([master_seed, *indices]).generate_state(1, dtype=np.uint64)[0])


def rcolor_trial(
    g: Graph, r: int, c: float, seed: int, pair: tuple[int, int] | None = None
) -> TrialRecord:
    """Color vertices uniformly with ``r`` colors and measure the bichromatic subgraph.

    With ``r >= n`` the colors are a random permutation, so every edge survives.
    Path survival is measured on a maximum family of internally disjoint paths of
    length at least two between a sampled pair.
    """
    t0 = time.perf_counter()
    n = g.n
    rng = np.random.default_rng(seed)
    colors = rng.permutation(n) if r >= n else rng.integers(0, r, size=n)
    colors = colors.tolist()
    h = bichromatic_subgraph(g, colors)
    lam = edge_connectivity(h)
    target = math.floor(exact_fraction(c) * n)
    if pair is None:
        a, b = sorted(rng.choice(n, size=2, replace=False).tolist())
    else:
        a, b = pair
    ps = disjoint_paths(g, a, b, want=None, min_length=2)
    surviving = sum(
        all(colors[p[i]] != colors[p[i + 1]] for i in range(len(p) - 1)) for p in ps.paths
    )
    return TrialRecord(
        seed,
        {"experiment": "rcolor", "n": n, "m": g.m, "r": r, "c": c, "target": target},
        {"edge_connectivity": lam, "success": lam >= target, "pair": [a, b],
         "paths": len(ps.paths), "surviving": surviving, "kept_edges": h.m},
        time.perf_counter() - t0,
    )


def local_max_cut(g: Graph, seed: int) -> list[int]:
    """Flip vertices (lowest label first) while that enlarges the cut."""
    rng = np.random.default_rng(seed)
    side = rng.integers(0, 2, size=g.n).tolist()
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            same = sum(1 for w in g.adj[v] if side[w] == side[v])
            if 2 * same > len(g.adj[v]):
                side[v] ^= 1
                changed = True
    return side


def exact_max_cut(g: Graph) -> list[int]:
    """A maximum cut by enumerating all 2^(n-1) sides with vertex 0 fixed (first maximum wins)."""
    n = g.n
    masks = np.arange(1 << max(n - 1, 0), dtype=np.int64)
    side = np.zeros((n, len(masks)), dtype=np.int8)
    for v in range(1, n):
        side[v] = (masks >> (v - 1)) & 1
    size = np.zeros(len(masks), dtype=np.int32)
    for u, v in g.edges():
        size += side[u] ^ side[v]
    return side[:, int(np.argmax(size))].tolist()


EXACT_MAX_CUT_N = 16


def maxcut_edge_conn(g: Graph, k: int, seed: int, exact: bool | None = None) -> TrialRecord:
    """Edge connectivity of a maximum cut (exact for small n) or of a local-search cut."""
    t0 = time.perf_counter()
    if exact is None:
        exact = g.n <= EXACT_MAX_CUT_N
    side = exact_max_cut(g) if exact else local_max_cut(g, seed)
    cut = bichromatic_subgraph(g, side)
    lam_g = edge_connectivity(g)
    lam_cut = edge_connectivity(cut)
    half_degree = all(2 * cut.degree(v) >= g.degree(v) for v in range(g.n))
    return TrialRecord(
        seed,
        {"experiment": "maxcut", "n": g.n, "m": g.m, "k": k, "method": "exact" if exact else "local"},
        {"edge_connectivity_G": lam_g, "hypothesis": lam_g >= 2 * k - 1, "cut_edges": cut.m,
         "edge_connectivity_cut": lam_cut, "success": lam_cut >= k, "local_max": half_degree},
        time.perf_counter() - t0,
    )


def edge_probability_for_min_degree(n: int, target: int, z: float = 4.0) -> float:
    """p with ``(n-1)p - z sd >= target``: a cheap proxy for minimum degree ``target``."""
    if target <= 0:
        return 0.5
    m = n - 1
    lo, hi = 0.0, 1.0
    for _ in range(60):
        p = (lo + hi) / 2
        if m * p - z * math.sqrt(m * p * (1 - p)) >= target:
            hi = p
        else:
            lo = p
    return min(1.0, hi)


def _graph_with_min_degree(n: int, target: int, p: float, seed: int, attempts: int) -> tuple[Graph, int]:
    for a in range(attempts):
        g = gnp(n, p, derive_seed(seed, a))
        if g.min_degree() >= target:
            return g, a
    return g, attempts


def fkn_scan(
    n_list: list[int],
    k: int,
    regime: str = "a",
    trials: int = 10,
    master_seed: int = 0,
    alpha_or_c: float | None = None,
    fraction: float = 0.9,
    attempts: int = 20,
    include_time: bool = False,
) -> tuple[list[dict], list[TrialRecord]]:
    """Success rate of the pipeline per ``n``.

    Feasible rows draw graphs with minimum degree at least ``s`` and run in strict
    mode. Rows with ``s > n - 1`` are flagged ``infeasible`` and instead run in
    opportunistic mode on graphs with minimum degree ``fraction * (n - 1)``.
    """
    rows, records = [], []
    for n in n_list:
        row = {"n": n, "k": k, "regime": regime}
        try:
            params = params_for(k, n, regime, alpha_or_c)
        except ValueError as exc:
            rows.append({**row, "flag": "invalid", "note": str(exc)})
            continue
        flag = "ok" if params.feasible else "infeasible"
        target = params.s if params.feasible else math.floor(fraction * (n - 1))
        p = edge_probability_for_min_degree(n, target)
        mode = STRICT if params.feasible else OPPORTUNISTIC
        wins, retries, times, regen = 0, [], [], 0
        for i in range(trials):
            seed = derive_seed(master_seed, n, i)
            g, extra = _graph_with_min_degree(n, target, p, seed, attempts)
            regen += extra
            res = run(g, params_for(k, n, regime, alpha_or_c, mode=mode, seed=seed))
            rec = TrialRecord(
                seed,
                {"experiment": "fkn", "n": n, "k": k, "regime": regime, "mode": mode, "s": params.s},
                {"outcome": res.outcome, "success": res.ok, "min_degree": g.min_degree(),
                 "retries": res.stats.get("retries", []), "attempts": res.stats.get("attempts", 0),
                 "failed_attempts": res.stats.get("failed_attempts", 0), "t": n},
                res.stats["timings"]["total"],
            )
            records.append(rec)
            wins += res.ok
            retries.extend(rec.measured["retries"])
            times.append(rec.wall_time)
        row.update({
            "s": params.s, "d": params.d, "flag": flag, "mode": mode, "target_min_degree": target,
            "p": round(p, 6), "trials": trials, "successes": wins, "success_rate": wins / trials,
            "mean_retries": float(np.mean(retries)) if retries else 0.0,
            "max_retries": max(retries, default=0), "regenerated": regen,
        })
        if include_time:
            row["mean_runtime"] = float(np.mean(times))
        rows.append(row)
    return rows, records


def retry_stats(records, s: int | None = None, k: int | None = None, t: int | None = None) -> dict:
    """Distribution of coloring-round redraws, with the Chernoff-style bound beside it.

    ``records`` are TrialRecords (or dicts) carrying ``retries`` (one count per
    round) and optionally ``attempts``.
    """
    per_round: list[int] = []
    attempts = 0
    for rec in records:
        m = rec.measured if isinstance(rec, TrialRecord) else rec
        rs = list(m.get("retries", []))
        per_round.extend(rs)
        attempts += m.get("attempts", sum(r + 1 for r in rs))
    rounds = len(per_round)
    failures = sum(per_round)
    hist: dict[int, int] = {}
    for r in per_round:
        hist[r] = hist.get(r, 0) + 1
    out = {
        "records": len(records), "rounds": rounds,
        "mean_retries": failures / rounds if rounds else 0.0,
        "max_retries": max(per_round, default=0),
        "histogram": {str(key): hist[key] for key in sorted(hist)},
        "draws": attempts,
        "failure_rate_per_draw": failures / attempts if attempts else 0.0,
    }
    if s is not None and k is not None:
        per_part = math.exp(-s / (64 * k))
        out["bound_per_part"] = per_part
        if t is not None:
            out["bound_union"] = min(1.0, t * per_part)
    return out


def to_csv(rows: list[dict]) -> str:
    keys: list[str] = []
    for r in rows:
        keys += [x for x in r if x not in keys]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def to_json(rows) -> str:
    return json.dumps(rows, indent=2, sort_keys=True)
