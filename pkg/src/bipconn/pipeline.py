"""Building a spanning bipartite k-connected subgraph by partition refinement.

The partition starts from singletons. Each pass first applies the two local
merge rules until neither fires (absorb a vertex with ``2k - 1`` neighbours in a
part; join two parts with ``2k - 1`` disjoint cross edges), then runs one
global round:

1. every part picks representative edges ``S_i`` to other parts;
2. every part flips its bipartition with a fair coin, and ``T_i`` keeps the
   bichromatic edges of ``S_i``; the round is redrawn until
   ``4 |T_i| >= |S_i|`` for all parts;
3. the part digraph (arc ``i -> j`` when ``T_i`` reaches part ``j``) is peeled
   until its underlying graph is k-connected;
4. the surviving parts and their remaining ``T`` edges merge into one part.

Orientation bits for round ``r``, attempt ``a`` come from
``numpy.random.default_rng([seed, r, a]).integers(0, 2, size=t)``, one bit per
part in part order, so a run is fully determined by its seed.

In ``"strict"`` mode the proven thresholds ``s`` and ``d`` are used and every
guaranteed bound is checked; a failure carries a witness. In
``"opportunistic"`` mode the thresholds are lowered to what the graph offers and
failed rounds are simply redrawn. The final certificate is verified in both
modes.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np

from .connectivity import make_witness, sampled_separator_witness, separator_witness
from .errors import InternalConsistencyError, PreconditionViolation, RetryExhausted
from .graph import BipartiteCertificate, Digraph, Graph, _norm
from .matching import RepresentativeSet, build_S, max_cut_matching
from .merge import absorb_vertex, union_parts, verify_certificate
from .peel import PeelResult, exact_fraction, peel, peel_linear, peel_log

STRICT = "strict"
OPPORTUNISTIC = "opportunistic"


@dataclass(frozen=True)
class PipelineParams:
    k: int
    n: int
    regime: str = "a"
    alpha: float | None = None
    c: float | None = None
    s: int = 0
    d: int = 0
    retry_cap: int | None = None
    seed: int = 0
    mode: str = STRICT
    feasible: bool = True
    notes: tuple[str, ...] = ()
    verify_steps: bool = True
    verification: str = "full"  # or "sampled"

    @property
    def strict(self) -> bool:
        return self.mode == STRICT

    def cap_for(self, t: int) -> int:
        if self.retry_cap is not None:
            return self.retry_cap
        return 64 * (1 + math.ceil(math.log2(t + 1)))

    def effective(self, g: Graph) -> "PipelineParams":
        """Thresholds actually used on ``g``; lowered to its min degree when opportunistic."""
        if self.strict:
            return self
        s = min(self.s, g.min_degree()) if self.s else g.min_degree()
        # 3d <= s keeps every vertex of minimum degree a type-alpha singleton at the start
        return replace(self, s=s, d=max(1, s // 3))

    def as_dict(self) -> dict:
        return {
            "k": self.k, "n": self.n, "regime": self.regime, "alpha": self.alpha, "c": self.c,
            "s": self.s, "d": self.d, "retry_cap": self.retry_cap, "seed": self.seed,
            "mode": self.mode, "feasible": self.feasible, "notes": list(self.notes),
            "verification": self.verification,
        }


def _floor_22k2_log2n(k: int, n: int) -> int:
    # floor(22 k^2 log2 n) = floor(log2(n ** (22 k^2))), exact in integers
    return (n ** (22 * k * k)).bit_length() - 1


def params_for(
    k: int,
    n: int,
    regime: str = "a",
    alpha_or_c: float | None = None,
    *,
    mode: str = STRICT,
    seed: int = 0,
    retry_cap: int | None = None,
    verify_steps: bool = True,
    verification: str = "full",
) -> PipelineParams:
    """Thresholds ``s`` and ``d = floor(s/4)`` for the three regimes (logs base 2)."""
    if mode not in (STRICT, OPPORTUNISTIC):
        raise ValueError(f"unknown mode {mode!r}")
    if verification not in ("full", "sampled"):
        raise ValueError(f"unknown verification level {verification!r}")
    if not (1 <= k and 2 * k <= n):
        raise ValueError(f"need 1 <= k <= n/2, got k={k}, n={n}")
    notes: list[str] = []
    alpha = c = None
    if regime == "a":
        s = _floor_22k2_log2n(k, n)
    elif regime == "b":
        if alpha_or_c is None or not 0 <= alpha_or_c < 1:
            raise ValueError("regime b needs 0 <= alpha < 1")
        alpha = float(alpha_or_c)
        with localcontext() as ctx:
            ctx.prec = 60
            da = Decimal(repr(alpha))
            na = Decimal(n) ** da
            expected_k = int(na.to_integral_value(rounding="ROUND_FLOOR"))
            s = int((9 * Decimal(n) ** ((1 + da) / 2)).to_integral_value(rounding="ROUND_FLOOR"))
        if k != expected_k:
            raise ValueError(f"regime b with alpha={alpha} requires k = floor(n^alpha) = {expected_k}")
    elif regime == "c":
        if alpha_or_c is None or not 0 < alpha_or_c < 0.5:
            raise ValueError("regime c needs 0 < c < 1/2")
        c = float(alpha_or_c)
        cf = exact_fraction(alpha_or_c)
        expected_k = math.floor(cf * n)
        if k != expected_k:
            raise ValueError(f"regime c with c={c} requires k = floor(cn) = {expected_k}")
        s = math.isqrt(math.floor(900 * n * n * cf))
        if cf >= Fraction(1, 900):
            notes.append("c >= 1/900: the bound 30 sqrt(c) n is at least n - 1, so it is meaningless")
    else:
        raise ValueError(f"unknown regime {regime!r}")
    if k == 1:
        notes.append("k = 1: any spanning tree works, threshold clamped to s = 1")
        s = 1
    d = s // 4
    feasible = True
    if s > n - 1:
        feasible = False
        notes.append(f"s = {s} > n - 1 = {n - 1}: no n-vertex graph is s-connected (f(k,n) <= n-1 applies)")
    if k > 1 and d < k:
        feasible = False
        notes.append(f"d = {d} < k = {k}")
    return PipelineParams(k, n, regime, alpha, c, s, d, retry_cap, seed, mode, feasible,
                          tuple(notes), verify_steps, verification)


class PartitionState:
    """Parts ``V_1..V_t`` (sorted by smallest vertex) with their certificates."""

    def __init__(self, n: int, certificates: list[BipartiteCertificate]):
        certificates = sorted(certificates, key=lambda b: min(b.vertices))
        self.n = n
        self.certificates = certificates
        self.parts = [tuple(sorted(b.vertices)) for b in certificates]
        part_of = [-1] * n
        for i, p in enumerate(self.parts):
            for v in p:
                if part_of[v] != -1:
                    raise ValueError(f"vertex {v} lies in two parts")
                part_of[v] = i
        if -1 in part_of:
            raise ValueError(f"vertex {part_of.index(-1)} lies in no part")
        self.part_of = part_of

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def t_star(self) -> int:
        return sum(1 for p in self.parts if len(p) > 1)

    def replace_parts(self, merged: list[int], cert: BipartiteCertificate) -> "PartitionState":
        gone = set(merged)
        keep = [b for i, b in enumerate(self.certificates) if i not in gone]
        return PartitionState(self.n, keep + [cert])


def init_partition(g: Graph, params: PipelineParams | None = None) -> PartitionState:
    if g.n == 0:
        raise ValueError("empty graph")
    return PartitionState(g.n, [BipartiteCertificate.singleton(v) for v in range(g.n)])


def try_rule_absorb(g: Graph, state: PartitionState, k: int, verify: bool = True) -> tuple[PartitionState, int]:
    """Absorb singletons with ``2k - 1`` neighbours in one non-singleton part.

    Scans singletons by label and, for each, parts by index. Returns the new
    state and the number of absorbed vertices.
    """
    absorbed = 0
    need = 2 * k - 1
    v = 0
    while v < g.n:
        i = state.part_of[v]
        if len(state.parts[i]) == 1:
            counts: dict[int, list[int]] = {}
            for w in g.adj[v]:
                j = state.part_of[w]
                if len(state.parts[j]) > 1:
                    counts.setdefault(j, []).append(w)
            hits = sorted(j for j, ws in counts.items() if len(ws) >= need)
            if hits:
                j = hits[0]
                cert, _ = absorb_vertex(state.certificates[j], v, [(v, w) for w in counts[j]], k, verify)
                state = state.replace_parts([i, j], cert)
                absorbed += 1
        v += 1
    return state, absorbed


def try_rule_union(g: Graph, state: PartitionState, k: int, verify: bool = True) -> tuple[PartitionState, bool]:
    """Join the lowest pair of non-singleton parts with ``2k - 1`` disjoint cross edges."""
    big = [i for i, p in enumerate(state.parts) if len(p) > 1]
    for x, i in enumerate(big):
        for j in big[x + 1:]:
            cm = max_cut_matching(g, state.parts[i], state.parts[j])
            if len(cm) >= 2 * k - 1:
                cert, _ = union_parts(state.certificates[i], state.certificates[j], cm.edges, k, verify)
                return state.replace_parts([i, j], cert), True
    return state, False


@dataclass
class MergeRound:
    S: list[RepresentativeSet]
    bits: list[int]
    coloring: list[int]
    T: list[list[tuple[int, int]]]
    attempt: int
    retries_used: int
    D: Digraph | None = None
    peel: PeelResult | None = None
    T_star: dict[int, list[tuple[int, int]]] = field(default_factory=dict)


def orientation_bits(seed: int, round_index: int, attempt: int, t: int) -> list[int]:
    rng = np.random.default_rng([seed, round_index, attempt])
    return [int(b) for b in rng.integers(0, 2, size=t)]


def representative_sets(g: Graph, state: PartitionState, params: PipelineParams) -> list[RepresentativeSet]:
    return [build_S(g, state, i, params) for i in range(state.t)]


def coloring_round(
    g: Graph,
    state: PartitionState,
    params: PipelineParams,
    round_index: int = 0,
    S: list[RepresentativeSet] | None = None,
    first_attempt: int = 0,
) -> MergeRound:
    """Draw part orientations until every ``|T_i| >= |S_i| / 4``.

    Raises RetryExhausted after ``params.cap_for(t)`` redraws.
    """
    if state.t < 2:
        raise ValueError("a coloring round needs at least two parts")
    if S is None:
        S = representative_sets(g, state, params)
    cap = params.cap_for(state.t)
    attempt = first_attempt
    while attempt <= cap:
        bits = orientation_bits(params.seed, round_index, attempt, state.t)
        coloring = [0] * g.n
        for i, cert in enumerate(state.certificates):
            b = bits[i]
            for v, col in cert.coloring.color.items():
                coloring[v] = col ^ b
        T = [[(u, v) for u, v in Si.edges if coloring[u] != coloring[v]] for Si in S]
        if all(4 * len(Ti) >= len(Si) for Ti, Si in zip(T, S)):
            return MergeRound(S, bits, coloring, T, attempt, attempt)
        attempt += 1
    raise RetryExhausted(f"no acceptable orientation in {cap + 1} draws", attempt)


def part_digraph(rnd: MergeRound, state: PartitionState) -> Digraph:
    out = []
    for i, Ti in enumerate(rnd.T):
        targets = sorted({state.part_of[v] for _, v in Ti})
        if len(targets) != len(Ti):
            raise InternalConsistencyError(f"T_{i} reaches some part twice")
        out.append(targets)
    return Digraph(state.t, out)


def mega_merge(
    g: Graph, state: PartitionState, rnd: MergeRound, params: PipelineParams
) -> tuple[PartitionState, BipartiteCertificate]:
    """Merge the parts that survived the peel through their remaining ``T`` edges."""
    if rnd.peel is None or not rnd.peel.success:
        raise ValueError("mega_merge needs a successful peel")
    alive = set(rnd.peel.survivors)
    D_prime = rnd.peel.D_prime
    vertices: set[int] = set()
    edges: set[tuple[int, int]] = set()
    rnd.T_star = {}
    for idx, i in enumerate(rnd.peel.survivors):
        ts = [(u, v) for u, v in rnd.T[i] if state.part_of[v] in alive]
        if len(ts) != D_prime.out_degree(idx):
            raise InternalConsistencyError(f"|T*_{i}| = {len(ts)} differs from its out-degree in D'")
        rnd.T_star[i] = ts
        cert = state.certificates[i]
        vertices |= cert.vertices
        edges |= cert.edges
        edges.update(_norm(u, v) for u, v in ts)
    coloring = {v: rnd.coloring[v] for v in vertices}
    cert = BipartiteCertificate.build(vertices, edges, coloring, params.k)
    dump = {"survivors": sorted(alive), "size": len(vertices), "edges": len(edges)}
    if params.strict and len(vertices) < params.d:
        raise InternalConsistencyError(f"merged part has {len(vertices)} < d = {params.d} vertices", dump)
    verify_certificate(cert, params.k)
    return state.replace_parts(sorted(alive), cert), cert


@dataclass
class PipelineResult:
    outcome: str  # success | precondition_violation | retry_exhausted | stalled | internal_error
    certificate: BipartiteCertificate | None
    params: PipelineParams
    diagnostic: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.outcome == "success"


def spanning_tree_certificate(g: Graph) -> BipartiteCertificate:
    """BFS tree from vertex 0, colored by depth parity."""
    depth = [-1] * g.n
    depth[0] = 0
    order = [0]
    edges = []
    for u in order:
        for w in g.adj[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                order.append(w)
                edges.append((u, w))
    if len(order) < g.n:
        raise PreconditionViolation("graph is disconnected", make_witness(g, frozenset()),
                                    guarantee="connected input")
    return BipartiteCertificate.build(range(g.n), edges, {v: depth[v] % 2 for v in range(g.n)}, 1)


def final_check(g: Graph, cert: BipartiteCertificate, k: int, level: str = "full", seed: int = 0) -> dict:
    """Spanning, proper and subgraph checks always; k-connectivity fully or by sampled probes."""
    spanning = cert.vertices == frozenset(range(g.n))
    proper = not cert.structural_errors()
    in_graph = all(g.has_edge(u, v) for u, v in cert.edges)
    w = None
    if spanning:
        h = cert.graph()[0]
        w = separator_witness(h, k) if level == "full" else sampled_separator_witness(h, k, seed=seed)
    return {"spanning": spanning, "proper": proper, "subgraph": in_graph,
            "kappa_checked": k, "k_connected": spanning and w is None, "level": level}


def _diag(exc: Exception) -> dict:
    out = {"message": str(exc), "error": type(exc).__name__}
    w = getattr(exc, "witness", None)
    if w is not None:
        out["witness"] = {"separator": sorted(w.vertices), "side_small": sorted(w.side_small),
                          "reason": w.reason}
    if getattr(exc, "guarantee", ""):
        out["guarantee"] = exc.guarantee
    if getattr(exc, "dump", None):
        out["dump"] = exc.dump
    return out


def run(g: Graph, params: PipelineParams) -> PipelineResult:
    """Search for a spanning bipartite k-connected subgraph of ``g``."""
    t0 = time.perf_counter()
    stats: dict = {"rounds": 0, "merges": {"absorb": 0, "union": 0, "mega": 0},
                   "retries": [], "attempts": 0, "failed_attempts": 0, "timings": {}}
    k = params.k
    if g.n != params.n:
        raise ValueError(f"params were built for n={params.n}, graph has n={g.n}")

    def finish(outcome, cert=None, diagnostic=None):
        stats["timings"]["total"] = time.perf_counter() - t0
        if cert is not None:
            check = final_check(g, cert, k, params.verification, params.seed)
            stats["verification"] = check
            if not all(check[x] for x in ("spanning", "proper", "subgraph", "k_connected")):
                return PipelineResult("internal_error", None, params,
                                      {"message": "final certificate failed verification", **check}, stats)
        return PipelineResult(outcome, cert, params, diagnostic or {}, stats)

    if k == 1:
        try:
            return finish("success", spanning_tree_certificate(g))
        except PreconditionViolation as exc:
            return finish("precondition_violation", diagnostic=_diag(exc))
    if params.strict and not params.feasible:
        return finish("precondition_violation", diagnostic={
            "message": "; ".join(params.notes), "guarantee": "s <= n - 1 and d >= k"})

    eff = params.effective(g)
    stats["effective"] = {"s": eff.s, "d": eff.d}
    verify = params.verify_steps
    state = init_partition(g, eff)
    round_index = 0
    try:
        while state.t > 1:
            while True:
                state, absorbed = try_rule_absorb(g, state, k, verify)
                stats["merges"]["absorb"] += absorbed
                state, joined = try_rule_union(g, state, k, verify)
                stats["merges"]["union"] += int(joined)
                if not absorbed and not joined:
                    break
            if state.t == 1:
                break
            stats["rounds"] += 1
            tr = time.perf_counter()
            S = representative_sets(g, state, eff)
            if not eff.strict and not any(len(Si) for Si in S):
                return finish("stalled", diagnostic={
                    "message": "no part has a representative edge; no round can make progress",
                    "parts": state.t})
            state, retries, attempts = _global_round(g, state, eff, round_index, S, stats)
            stats["retries"].append(retries)
            stats["attempts"] += attempts
            stats["timings"][f"round{round_index}"] = time.perf_counter() - tr
            round_index += 1
    except PreconditionViolation as exc:
        return finish("precondition_violation", diagnostic=_diag(exc))
    except RetryExhausted as exc:
        stats["attempts"] += exc.attempts
        return finish("retry_exhausted", diagnostic=_diag(exc))
    except InternalConsistencyError as exc:
        return finish("internal_error", diagnostic=_diag(exc))
    return finish("success", state.certificates[0])


def _global_round(g, state, params, round_index, S, stats):
    """One global merge; returns (new state, retries used, attempts made)."""
    attempt = 0
    cap = params.cap_for(state.t)
    failed = 0
    while True:
        rnd = coloring_round(g, state, params, round_index, S, first_attempt=attempt)
        rnd.D = part_digraph(rnd, state)
        try:
            if not params.strict:
                rnd.peel = peel(rnd.D, params.k, None)
            elif params.regime == "c":
                rnd.peel = peel_linear(rnd.D, params.c, params.n)
            else:
                rnd.peel = peel_log(rnd.D, params.k, params.n)
            if not rnd.peel.success:
                raise InternalConsistencyError(f"peel failed: {rnd.peel.failure}",
                                               {"removed": [sorted(w.vertices) for w in rnd.peel.removed]})
            state, _ = mega_merge(g, state, rnd, params)
        except InternalConsistencyError:
            if params.strict:
                raise
            failed += 1
            stats["failed_attempts"] += 1
            attempt = rnd.attempt + 1
            if attempt > cap:
                raise RetryExhausted(f"no successful merge in {cap + 1} draws", attempt)
            continue
        stats["merges"]["mega"] += 1
        stats.setdefault("rounds_detail", []).append({
            "t": len(rnd.S), "survivors": len(rnd.peel.survivors), "peel_steps": rnd.peel.steps,
            "min_S": min(len(x) for x in rnd.S), "min_T": min(len(x) for x in rnd.T),
        })
        return state, rnd.attempt, rnd.attempt + 1
