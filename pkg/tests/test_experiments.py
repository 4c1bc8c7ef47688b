import json

from hypothesis import given, settings, strategies as st

from bipconn.experiments import (
    TrialRecord, derive_seed, exact_max_cut, fkn_scan, local_max_cut, maxcut_edge_conn, rcolor_trial, retry_stats,
    to_csv, to_json,
)
from bipconn.generators import complete_graph, cycle_graph, gnp
from test_graph import graphs


def test_rcolor_many_colors_keeps_everything():
    g = complete_graph(12)
    rec = rcolor_trial(g, 12, 0.2, seed=1)
    assert rec.measured["kept_edges"] == g.m and rec.measured["edge_connectivity"] == 11
    assert rec.measured["surviving"] == rec.measured["paths"]


def test_rcolor_one_color():
    rec = rcolor_trial(complete_graph(10), 1, 0.2, seed=1)
    m = rec.measured
    assert m["kept_edges"] == 0 and m["edge_connectivity"] == 0 and m["surviving"] == 0
    assert not m["success"]


def test_rcolor_target_uses_decimal_c():
    assert rcolor_trial(complete_graph(80), 4, 0.15, seed=0).descriptor["target"] == 12


@given(st.integers(1, 6), st.integers(0, 1000))
@settings(max_examples=30, deadline=None)
def test_rcolor_survival_bounded_and_deterministic(r, seed):
    g = gnp(14, 0.6, seed)
    if g.min_degree() == 0:
        return
    a = rcolor_trial(g, r, 0.1, seed)
    b = rcolor_trial(g, r, 0.1, seed)
    assert a.to_dict() == b.to_dict()
    assert a.measured["surviving"] <= a.measured["paths"]


def test_maxcut_k4():
    rec = maxcut_edge_conn(complete_graph(4), 2, seed=0)
    assert rec.measured["cut_edges"] == 4 and rec.measured["edge_connectivity_cut"] == 2


def test_maxcut_c6():
    rec = maxcut_edge_conn(cycle_graph(6), 1, seed=3)
    assert rec.descriptor["method"] == "exact"
    assert rec.measured["edge_connectivity_cut"] >= 1 and rec.measured["success"]


@given(graphs(max_n=10))
@settings(max_examples=40, deadline=None)
def test_exact_max_cut_matches_brute_force(g):
    side = exact_max_cut(g)
    size = sum(side[u] != side[v] for u, v in g.edges())
    best = max(
        sum(((mask >> u) & 1) != ((mask >> v) & 1) for u, v in g.edges()) for mask in range(1 << g.n)
    )
    assert size == best and side[0] == 0


@given(graphs(max_n=12), st.integers(0, 100))
@settings(max_examples=60, deadline=None)
def test_local_max_cut_half_degree(g, seed):
    side = local_max_cut(g, seed)
    for v in range(g.n):
        across = sum(1 for w in g.adj[v] if side[w] != side[v])
        assert 2 * across >= g.degree(v)


def test_fkn_k1_always_succeeds():
    rows, _ = fkn_scan([10, 16], 1, "a", trials=3, master_seed=2)
    assert all(r["success_rate"] == 1.0 for r in rows)


def test_fkn_flags_infeasible():
    rows, records = fkn_scan([64], 3, "a", trials=2, master_seed=0)
    assert rows[0]["flag"] == "infeasible" and rows[0]["mode"] == "opportunistic"
    assert rows[0]["s"] > 63 and len(records) == 2


def test_fkn_invalid_row():
    rows, _ = fkn_scan([100], 3, "c", trials=1, alpha_or_c=0.1)
    assert rows[0]["flag"] == "invalid"


def test_fkn_deterministic():
    a = to_json(fkn_scan([20, 24], 2, trials=3, master_seed=5)[0])
    b = to_json(fkn_scan([20, 24], 2, trials=3, master_seed=5)[0])
    assert a == b and "mean_runtime" not in a


def test_retry_stats_synthetic():
    recs = [TrialRecord(0, {}, {"retries": [0, 2], "attempts": 4}), {"retries": [1]}]
    out = retry_stats(recs, s=880, k=2, t=1024)
    assert out["rounds"] == 3 and out["mean_retries"] == 1.0 and out["max_retries"] == 2
    assert out["histogram"] == {"0": 1, "1": 1, "2": 1}
    assert out["draws"] == 6 and out["failure_rate_per_draw"] == 0.5
    assert 0 < out["bound_per_part"] < 0.01 and out["bound_union"] <= 1


def test_retry_stats_empty():
    assert retry_stats([])["mean_retries"] == 0.0


def test_derive_seed_stable():
    assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3) != derive_seed(1, 2, 4)


def test_csv_union_of_keys():
    text = to_csv([{"a": 1}, {"a": 2, "b": 3}])
    assert text.splitlines() == ["a,b", "1,", "2,3"]
    assert json.loads(to_json([{"b": 1, "a": 2}])) == [{"a": 2, "b": 1}]
