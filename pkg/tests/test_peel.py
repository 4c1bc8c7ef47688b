import math

import pytest
from hypothesis import given, settings, strategies as st

from bipconn.connectivity import is_k_connected, vertex_connectivity
from bipconn.errors import PreconditionViolation
from bipconn.generators import clustered_digraph, complete_digraph, random_digraph
from bipconn.graph import Digraph, underlying
from bipconn.peel import linear_peel_constants, peel, peel_linear, peel_log


def halves(d, res):
    # the kept component is the smallest of at least two left after removing w
    sizes = [d.n] + [len(w.side_small) for w in res.removed]
    return all(2 * b <= a - len(w) for a, b, w in zip(sizes, sizes[1:], res.removed))


def check_contract(d, res):
    assert res.success, res.failure
    assert is_k_connected(underlying(res.D_prime), res.k)
    assert halves(d, res)
    assert res.steps <= math.floor(math.log2(max(d.n, 1)))
    loss = res.out_degree_loss(d)
    assert max(loss.values(), default=0) <= res.loss_bound
    if res.loss_budget is not None:
        assert res.loss_bound <= res.loss_budget


def test_already_connected():
    d = complete_digraph(5)
    res = peel(d, 3, 10)
    assert res.success and res.removed == [] and res.survivors == list(range(5))


def test_two_cliques_keeps_smaller_side():
    arcs = [(u, v) for u in range(6) for v in range(6) if u != v]
    arcs += [(u, v) for u in range(6, 12) for v in range(6, 12) if u != v] + [(0, 6)]
    d = Digraph.from_arcs(12, arcs)
    res = peel(d, 2, None)
    # the cut vertex 0 leaves {1..5} and {6..11}; the smaller side is kept
    assert res.success and res.survivors == [1, 2, 3, 4, 5]
    assert [sorted(w.vertices) for w in res.removed] == [[0]]
    assert vertex_connectivity(underlying(res.D_prime)) == 4


@pytest.mark.parametrize("seed", range(3))
def test_random_n150_k2(seed):
    d = random_digraph(150, 9, seed)  # 9 > log2 150
    res = peel_log(d, 2)
    check_contract(d, res)
    assert max(res.out_degree_loss(d).values()) <= math.log2(150)


def test_clustered_forces_peeling():
    d = clustered_digraph([40, 60, 50], 12, 0, 3)
    res = peel_log(d, 2)
    check_contract(d, res)
    assert res.survivors == list(range(40))


def test_peel_log_complete():
    d = complete_digraph(8)
    res = peel_log(d, 3, 8)
    assert res.success and res.survivors == list(range(8))


def test_peel_log_n200_k3():
    d = random_digraph(200, 25, 11)
    check_contract(d, peel_log(d, 3))


def test_peel_log_precondition():
    with pytest.raises(PreconditionViolation):
        peel_log(random_digraph(64, 5, 0), 2)  # needs out-degree > 6


def test_budget_exhausted_is_reported():
    d = clustered_digraph([20, 20], 8, 0, 1)
    res = peel(d, 2, -1)
    assert not res.success and "budget" in res.failure


def test_too_few_vertices():
    res = peel(Digraph.from_arcs(3, [(0, 1), (1, 2)]), 3, None)
    assert not res.success and "vertices" in res.failure


def test_linear_trivial_case():
    consts = linear_peel_constants(0.3, 100)
    assert consts["trivial"]
    res = peel_linear(complete_digraph(10), 0.3)
    assert res.success and any("nothing to prove" in x for x in res.notes)


def test_linear_complete():
    d = complete_digraph(40)
    res = peel_linear(d, 0.05)
    assert res.success and res.survivors == list(range(40))


def test_linear_n300_c002():
    consts = linear_peel_constants(0.02, 300)
    assert consts["k"] == 6 and consts["budget"] == 67 and consts["step_bound"] == 9
    d = random_digraph(300, math.ceil(consts["min_out_degree"]), 5)
    res = peel_linear(d, 0.02)
    check_contract(d, res)
    assert is_k_connected(underlying(res.D_prime), 6)


def test_linear_precondition():
    with pytest.raises(PreconditionViolation):
        peel_linear(random_digraph(300, 20, 0), 0.02)


@given(st.lists(st.integers(3, 12), min_size=1, max_size=4), st.integers(0, 3), st.integers(1, 3),
       st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_peel_invariants(sizes, cross, k, seed):
    d = clustered_digraph(sizes, 4, cross, seed)
    res = peel(d, k, None)
    assert halves(d, res)
    assert all(len(w) <= k - 1 for w in res.removed)
    assert res.loss_bound == sum(len(w) for w in res.removed)
    if res.success:
        assert is_k_connected(underlying(res.D_prime), k)
        assert max(res.out_degree_loss(d).values()) <= res.loss_bound
