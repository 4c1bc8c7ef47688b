import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import brute
from bipconn.connectivity import is_k_connected
from bipconn.graph import BLUE, RED, BipartiteCertificate
from bipconn.merge import absorb_vertex, split_cross_edges, union_parts
from bipconn.oracle import best_bipartite_kappa
from bipconn.graph import Graph


def cycle_cert(vertices):
    vs = list(vertices)
    edges = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    return BipartiteCertificate.build(vs, edges, {v: i % 2 for i, v in enumerate(vs)}, 2)


def kab_cert(left, right, k):
    edges = [(u, v) for u in left for v in right]
    return BipartiteCertificate.build(list(left) + list(right), edges,
                                      {**{u: RED for u in left}, **{v: BLUE for v in right}}, k)


def survives_any_removal(cert, k):
    g, _ = cert.graph()
    adj = brute.adjacency(g.n, g.edges())
    return all(brute.connected_without(adj, set(s))
               for s in itertools.combinations(range(g.n), k - 1))


def test_union_k1_path():
    b1 = BipartiteCertificate.build([0, 1], [(0, 1)], {0: RED, 1: BLUE}, 1)
    b2 = BipartiteCertificate.build([2, 3], [(2, 3)], {2: RED, 3: BLUE}, 1)
    cert, _ = union_parts(b1, b2, [(1, 2)], 1)
    assert sorted(cert.edges) == [(0, 1), (1, 2), (2, 3)] and not cert.structural_errors()


def test_union_two_c4():
    cert, plan = union_parts(cycle_cert(range(4)), cycle_cert(range(4, 8)), [(0, 4), (1, 5), (2, 7)], 2)
    assert len(cert.vertices) == 8 and is_k_connected(cert.graph()[0], 2)
    assert len(plan.chosen_edges) == 2


def test_union_uses_other_group():
    b1, b2 = cycle_cert(range(4)), cycle_cert(range(4, 8))
    # (0,4): red-red; (1,6): blue-red; (2,5): red-blue -> same-color group has size 1
    cross = [(0, 4), (1, 6), (2, 5)]
    groups = split_cross_edges(b1, b2, cross)
    assert len(groups[(RED, RED)]) + len(groups[(BLUE, BLUE)]) == 1
    cert, plan = union_parts(b1, b2, cross, 2)
    assert plan.orientation == "keep" and set(plan.chosen_edges) == {(1, 6), (2, 5)}


def test_union_flips_second_when_needed():
    b1, b2 = cycle_cert(range(4)), cycle_cert(range(4, 8))
    cert, plan = union_parts(b1, b2, [(0, 4), (1, 5), (2, 7)], 2)
    assert plan.orientation == "flip-second"
    assert all(cert.coloring[v] != b2.coloring[v] for v in range(4, 8))


@pytest.mark.parametrize("cross,msg", [
    ([(0, 4), (1, 5)], "2k-1"),
    ([(0, 4), (0, 5), (1, 6)], "disjoint"),
    ([(0, 1), (2, 5), (3, 6)], "does not join"),
])
def test_union_rejects(cross, msg):
    with pytest.raises(ValueError, match=msg):
        union_parts(cycle_cert(range(4)), cycle_cert(range(4, 8)), cross, 2)


def test_absorb_k1_pendant():
    b1 = BipartiteCertificate.build([0, 1], [(0, 1)], {0: RED, 1: BLUE}, 1)
    cert, _ = absorb_vertex(b1, 2, [(2, 1)], 1)
    assert cert.coloring[2] == RED and (1, 2) in cert.edges


def test_absorb_c6():
    cert, _ = absorb_vertex(cycle_cert(range(6)), 6, [(6, 0), (6, 2), (6, 4)], 2)
    assert len(cert.vertices) == 7 and is_k_connected(cert.graph()[0], 2)


def test_absorb_k44():
    b1 = kab_cert(range(4), range(4, 8), 3)
    cert, plan = absorb_vertex(b1, 8, [(8, w) for w in (0, 1, 2, 4, 5)], 3)
    assert is_k_connected(cert.graph()[0], 3) and plan.orientation == "join-blue"


def test_absorb_tie_prefers_balance_then_red():
    # both classes have 2 neighbours; sizes 2/2 tie -> neighbours in red, v becomes blue
    cert, plan = absorb_vertex(cycle_cert(range(4)), 4, [(4, w) for w in range(4)], 2)
    assert plan.orientation == "join-blue"
    # lopsided certificate: v should join the smaller class
    b1 = kab_cert([0, 1, 2], [3, 4], 2)
    cert, plan = absorb_vertex(b1, 5, [(5, w) for w in (0, 1, 3, 4)], 2)
    assert plan.orientation == "join-blue" and plan.class_sizes == (3, 3)


def test_absorb_rejects():
    with pytest.raises(ValueError):
        absorb_vertex(cycle_cert(range(4)), 4, [(4, 0), (4, 2)], 2)
    with pytest.raises(ValueError):
        absorb_vertex(cycle_cert(range(4)), 0, [(0, 1)], 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_pigeonhole_exhaustive(k):
    m = 2 * k - 1
    for split in itertools.product(range(4), repeat=m):
        counts = np.bincount(split, minlength=4)
        assert max(counts[0] + counts[3], counts[1] + counts[2]) >= k


def random_bipartite_cert(rng, vertices, k):
    """Rejection-sample a k-connected bipartite certificate on ``vertices``."""
    while True:
        half = int(rng.integers(k, len(vertices) - k + 1))
        left, right = vertices[:half], vertices[half:]
        edges = [(u, v) for u in left for v in right if rng.random() < 0.8]
        cert = BipartiteCertificate.build(vertices, edges, {**{u: 0 for u in left}, **{v: 1 for v in right}}, k)
        if is_k_connected(cert.graph()[0], k):
            perm = rng.permutation(2)
            return BipartiteCertificate.build(vertices, edges, {v: int(perm[c]) for v, c in cert.coloring.color.items()}, k)


@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_union_property(k, seed):
    rng = np.random.default_rng(seed)
    n1 = int(rng.integers(2 * k, 2 * k + 5))
    n2 = int(rng.integers(2 * k, 2 * k + 5))
    b1 = random_bipartite_cert(rng, list(range(n1)), k)
    b2 = random_bipartite_cert(rng, list(range(n1, n1 + n2)), k)
    m = int(rng.integers(2 * k - 1, min(n1, n2) + 1))
    cross = list(zip(rng.permutation(n1)[:m].tolist(), (n1 + rng.permutation(n2)[:m]).tolist()))
    cert, _ = union_parts(b1, b2, cross, k)
    assert not cert.structural_errors() and survives_any_removal(cert, k)


@given(st.integers(1, 4), st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_absorb_property(k, seed):
    rng = np.random.default_rng(seed)
    n1 = int(rng.integers(2 * k, 13))
    b1 = random_bipartite_cert(rng, list(range(n1)), k)
    m = int(rng.integers(2 * k - 1, n1 + 1))
    nbrs = rng.permutation(n1)[:m].tolist()
    cert, _ = absorb_vertex(b1, n1, [(n1, w) for w in nbrs], k)
    assert not cert.structural_errors() and survives_any_removal(cert, k)


@pytest.mark.parametrize("seed", range(5))
def test_merge_never_beats_oracle(seed):
    rng = np.random.default_rng(seed)
    b1 = random_bipartite_cert(rng, list(range(6)), 2)
    b2 = random_bipartite_cert(rng, list(range(6, 12)), 2)
    cross = [(0, 6), (1, 7), (2, 8)]
    cert, _ = union_parts(b1, b2, cross, 2)
    host = Graph.from_edges(12, list(b1.edges | b2.edges) + cross)
    assert best_bipartite_kappa(host).best_kappa >= 2
