import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

import brute
from bipconn.connectivity import (
    components, disjoint_paths, edge_connectivity, is_k_connected, min_separator,
    sampled_separator_witness, separator_witness, vertex_connectivity,
)
from bipconn.generators import complete_bipartite, complete_graph, cycle_graph, gnp, path_graph, petersen_graph
from bipconn.graph import Graph, bichromatic_subgraph
from test_graph import graphs


def _separates(g, w):
    return len(components(g, w.vertices)) >= 2


def test_kappa_examples():
    assert vertex_connectivity(complete_graph(6)) == 5
    assert vertex_connectivity(cycle_graph(5)) == 2
    assert vertex_connectivity(petersen_graph()) == 3  # brute force: 3


def test_is_k_connected_examples():
    assert separator_witness(cycle_graph(5), 2) is None
    w = separator_witness(path_graph(4), 2)
    assert len(w) == 1 and next(iter(w.vertices)) in (1, 2)
    w = separator_witness(petersen_graph(), 4)
    assert len(w) == 3 and _separates(petersen_graph(), w)


def test_too_few_vertices():
    w = separator_witness(complete_graph(3), 3)
    assert w.reason == "too_few_vertices"


def test_disconnected_has_empty_separator():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert len(separator_witness(g, 1)) == 0 and vertex_connectivity(g) == 0


def test_min_separator_examples():
    assert len(min_separator(cycle_graph(6), 0, 3)) == 2
    assert len(min_separator(complete_bipartite(3, 3), 0, 1)) == 3
    with pytest.raises(ValueError):
        min_separator(cycle_graph(6), 0, 1)


def test_min_separator_g12_frozen():
    g = gnp(12, 0.5, 12)
    # exhaustive subset search gave these sizes
    for (a, b), size in {(0, 2): 3, (0, 7): 5, (0, 9): 2}.items():
        w = min_separator(g, a, b)
        assert len(w) == size and a in w.side_small and b not in w.side_small


def test_edge_connectivity_examples():
    assert edge_connectivity(complete_graph(4)) == 3
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    assert edge_connectivity(two_triangles) == 1
    assert edge_connectivity(gnp(10, 0.6, 10)) == 3  # brute force over 2^9 cuts


def test_disjoint_paths_examples():
    ps = disjoint_paths(complete_graph(5), 0, 1, want=3)
    assert len(ps.paths) == 3 and ps.cut is None
    ps = disjoint_paths(complete_graph(5), 0, 1, want=None, min_length=2)
    assert len(ps.paths) == 3 and all(len(p) >= 3 for p in ps.paths)
    ps = disjoint_paths(cycle_graph(6), 0, 3, want=2)
    assert sorted(map(tuple, ps.paths)) == [(0, 1, 2, 3), (0, 5, 4, 3)]


def test_disjoint_paths_partial_with_cut():
    ps = disjoint_paths(cycle_graph(6), 0, 3, want=3)
    assert len(ps.paths) == 2 and len(ps.cut) == 2


def test_disjoint_paths_g14():
    g = gnp(14, 0.5, 14)
    k = vertex_connectivity(g)
    assert k == 3  # brute force
    for b in range(1, 14):
        ps = disjoint_paths(g, 0, b, want=k)
        assert len(ps.paths) == ps.flow_value == k


def _check_paths(g, a, b, paths):
    inner = [v for p in paths for v in p[1:-1]]
    assert len(inner) == len(set(inner))
    for p in paths:
        assert p[0] == a and p[-1] == b
        assert all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_kappa_matches_brute_force(g):
    assert vertex_connectivity(g) == brute.kappa(g.n, g.edges())


@given(graphs(max_n=9), st.data())
@settings(max_examples=150, deadline=None)
def test_menger_equality(g, data):
    pairs = [(a, b) for a in range(g.n) for b in range(a + 1, g.n) if not g.has_edge(a, b)]
    if not pairs:
        return
    a, b = data.draw(st.sampled_from(pairs))
    sep = min_separator(g, a, b)
    ps = disjoint_paths(g, a, b)
    assert len(sep) == len(ps.paths) == brute.min_separator_size(g.n, g.edges(), a, b)
    _check_paths(g, a, b, ps.paths)
    assert b not in next(c for c in components(g, sep.vertices) if a in c)


@given(graphs(max_n=10), st.integers(1, 6))
@settings(max_examples=150, deadline=None)
def test_witness_is_valid_and_monotone(g, k):
    w = separator_witness(g, k)
    if w is None:
        assert is_k_connected(g, k - 1) if k >= 2 else True
        assert g.n > k
    elif w.reason == "separator":
        assert len(w) < k and _separates(g, w)
        assert set(w.side_small) & set(w.vertices) == set()
    else:
        assert g.n <= k


@given(graphs(max_n=10), st.data())
@settings(max_examples=80, deadline=None)
def test_bipartite_kappa_at_most_half(g, data):
    col = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    h = bichromatic_subgraph(g, col)
    assert vertex_connectivity(h) <= h.n // 2


@pytest.mark.parametrize("seed", range(8))
def test_against_networkx(seed):
    g = gnp(30, 0.3 + 0.05 * seed, seed)
    nxg = nx.Graph(g.edges())
    nxg.add_nodes_from(range(g.n))
    assert vertex_connectivity(g) == nx.node_connectivity(nxg)
    assert edge_connectivity(g) == nx.edge_connectivity(nxg)


def test_sampled_witness_exact_cases():
    assert sampled_separator_witness(complete_graph(8), 3) is None
    assert len(sampled_separator_witness(path_graph(5), 3)) <= 2
    disconnected = Graph.from_edges(8, [(i, j) for i in range(4) for j in range(i + 1, 4)]
                                    + [(i, j) for i in range(4, 8) for j in range(i + 1, 8)])
    assert len(sampled_separator_witness(disconnected, 3)) == 0
