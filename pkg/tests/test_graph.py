import pytest
from hypothesis import given, settings, strategies as st

from bipconn.generators import complete_graph, cycle_graph, petersen_graph
from bipconn.graph import (
    BLUE, RED, BipartiteCertificate, Digraph, Graph, TwoColoring, bichromatic_subgraph,
    build_graph, induced_subgraph, underlying,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.m == 2 and g.edges() == [(0, 1), (1, 2)]


def test_build_complete():
    g = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert g.is_complete() and g.m == 10


def test_duplicate_collapsed():
    assert build_graph(2, [(0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_build_rejects(edges):
    with pytest.raises(ValueError):
        build_graph(3, edges)


def test_induced_k4():
    h, labels = induced_subgraph(complete_graph(4), {0, 1, 2})
    assert h.is_complete() and h.n == 3 and labels == [0, 1, 2]


def test_induced_c5():
    h, labels = induced_subgraph(cycle_graph(5), {0, 1, 3})
    assert h.m == 1 and [(labels[u], labels[v]) for u, v in h.edges()] == [(0, 1)]


def test_induced_petersen_outer_cycle():
    h, _ = induced_subgraph(petersen_graph(), range(5))
    assert h.m == 5 and all(h.degree(v) == 2 for v in range(5))


def test_induced_empty():
    h, labels = induced_subgraph(complete_graph(3), [])
    assert h.n == 0 and labels == []


def test_underlying_two_cycle():
    assert underlying(Digraph.from_arcs(2, [(0, 1), (1, 0)])).edges() == [(0, 1)]


def test_underlying_empty_and_triangle():
    assert underlying(Digraph.from_arcs(3, [])).m == 0
    assert underlying(Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])).is_complete()


def test_bichromatic_k4():
    h = bichromatic_subgraph(complete_graph(4), [RED, RED, BLUE, BLUE])
    assert h.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_bichromatic_monochromatic():
    assert bichromatic_subgraph(petersen_graph(), [RED] * 10).m == 0


def test_bichromatic_c5_drops_closing_edge():
    h = bichromatic_subgraph(cycle_graph(5), [0, 1, 0, 1, 0])
    assert h.edges() == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_coloring_validation():
    with pytest.raises(ValueError):
        TwoColoring({0: 2})
    c = TwoColoring.from_list([0, 1, 1])
    assert c.flipped().classes() == ([1, 2], [0])


def test_singleton_certificate():
    b = BipartiteCertificate.singleton(4)
    assert b.is_singleton and b.structural_errors() == [] and b.coloring.classes() == ([4], [])


def test_certificate_structural_errors():
    b = BipartiteCertificate.build([0, 1], [(0, 1)], {0: RED, 1: RED}, 1)
    assert any("monochromatic" in e for e in b.structural_errors())


@given(st.integers(1, 8), st.data())
@settings(max_examples=60, deadline=None)
def test_underlying_edge_count(n, data):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    d = Digraph.from_arcs(n, arcs)
    two_cycles = sum(1 for u, v in arcs if u < v and (v, u) in set(arcs))
    u_graph = underlying(d)
    assert u_graph.m <= len(arcs)
    assert (u_graph.m == len(arcs)) == (two_cycles == 0)


@given(graphs(), st.data())
@settings(max_examples=80, deadline=None)
def test_bichromatic_properties(g, data):
    col = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    h = bichromatic_subgraph(g, col)
    assert all(h.degree(v) <= g.degree(v) for v in range(g.n))
    proper = all(col[u] != col[v] for u, v in g.edges())
    assert (h == g) == proper


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_induced_identity(g):
    h, labels = induced_subgraph(g, range(g.n))
    assert labels == list(range(g.n)) and h == g
