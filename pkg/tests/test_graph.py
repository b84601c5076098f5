import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, graphs, graphs_with_set
from oracles import reference_graph6
from p3iso.constructions import build_cycle
from p3iso.graph import Graph, GraphError, members, parse_graph6, to_graph6, vset

K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def test_from_edges_basic():
    assert K3.edges() == [(0, 1), (0, 2), (1, 2)]
    assert P3.edges() == [(0, 1), (1, 2)]
    k1 = Graph.from_edges(1, [])
    assert k1.n == 1 and k1.num_edges == 0


def test_duplicate_edges_collapse():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g == P3


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edges_rejects(edges):
    with pytest.raises(GraphError):
        Graph.from_edges(3, edges)


def test_constructor_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_degrees():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert g.degrees() == [3, 1, 1, 1]
    assert g.max_degree == 3 and g.min_degree == 1


def test_closed_neighborhood_examples():
    assert members(K3.closed_neighborhood(vset([0]))) == [0, 1, 2]
    assert members(P3.closed_neighborhood(vset([0]))) == [0, 1]
    assert K3.closed_neighborhood(0) == 0


def test_delete_closed_neighborhood():
    assert P3.delete_closed_neighborhood(vset([1])).graph.n == 0
    res = build_cycle(7).delete_closed_neighborhood(vset([0]))
    assert res.old_label == (2, 3, 4, 5)
    assert res.graph.edges() == [(0, 1), (1, 2), (2, 3)]
    same = K3.delete_closed_neighborhood(0)
    assert same.graph == K3 and same.old_label == (0, 1, 2)


def test_components():
    assert [c.graph for c in K3.components()] == [K3]
    two = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    parts = two.components()
    assert [c.old_label for c in parts] == [(0, 1, 2), (3, 4, 5)]
    assert all(c.graph == K3 for c in parts)
    assert Graph.empty(0).components() == []


def test_components_ordered_by_smallest_label():
    g = Graph.from_edges(5, [(1, 4), (0, 3), (2, 3)])
    assert [c.old_label for c in g.components()] == [(0, 2, 3), (1, 4)]


@given(graphs_with_set())
def test_closed_neighborhood_contains_and_monotone(gx):
    g, x = gx
    nx_ = g.closed_neighborhood(x)
    assert nx_ & x == x
    for v in range(g.n):
        assert g.closed_neighborhood(x | 1 << v) & nx_ == nx_


@given(graphs())
def test_components_partition_vertices(g):
    parts = g.components()
    seen = [v for p in parts for v in p.old_label]
    assert sorted(seen) == list(range(g.n))
    assert all(p.graph.is_connected() for p in parts)
    assert sum(p.graph.num_edges for p in parts) == g.num_edges


@given(graphs_with_set())
def test_deletion_preserves_adjacency(gx):
    g, x = gx
    res = g.delete(x)
    for i, u in enumerate(res.old_label):
        for j, v in enumerate(res.old_label):
            assert res.graph.has_edge(i, j) == g.has_edge(u, v)
    assert res.lift(res.graph.vertices) == g.vertices & ~x
    assert res.lower(g.vertices) == res.graph.vertices


def test_graph6_examples():
    assert parse_graph6("Bw") == K3
    assert parse_graph6("Bg") == P3
    assert to_graph6(K3) == "Bw"
    assert to_graph6(Graph.empty(0)) == "?"


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B!", "Bx"])
def test_graph6_rejects(bad):
    with pytest.raises(GraphError):
        parse_graph6(bad)


@given(graphs(max_n=14))
def test_graph6_matches_reference_encoder(g):
    assert to_graph6(g) == reference_graph6(g)
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_long_form_roundtrip():
    g = Graph.from_edges(70, [(i, i + 1) for i in range(69)])
    s = to_graph6(g)
    assert s.startswith("~")
    assert s == reference_graph6(g)
    assert parse_graph6(s) == g


@pytest.mark.parametrize("n", range(1, 9))
def test_graph6_roundtrip_enumerated(n):
    for g in connected_graphs(n):
        s = to_graph6(g)
        assert to_graph6(parse_graph6(s)) == s


@given(st.text(alphabet="?@ABCDEFGHIJKLMNOPQRSTUVWXYZ[]^_`abcdefghijklmnopqrstuvwxyz{|}", min_size=1, max_size=12))
def test_graph6_parse_never_crashes_unexpectedly(text):
    try:
        g = parse_graph6(text)
    except GraphError:
        return
    assert to_graph6(g) == text
