import pytest
from hypothesis import given, strategies as st

from starchi.graph import (
    Graph,
    GraphError,
    VertexSet,
    build_graph,
    complete_graph,
    cycle_graph,
    induced_subgraph,
)
from strategies import graphs


def test_build_cycle():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert g.n == 5 and g.m == 5
    assert g == cycle_graph(5)
    assert all(g.degree(v) == 2 for v in range(5))


def test_single_vertex():
    g = build_graph(1, [])
    assert (g.n, g.m) == (1, 0)


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (0, 1), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("edge", [(0, 3), (-1, 0), (2, 5)])
def test_out_of_range_endpoint_rejected(edge):
    with pytest.raises(GraphError, match=str(max(edge, key=lambda w: abs(w - 1)))):
        build_graph(3, [edge])


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop"):
        build_graph(3, [(1, 1)])


def test_asymmetric_rows_rejected():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])


def test_induced_subgraph_examples():
    sub, labels = induced_subgraph(cycle_graph(5), [1, 2, 3])
    assert labels == [1, 2, 3]
    assert sub.edges() == [(0, 1), (1, 2)]  # P_3
    empty, labels = induced_subgraph(cycle_graph(5), [])
    assert empty.n == 0 and labels == []
    k3, _ = induced_subgraph(complete_graph(5), [0, 2, 4])
    assert k3 == complete_graph(3)


def test_vertex_set_range():
    with pytest.raises(GraphError):
        VertexSet.of([5], 5)
    s = VertexSet.of([3, 1], 5)
    assert s.to_list() == [1, 3] and 3 in s and 2 not in s and len(s) == 2


@given(graphs())
def test_symmetric_and_irreflexive(g):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v)


@given(graphs(), st.data())
def test_induced_subgraph_composes(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))).map(lambda xs: sorted(x for x in xs if x < g.n)))
    t = data.draw(st.sets(st.sampled_from(s)) if s else st.just(set()))
    gs, labels_s = induced_subgraph(g, s)
    t_image = [labels_s.index(v) for v in sorted(t)]
    gst, labels_st = induced_subgraph(gs, t_image)
    gt, labels_t = induced_subgraph(g, sorted(t))
    assert gst == gt
    assert [labels_s[i] for i in labels_st] == labels_t


@given(graphs())
def test_induced_edges(g):
    s = list(range(0, g.n, 2))
    sub, labels = induced_subgraph(g, s)
    for a in range(sub.n):
        for b in range(sub.n):
            assert sub.has_edge(a, b) == g.has_edge(labels[a], labels[b])


@given(graphs())
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.m + g.complement().m == g.n * (g.n - 1) // 2
