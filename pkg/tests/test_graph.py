import pytest

from graceful.graph import (
    CENTER,
    GraphError,
    LabeledGraph,
    Side,
    VertexAddress,
    addr,
    bipartition,
    cycle_graph,
    grid_graph,
    induced_edge_labels,
    new_graph,
    path_graph,
)

a, b, c, d = (addr("U", i) for i in range(1, 5))


def test_single_edge():
    g = new_graph([a, b], [(a, b)])
    assert (g.p, g.q) == (2, 1)


def test_path_on_four():
    g = new_graph([a, b, c, d], [(a, b), (b, c), (c, d)])
    assert g.q == 3
    assert g.vertices == (a, b, c, d)


@pytest.mark.parametrize("vertices, edges, match", [
    ([a], [(a, a)], "self-loop"),
    ([a, a], [], "duplicate vertex"),
    ([a, b], [(a, b), (b, a)], "duplicate edge"),
    ([a], [(a, b)], "dangling"),
])
def test_rejects_malformed(vertices, edges, match):
    with pytest.raises(GraphError, match=match):
        new_graph(vertices, edges)


def test_center_must_be_bare():
    with pytest.raises(GraphError):
        new_graph([VertexAddress(None, 1, Side.CENTER, 1)], [])
    assert new_graph([CENTER], []).p == 1


def test_construction_is_deterministic():
    g1 = grid_graph(3, 3)
    g2 = grid_graph(3, 3)
    assert g1 == g2
    assert g1.edges == g2.edges


def test_address_round_trip():
    for v in [CENTER, addr("V", 3, copy=2, branch=4), addr("U", 1, copy=0)]:
        assert VertexAddress.parse(str(v)) == v
    with pytest.raises(GraphError):
        VertexAddress.parse("1/2/X/3")


def test_induced_labels_single_edge():
    g = new_graph([a, b], [(a, b)])
    assert induced_edge_labels(LabeledGraph(g, {a: 0, b: 1})) == [1]


def test_induced_labels_c4():
    g = cycle_graph(4)
    lg = LabeledGraph(g, dict(zip(g.vertices, [0, 4, 2, 3])))
    assert induced_edge_labels(lg) == [4, 2, 1, 3]


def test_induced_labels_p4():
    g = path_graph(4)
    lg = LabeledGraph(g, dict(zip(g.vertices, [0, 3, 1, 2])))
    assert induced_edge_labels(lg) == [3, 2, 1]


def test_edge_label_count_matches_q():
    g = grid_graph(2, 4)
    lg = LabeledGraph(g, {v: k for k, v in enumerate(g.vertices)})
    assert len(induced_edge_labels(lg)) == g.q


def test_labeled_graph_requires_total_labeling():
    g = path_graph(3)
    with pytest.raises(GraphError, match="unlabeled"):
        LabeledGraph(g, {g.vertices[0]: 0})
    with pytest.raises(GraphError, match="declared q"):
        LabeledGraph(g, {v: 0 for v in g.vertices}, q=5)
    with pytest.raises(GraphError, match="nonnegative"):
        LabeledGraph(g, {v: -1 for v in g.vertices})


def test_labels_are_read_only():
    g = path_graph(2)
    lg = LabeledGraph(g, {g.vertices[0]: 0, g.vertices[1]: 1})
    with pytest.raises(TypeError):
        lg.labels[g.vertices[0]] = 5


def test_bipartition():
    assert bipartition(cycle_graph(5)) is None
    lo, hi = bipartition(grid_graph(2, 3))
    assert len(lo) == len(hi) == 3
