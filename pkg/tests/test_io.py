from dataclasses import replace

import pytest

from graceful.atlas import AlphaBaseError, base_path
from graceful.graph import GraphError, LabeledGraph, cycle_graph, grid_graph, path_graph
from graceful.io import (
    DocumentError,
    document_from_labeled,
    document_from_report,
    export_dot,
    graph_from_graph6,
    graph_to_graph6,
    parse,
    parse_base,
    parse_graph,
    serialize,
    verify_document,
)
from graceful.labelers import label_open_star, label_path_union
from graceful.verify import STORED_LABEL_MISMATCH, Verdict, verify_graceful


@pytest.fixture
def doc():
    r = label_open_star(parse_base("kmn:2,2"), 2)
    return document_from_report(r, "kmn:2,2")


def test_round_trip(doc):
    text = serialize(doc)
    assert parse(text) == doc
    assert serialize(parse(text)) == text


def test_round_trip_bare_graph():
    g = path_graph(2)
    lg = LabeledGraph(g, dict(zip(g.vertices, [0, 1])))
    d = document_from_labeled(lg, verify_graceful(lg))
    assert d.family is None and parse(serialize(d)) == d


def test_header_fields(doc):
    text = serialize(doc)
    assert text.startswith("graceful-document 1\nfamily OPEN_STAR\nparam t 2\nbase kmn:2,2\n")
    assert text.endswith("certificate GRACEFUL 0\nend\n")


def test_verify_document(doc):
    assert verify_document(doc).verdict is Verdict.GRACEFUL


def test_tampered_edge_label(doc):
    a, b, x = doc.edges[0]
    bad = replace(doc, edges=((a, b, x + 1),) + doc.edges[1:])
    cert = verify_document(bad)
    assert cert.verdict is Verdict.FAIL
    assert [v.kind for v in cert.violations] == [STORED_LABEL_MISMATCH]


def test_corrupted_vertex_label(doc):
    (a, x), rest = doc.vertices[0], doc.vertices[1:]
    cert = verify_document(replace(doc, vertices=((a, x + 1),) + rest))
    assert cert.verdict is Verdict.FAIL and len(cert.violations) >= 1


@pytest.mark.parametrize("mangle", [
    lambda t: t[: len(t) // 2],
    lambda t: t.replace("graceful-document 1", "graceful-document 9"),
    lambda t: t.replace("graceful-document", "something-else"),
    lambda t: t + "v -/1/U/1 0\n",
    lambda t: t.replace("vertices ", "vertices x"),
    lambda t: t.replace("/U/1 ", "/Q/1 ", 1),
    lambda t: t.replace("certificate GRACEFUL", "certificate MAYBE"),
    lambda t: "",
])
def test_parse_errors(doc, mangle):
    with pytest.raises(DocumentError):
        parse(mangle(serialize(doc)))


def test_duplicate_vertex_in_document_is_rejected(doc):
    bad = replace(doc, vertices=doc.vertices + (doc.vertices[0],))
    with pytest.raises(DocumentError):
        verify_document(parse(serialize(bad)))


def test_graph6_round_trip():
    for g in (cycle_graph(5), grid_graph(3, 3), path_graph(2)):
        h = graph_from_graph6(graph_to_graph6(g))
        assert h.vertices == g.vertices
        assert {frozenset(e) for e in h.edges} == {frozenset(e) for e in g.edges}
    with pytest.raises(GraphError):
        graph_from_graph6("")


def test_custom_base_descriptor():
    code = graph_to_graph6(path_graph(4))
    b = parse_base(f"g6:{code}:labels=0,3,1,2:low=0,2")
    assert (b.a, b.b) == ((0, 1), (2, 3))
    with pytest.raises(AlphaBaseError):
        parse_base(f"g6:{code}:labels=0,1,2,3:low=0,2")
    with pytest.raises(AlphaBaseError):
        parse_base(f"g6:{code}:labels=0,3,1:low=0,2")
    with pytest.raises(AlphaBaseError):
        parse_base(f"g6:{code}")


def test_custom_base_labels_like_atlas():
    code = graph_to_graph6(path_graph(4))
    custom = parse_base(f"g6:{code}:labels=0,3,1,2:low=0,2")
    r1 = label_path_union(custom, 3)
    r2 = label_path_union(base_path(4), 3)
    assert dict(r1.labeled.labels) == dict(r2.labeled.labels)


def test_parse_graph(tmp_path):
    assert parse_graph("cycle:5") == cycle_graph(5)
    assert parse_graph("grid:2,3") == grid_graph(2, 3)
    assert parse_graph("kmn:2,3").q == 6
    assert parse_graph("complete:4").q == 6
    assert parse_graph("edges:0-1,1-2").q == 2
    f = tmp_path / "g.txt"
    f.write_text("# a triangle\n0 1\n1 2\n2 0\n")
    assert parse_graph(str(f)) == cycle_graph(3)
    for bad in ("nope:3", "cycle:x", "kmn:3", "edges:"):
        with pytest.raises(GraphError):
            parse_graph(bad)


def test_dot_k2():
    g = path_graph(2)
    lg = LabeledGraph(g, dict(zip(g.vertices, [0, 1])))
    dot = export_dot(document_from_labeled(lg, verify_graceful(lg)))
    assert dot.count("[label=") == 3
    assert 'n0 -- n1 [label="1"];' in dot


def test_dot_large_document_and_center(doc):
    r = label_path_union(base_path(14), 5)
    dot = export_dot(document_from_report(r, "path:14"))
    assert sum(1 for line in dot.splitlines() if "tooltip=" in line) == 70
    assert export_dot(doc).count("doublecircle") == 1
    assert export_dot(doc) == export_dot(parse(serialize(doc)))
