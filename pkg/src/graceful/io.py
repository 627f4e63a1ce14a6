"""Text documents for labeled graphs, base/graph descriptors, graph6 and DOT.

Document layout (one record per line, fixed order)::

    graceful-document 1
    family PATH_UNION          # or "-" for a bare labeled graph
    param n 5                  # zero or more
    base path:14
    variant <free text>
    q 69
    vertices 70
    v -/1/U/1 0                # address label
    ...
    edges 69
    e -/1/U/1 -/1/V/1 13       # endpoints, stored induced label
    ...
    certificate GRACEFUL 0     # verdict, violation count
    end
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import networkx as nx

from .atlas import AlphaBaseError, AlphaLabeledBase, alpha_base, atlas_base
from .graph import (
    Graph,
    GraphError,
    LabeledGraph,
    VertexAddress,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    from_edge_list,
    grid_graph,
    new_graph,
    path_graph,
)
from .verify import STORED_LABEL_MISMATCH, Certificate, Verdict, Violation, verify_graceful

FORMAT_VERSION = 1
MAGIC = "graceful-document"


class DocumentError(ValueError):
    """Unparseable or structurally invalid document."""


@dataclass(frozen=True)
class LabeledGraphDocument:
    family: str | None
    params: tuple[tuple[str, int], ...]
    base: str
    variant: str
    q: int
    vertices: tuple[tuple[VertexAddress, int], ...]
    edges: tuple[tuple[VertexAddress, VertexAddress, int], ...]
    verdict: str
    violations: int
    version: int = FORMAT_VERSION


def document_from_labeled(lg: LabeledGraph, cert: Certificate, *, family: str | None = None,
                          params: dict[str, int] | None = None, base: str = "-",
                          variant: str = "") -> LabeledGraphDocument:
    f = lg.labels
    return LabeledGraphDocument(
        family=family,
        params=tuple(sorted((params or {}).items())),
        base=base,
        variant=variant,
        q=lg.q,
        vertices=tuple((v, int(f[v])) for v in lg.graph.vertices),
        edges=tuple((a, b, abs(int(f[a]) - int(f[b]))) for a, b in lg.graph.edges),
        verdict=cert.verdict.value,
        violations=len(cert.violations),
    )


def document_from_report(report, base: str) -> LabeledGraphDocument:
    spec = report.compound.spec
    return document_from_labeled(report.labeled, report.certificate, family=spec.family.value,
                                 params=spec.params(), base=base,
                                 variant=report.formula_variant)


def serialize(doc: LabeledGraphDocument) -> str:
    lines = [f"{MAGIC} {doc.version}", f"family {doc.family or '-'}"]
    lines += [f"param {k} {v}" for k, v in doc.params]
    lines += [f"base {doc.base}", f"variant {doc.variant}".rstrip(), f"q {doc.q}",
              f"vertices {len(doc.vertices)}"]
    lines += [f"v {a} {x}" for a, x in doc.vertices]
    lines.append(f"edges {len(doc.edges)}")
    lines += [f"e {a} {b} {x}" for a, b, x in doc.edges]
    lines += [f"certificate {doc.verdict} {doc.violations}", "end"]
    return "\n".join(lines) + "\n"


class _Lines:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.k = 0

    def take(self, key: str) -> str:
        if self.k >= len(self.lines):
            raise DocumentError(f"unexpected end of document, expected {key!r}")
        line = self.lines[self.k]
        head, _, rest = line.partition(" ")
        if head != key:
            raise DocumentError(f"line {self.k + 1}: expected {key!r}, got {line!r}")
        self.k += 1
        return rest

    def peek(self) -> str:
        return self.lines[self.k].partition(" ")[0] if self.k < len(self.lines) else ""


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise DocumentError(f"bad {what}: {text!r}") from None


def _addr(text: str) -> VertexAddress:
    try:
        return VertexAddress.parse(text)
    except GraphError as exc:
        raise DocumentError(str(exc)) from None


def parse(text: str) -> LabeledGraphDocument:
    src = _Lines(text)
    version = _int(src.take(MAGIC), "version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {version}")
    family = src.take("family")
    params = []
    while src.peek() == "param":
        k, _, v = src.take("param").partition(" ")
        params.append((k, _int(v, f"param {k}")))
    base = src.take("base")
    variant = src.take("variant")
    q = _int(src.take("q"), "q")
    vertices = []
    for _ in range(_int(src.take("vertices"), "vertex count")):
        parts = src.take("v").split(" ")
        if len(parts) != 2:
            raise DocumentError(f"bad vertex record {parts!r}")
        vertices.append((_addr(parts[0]), _int(parts[1], "label")))
    edges = []
    for _ in range(_int(src.take("edges"), "edge count")):
        parts = src.take("e").split(" ")
        if len(parts) != 3:
            raise DocumentError(f"bad edge record {parts!r}")
        edges.append((_addr(parts[0]), _addr(parts[1]), _int(parts[2], "edge label")))
    verdict, _, nviol = src.take("certificate").partition(" ")
    if verdict not in Verdict.__members__:
        raise DocumentError(f"bad verdict {verdict!r}")
    src.take("end")
    if any(line.strip() for line in src.lines[src.k:]):
        raise DocumentError("trailing content after 'end'")
    return LabeledGraphDocument(None if family == "-" else family, tuple(params), base, variant,
                                q, tuple(vertices), tuple(edges), verdict,
                                _int(nviol, "violation count"), version)


def read_document(path: str | os.PathLike) -> LabeledGraphDocument:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_document(doc: LabeledGraphDocument, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(doc))


def labeled_graph(doc: LabeledGraphDocument) -> LabeledGraph:
    """Rebuild the labeled graph from the raw vertex labels (stored edge labels ignored)."""
    try:
        g = new_graph([a for a, _ in doc.vertices], [(a, b) for a, b, _ in doc.edges])
        return LabeledGraph(g, dict(doc.vertices), doc.q)
    except GraphError as exc:
        raise DocumentError(f"invalid graph in document: {exc}") from None


def verify_document(doc: LabeledGraphDocument) -> Certificate:
    """Recompute the certificate, adding a violation per tampered stored edge label."""
    lg = labeled_graph(doc)
    cert = verify_graceful(lg)
    f = lg.labels
    tampered = [Violation(STORED_LABEL_MISMATCH, x, (a, b)) for a, b, x in doc.edges
                if abs(f[a] - f[b]) != x]
    if not tampered:
        return cert
    return Certificate(Verdict.FAIL, cert.q, cert.violations + tuple(tampered))


# descriptors

def graph_from_graph6(code: str) -> Graph:
    try:
        nxg = nx.from_graph6_bytes(code.encode("ascii"))
    except (ValueError, IndexError, nx.NetworkXError) as exc:
        raise GraphError(f"bad graph6 string {code!r}: {exc}") from None
    return from_edge_list(nxg.number_of_nodes(), sorted(nxg.edges()))


def graph_to_graph6(g: Graph) -> str:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.p))
    pos = g.position
    nxg.add_edges_from((pos[a], pos[b]) for a, b in g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()


def _nums(args: str, count: int, desc: str) -> list[int]:
    try:
        nums = [int(x) for x in args.split(",")]
    except ValueError:
        raise GraphError(f"bad parameters in {desc!r}") from None
    if len(nums) != count:
        raise GraphError(f"{desc!r}: expected {count} parameter(s)")
    return nums


def parse_base(desc: str) -> AlphaLabeledBase:
    """Atlas name (``path:14``, ``kmn:4,3`` ...) or custom graph6 base.

    Custom form: ``g6:<graph6>:labels=l0,l1,...:low=i,j,...`` with labels in
    graph6 vertex order and ``low`` listing the 0-based vertices of the low
    side.  It must pass the alpha check.
    """
    if not desc.startswith("g6:"):
        return atlas_base(desc)
    parts = desc.split(":")
    if len(parts) != 4 or not parts[2].startswith("labels=") or not parts[3].startswith("low="):
        raise AlphaBaseError(f"custom base must be g6:<code>:labels=...:low=..., got {desc!r}")
    g = graph_from_graph6(parts[1])
    try:
        labels = [int(x) for x in parts[2][len("labels="):].split(",")]
        low = [int(x) for x in parts[3][len("low="):].split(",") if x]
    except ValueError:
        raise AlphaBaseError(f"bad labels or sides in {desc!r}") from None
    if len(labels) != g.p:
        raise AlphaBaseError(f"{g.p} vertices but {len(labels)} labels")
    pos = g.position
    edges = [(pos[a], pos[b]) for a, b in g.edges]
    base = alpha_base(range(g.p), edges, dict(enumerate(labels)), low, name=desc)
    return base


def parse_graph(desc: str) -> Graph:
    """Plain graph for searching: ``path:n``, ``cycle:n``, ``kmn:m,n``, ``grid:m,n``,
    ``complete:n``, ``g6:<code>``, ``edges:0-1,1-2,...`` or an edge-list file path."""
    kind, _, args = desc.partition(":")
    if kind == "path":
        return path_graph(*_nums(args, 1, desc))
    if kind == "cycle":
        return cycle_graph(*_nums(args, 1, desc))
    if kind == "kmn":
        return complete_bipartite_graph(*_nums(args, 2, desc))
    if kind == "grid":
        return grid_graph(*_nums(args, 2, desc))
    if kind == "complete":
        return complete_graph(*_nums(args, 1, desc))
    if kind == "g6":
        return graph_from_graph6(args)
    if kind == "edges":
        return _edge_pairs([tuple(e.split("-")) for e in args.split(",") if e], desc)
    if os.path.isfile(desc):
        with open(desc, encoding="utf-8") as fh:
            pairs = [tuple(line.split()) for line in fh if line.strip() and not line.startswith("#")]
        return _edge_pairs(pairs, desc)
    raise GraphError(f"unknown graph descriptor {desc!r}")


def _edge_pairs(pairs, desc) -> Graph:
    try:
        edges = [(int(a), int(b)) for a, b in pairs]
    except ValueError:
        raise GraphError(f"bad edge list in {desc!r}") from None
    if not edges:
        raise GraphError(f"empty edge list in {desc!r}")
    if min(min(e) for e in edges) < 0:
        raise GraphError("vertex numbers must be nonnegative")
    return from_edge_list(max(max(e) for e in edges) + 1, edges)


# DOT

def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(doc: LabeledGraphDocument) -> str:
    """Undirected DOT with vertex and edge labels, in document order."""
    title = " ".join([doc.family or "graph"] + [f"{k}={v}" for k, v in doc.params]
                     + ([f"base={doc.base}"] if doc.base != "-" else []))
    ids = {a: f"n{k}" for k, (a, _) in enumerate(doc.vertices)}
    out = [f"graph {_q(title)} {{", "  node [shape=circle];"]
    for a, x in doc.vertices:
        attrs = [f"label={_q(str(x))}", f"tooltip={_q(str(a))}"]
        if a.side.value == "C":
            attrs += ["shape=doublecircle", "style=filled", 'fillcolor="lightgrey"']
        out.append(f"  {ids[a]} [{', '.join(attrs)}];")
    for a, b, x in doc.edges:
        out.append(f"  {ids[a]} -- {ids[b]} [label={_q(str(x))}];")
    out.append("}")
    return "\n".join(out) + "\n"
