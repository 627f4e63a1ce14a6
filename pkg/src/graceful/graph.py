"""Finite simple graphs keyed by structured vertex addresses.

Every vertex of a compound graph is named by where it lives: which branch,
which copy of the base graph, which side of the base bipartition, and its
position on that side.  Plain graphs (paths, cycles, grids) built for the
search oracle use the same address type with ``side=Side.U``.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import NamedTuple

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs or labelings."""


class Side(enum.Enum):
    U = "U"
    V = "V"
    CENTER = "C"

    # members are singletons; the default Enum hash goes through the name
    __hash__ = object.__hash__


_SIDE_ORDER = {Side.CENTER: 0, Side.U: 1, Side.V: 2}


class VertexAddress(NamedTuple):
    branch: int | None
    copy: int | None
    side: Side
    index: int

    def sort_key(self) -> tuple[int, int, int, int]:
        return (
            -1 if self.branch is None else self.branch,
            -1 if self.copy is None else self.copy,
            _SIDE_ORDER[self.side],
            self.index,
        )

    def __str__(self) -> str:
        b = "-" if self.branch is None else str(self.branch)
        c = "-" if self.copy is None else str(self.copy)
        return f"{b}/{c}/{self.side.value}/{self.index}"

    @classmethod
    def parse(cls, text: str) -> VertexAddress:
        parts = text.split("/")
        if len(parts) != 4:
            raise GraphError(f"bad vertex address {text!r}")
        b, c, s, i = parts
        try:
            return cls(
                None if b == "-" else int(b),
                None if c == "-" else int(c),
                Side(s),
                int(i),
            )
        except ValueError as exc:
            raise GraphError(f"bad vertex address {text!r}") from exc


def addr(side: Side | str, index: int, *, copy: int | None = None,
         branch: int | None = None) -> VertexAddress:
    """Shorthand constructor; ``side`` may be given as ``"U"``, ``"V"`` or ``"C"``."""
    return VertexAddress(branch, copy, Side(side), index)


CENTER = VertexAddress(None, None, Side.CENTER, 1)

Edge = tuple[VertexAddress, VertexAddress]


def _check_address(a: VertexAddress) -> None:
    if not isinstance(a, VertexAddress):
        raise GraphError(f"not a vertex address: {a!r}")
    if a.index < 1:
        raise GraphError(f"vertex index must be >= 1: {a}")
    if a.side is Side.CENTER and (a.index != 1 or a.branch is not None or a.copy is not None):
        raise GraphError(f"center vertex must be -/-/C/1, got {a}")
    if a.branch is not None and a.branch < 1:
        raise GraphError(f"branch must be positive: {a}")
    if a.copy is not None and a.copy < 0:
        raise GraphError(f"copy must be nonnegative: {a}")


@dataclass(frozen=True, eq=True)
class Graph:
    """Immutable simple undirected graph.

    Vertex order and edge order are kept exactly as given; use :func:`new_graph`
    to build one with validation.
    """

    vertices: tuple[VertexAddress, ...]
    edges: tuple[Edge, ...]

    @property
    def p(self) -> int:
        return len(self.vertices)

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def position(self) -> Mapping[VertexAddress, int]:
        return MappingProxyType({v: k for k, v in enumerate(self.vertices)})

    @cached_property
    def edge_index(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint positions as two int arrays, for vectorised label arithmetic."""
        pos = self.position
        src = np.fromiter((pos[a] for a, _ in self.edges), dtype=np.int64, count=self.q)
        dst = np.fromiter((pos[b] for _, b in self.edges), dtype=np.int64, count=self.q)
        return src, dst

    @cached_property
    def adjacency(self) -> Mapping[VertexAddress, tuple[VertexAddress, ...]]:
        adj: dict[VertexAddress, list[VertexAddress]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return MappingProxyType({v: tuple(ns) for v, ns in adj.items()})

    def degree(self, v: VertexAddress) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q})"


def new_graph(vertices: Iterable[VertexAddress], edges: Iterable[Edge]) -> Graph:
    """Validate and freeze a vertex list and edge list into a :class:`Graph`."""
    vs = tuple(vertices)
    seen: set[VertexAddress] = set()
    for v in vs:
        _check_address(v)
        if v in seen:
            raise GraphError(f"duplicate vertex address {v}")
        seen.add(v)
    es = tuple((a, b) for a, b in edges)
    pairs: set[frozenset] = set()
    for a, b in es:
        if a == b:
            raise GraphError(f"self-loop at {a}")
        for end in (a, b):
            if end not in seen:
                raise GraphError(f"edge ({a}, {b}) has dangling endpoint {end}")
        key = frozenset((a, b))
        if key in pairs:
            raise GraphError(f"duplicate edge ({a}, {b})")
        pairs.add(key)
    return Graph(vs, es)


@dataclass(frozen=True)
class LabeledGraph:
    """A graph with a total vertex labeling and its declared edge count ``q``.

    Labels must be nonnegative integers covering every vertex.  Whether they
    fall inside ``[0, q]`` is left to the verifier, which reports it.
    """

    graph: Graph
    labels: Mapping[VertexAddress, int]
    q: int = field(default=-1)

    def __post_init__(self) -> None:
        labels = self.labels
        if not isinstance(labels, MappingProxyType):
            labels = MappingProxyType(dict(labels))
            object.__setattr__(self, "labels", labels)
        q = self.graph.q if self.q == -1 else self.q
        object.__setattr__(self, "q", q)
        if q != self.graph.q:
            raise GraphError(f"declared q={q} but graph has {self.graph.q} edges")
        for v in self.graph.vertices:
            if v not in labels:
                raise GraphError(f"unlabeled vertex {v}")
        for v, x in labels.items():
            if v not in self.graph.position:
                raise GraphError(f"label given for unknown vertex {v}")
            if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or x < 0:
                raise GraphError(f"label of {v} must be a nonnegative int, got {x!r}")

    def label_array(self) -> np.ndarray:
        return np.fromiter((self.labels[v] for v in self.graph.vertices),
                           dtype=np.int64, count=self.graph.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (self.graph == other.graph and self.q == other.q
                and dict(self.labels) == dict(other.labels))

    def __hash__(self) -> int:
        return hash((self.graph, self.q, tuple(self.labels[v] for v in self.graph.vertices)))


def induced_edge_labels(lg: LabeledGraph) -> list[int]:
    """``|f(a) - f(b)|`` for every edge, in edge order (duplicates kept)."""
    f = lg.labels
    out = []
    for a, b in lg.graph.edges:
        try:
            out.append(abs(f[a] - f[b]))
        except KeyError as exc:
            raise GraphError(f"unlabeled vertex {exc.args[0]}") from None
    return out


# Plain topologies.  Vertices are U/1..U/p so the oracle and CLI can name them.

def _plain(p: int, edges: Iterable[tuple[int, int]]) -> Graph:
    vs = [addr("U", i) for i in range(1, p + 1)]
    return new_graph(vs, [(vs[a], vs[b]) for a, b in edges])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return _plain(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return _plain(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("both sides of K_{m,n} must be nonempty")
    return _plain(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def grid_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("grid dimensions must be positive")

    def k(i: int, j: int) -> int:
        return j * m + i

    edges = [(k(i, j), k(i + 1, j)) for j in range(n) for i in range(m - 1)]
    edges += [(k(i, j), k(i, j + 1)) for j in range(n - 1) for i in range(m)]
    return _plain(m * n, edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return _plain(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def from_edge_list(p: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``U/1..U/p`` from 0-based integer edge pairs."""
    return _plain(p, edges)


def bipartition(g: Graph) -> tuple[list[VertexAddress], list[VertexAddress]] | None:
    """2-colour ``g`` component by component; ``None`` if an odd cycle exists.

    Each component's first vertex (in vertex order) goes to the first class.
    """
    colour: dict[VertexAddress, int] = {}
    adj = g.adjacency
    for root in g.vertices:
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    return ([v for v in g.vertices if colour[v] == 0],
            [v for v in g.vertices if colour[v] == 1])


def components(g: Graph, edges: Iterable[Edge] | None = None) -> list[list[VertexAddress]]:
    """Connected components (vertex order within each), optionally on a subset of edges."""
    adj: dict[VertexAddress, list[VertexAddress]] = {v: [] for v in g.vertices}
    for a, b in (g.edges if edges is None else edges):
        adj[a].append(b)
        adj[b].append(a)
    seen: set[VertexAddress] = set()
    out = []
    for root in g.vertices:
        if root in seen:
            continue
        comp, stack = [], [root]
        seen.add(root)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        out.append(sorted(comp, key=g.position.__getitem__))
    return out
