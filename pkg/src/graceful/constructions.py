"""Topology of the five compound families built from copies of an alpha base.

Copy ``l`` of the base keeps the base address ``side/index`` and gains
``copy=l`` (and ``branch=s`` for one-point unions).  Connector edges are
recorded separately from the copies, tagged by role.
"""
from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from .atlas import AlphaLabeledBase
from .graph import CENTER, Edge, Graph, GraphError, Side, VertexAddress, new_graph

INTRA_BRANCH = "intra-branch"
SPOKE = "spoke"
CYCLE_LINK = "cycle-link"


class Family(enum.Enum):
    PATH_UNION = "PATH_UNION"
    OPEN_STAR = "OPEN_STAR"
    ONE_POINT_UNION_PATH = "ONE_POINT_UNION_PATH"
    CYCLE_OF = "CYCLE_OF"
    STAR_OF = "STAR_OF"


@dataclass(frozen=True)
class ConstructionSpec:
    family: Family
    t: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        f, t, n = self.family, self.t, self.n
        need_t = f in (Family.OPEN_STAR, Family.ONE_POINT_UNION_PATH, Family.CYCLE_OF)
        need_n = f in (Family.PATH_UNION, Family.ONE_POINT_UNION_PATH)
        if need_t and (t is None or t < 1):
            raise GraphError(f"{f.value} needs a positive t, got {t}")
        if not need_t and t is not None:
            raise GraphError(f"{f.value} takes no t")
        if need_n and (n is None or n < 1):
            raise GraphError(f"{f.value} needs a positive n, got {n}")
        if not need_n and n is not None:
            raise GraphError(f"{f.value} takes no n")
        if f is Family.CYCLE_OF and t % 2:
            raise GraphError(f"CYCLE_OF needs even t, got {t}")

    def params(self) -> dict[str, int]:
        return {k: v for k, v in (("t", self.t), ("n", self.n)) if v is not None}


@dataclass(frozen=True)
class Connector:
    role: str
    a: VertexAddress
    b: VertexAddress


@dataclass(frozen=True)
class Compound:
    graph: Graph
    spec: ConstructionSpec
    base: AlphaLabeledBase
    connectors: tuple[Connector, ...]

    def copies(self) -> list[tuple[int | None, int]]:
        """``(branch, copy)`` keys of every base copy, in vertex order."""
        seen: dict[tuple[int | None, int], None] = {}
        for v in self.graph.vertices:
            if v.side is not Side.CENTER:
                seen.setdefault((v.branch, v.copy), None)
        return list(seen)


@dataclass(frozen=True)
class EndSel:
    """Picks a vertex of one copy: the first or last of its U or V side."""

    side: Side
    last: bool = False

    def resolve(self, base: AlphaLabeledBase, copy: int) -> VertexAddress:
        index = (base.m if self.side is Side.U else base.r) if self.last else 1
        return VertexAddress(None, copy, self.side, index)

    def __str__(self) -> str:
        return f"{self.side.value}_{'last' if self.last else 'first'}"


@dataclass(frozen=True)
class CycleLinks:
    """Endpoints of the midpoint link (copy t/2 to t/2+1) and the closing link (t to 1)."""

    mid: tuple[EndSel, EndSel]
    close: tuple[EndSel, EndSel]

    def __str__(self) -> str:
        return f"mid={self.mid[0]}-{self.mid[1]} close={self.close[0]}-{self.close[1]}"


def _copy(v: VertexAddress, copy: int, branch: int | None = None) -> VertexAddress:
    return VertexAddress(branch, copy, v.side, v.index)


def _copies(base: AlphaLabeledBase, keys: Sequence[tuple[int | None, int]]):
    vertices: list[VertexAddress] = []
    edges: list[Edge] = []
    for branch, copy in keys:
        vertices.extend(_copy(v, copy, branch) for v in base.graph.vertices)
        edges.extend((_copy(a, copy, branch), _copy(b, copy, branch)) for a, b in base.graph.edges)
    return vertices, edges


def _assemble(base, spec, keys, connectors, center=False) -> Compound:
    vertices, edges = _copies(base, keys)
    if center:
        vertices.insert(0, CENTER)
    edges.extend((c.a, c.b) for c in connectors)
    return Compound(new_graph(vertices, edges), spec, base, tuple(connectors))


def build_path_union(base: AlphaLabeledBase, n: int) -> Compound:
    """n copies chained by ``v_{l,1} -- u_{l+1,1}``."""
    spec = ConstructionSpec(Family.PATH_UNION, n=n)
    conns = [Connector(INTRA_BRANCH, VertexAddress(None, l, Side.V, 1),
                       VertexAddress(None, l + 1, Side.U, 1)) for l in range(1, n)]
    return _assemble(base, spec, [(None, l) for l in range(1, n + 1)], conns)


def build_open_star(base: AlphaLabeledBase, t: int) -> Compound:
    """Center joined to the last high-side vertex ``v_{l,r}`` of each of t copies."""
    spec = ConstructionSpec(Family.OPEN_STAR, t=t)
    conns = [Connector(SPOKE, CENTER, VertexAddress(None, l, Side.V, base.r))
             for l in range(1, t + 1)]
    return _assemble(base, spec, [(None, l) for l in range(1, t + 1)], conns, center=True)


def build_one_point_union_path(base: AlphaLabeledBase, t: int, n: int) -> Compound:
    """t branches of n-copy path unions, each hung from the center by ``v_{s,1,r}``."""
    spec = ConstructionSpec(Family.ONE_POINT_UNION_PATH, t=t, n=n)
    conns = []
    for s in range(1, t + 1):
        conns.extend(Connector(INTRA_BRANCH, VertexAddress(s, l, Side.V, 1),
                               VertexAddress(s, l + 1, Side.U, 1)) for l in range(1, n))
        conns.append(Connector(SPOKE, CENTER, VertexAddress(s, 1, Side.V, base.r)))
    keys = [(s, l) for s in range(1, t + 1) for l in range(1, n + 1)]
    return _assemble(base, spec, keys, conns, center=True)


def build_cycle_of(base: AlphaLabeledBase, t: int, links: CycleLinks | None = None) -> Compound:
    """t copies (t even) closed into a cycle.

    Ascending links ``v_{i,1} -- u_{i+1,1}`` run through the first half and
    ``u_{i,1} -- v_{i+1,1}`` through the second; the midpoint and closing
    link endpoints come from ``links``, by default the calibrated choice.
    """
    spec = ConstructionSpec(Family.CYCLE_OF, t=t)
    if links is None:
        from .labelers import calibrated_cycle_variant

        links = calibrated_cycle_variant().links
    h = t // 2
    conns = [Connector(CYCLE_LINK, VertexAddress(None, i, Side.V, 1),
                       VertexAddress(None, i + 1, Side.U, 1)) for i in range(1, h)]
    conns.append(Connector(CYCLE_LINK, links.mid[0].resolve(base, h),
                           links.mid[1].resolve(base, h + 1)))
    conns.extend(Connector(CYCLE_LINK, VertexAddress(None, i, Side.U, 1),
                           VertexAddress(None, i + 1, Side.V, 1)) for i in range(h + 1, t))
    # for t == 2 the closing link joins the same two copies as the midpoint link
    conns.append(Connector(CYCLE_LINK, links.close[0].resolve(base, t),
                           links.close[1].resolve(base, 1)))
    return _assemble(base, spec, [(None, l) for l in range(1, t + 1)], conns)


def build_star_of(base: AlphaLabeledBase,
                  spokes: Sequence[tuple[VertexAddress, VertexAddress]] | None = None) -> Compound:
    """Central copy 0 plus one outer copy per base vertex, one spoke each.

    ``spokes`` are ``(central vertex, outer vertex)`` pairs, one per outer
    copy in copy order; by default the labeler picks them.
    """
    if base.p0 < 2:
        raise GraphError("star of a graph needs a base with at least two vertices")
    spec = ConstructionSpec(Family.STAR_OF)
    if spokes is None:
        from .labelers import star_of_spokes

        spokes = star_of_spokes(base)
    if len(spokes) != base.p0:
        raise GraphError(f"need {base.p0} spokes, got {len(spokes)}")
    conns = []
    for l, (x, y) in enumerate(spokes, 1):
        if x.copy != 0 or y.copy != l:
            raise GraphError(f"spoke {l} must join copy 0 to copy {l}, got {x} -- {y}")
        conns.append(Connector(SPOKE, x, y))
    return _assemble(base, spec, [(None, l) for l in range(0, base.p0 + 1)], conns)


def build(base: AlphaLabeledBase, spec: ConstructionSpec) -> Compound:
    f = spec.family
    if f is Family.PATH_UNION:
        return build_path_union(base, spec.n)
    if f is Family.OPEN_STAR:
        return build_open_star(base, spec.t)
    if f is Family.ONE_POINT_UNION_PATH:
        return build_one_point_union_path(base, spec.t, spec.n)
    if f is Family.CYCLE_OF:
        return build_cycle_of(base, spec.t)
    return build_star_of(base)


def expected_edge_count(base: AlphaLabeledBase, spec: ConstructionSpec) -> int:
    q0, f = base.q0, spec.family
    if f is Family.PATH_UNION:
        return spec.n * (q0 + 1) - 1
    if f is Family.OPEN_STAR:
        return spec.t * (q0 + 1)
    if f is Family.ONE_POINT_UNION_PATH:
        return spec.t * spec.n * (q0 + 1)
    if f is Family.CYCLE_OF:
        return spec.t * (q0 + 1)
    return (base.p0 + 1) * q0 + base.p0
