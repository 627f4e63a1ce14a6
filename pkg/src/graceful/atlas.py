"""Alpha-labeled base graphs: paths, 4k-cycles, complete bipartite graphs, grids.

Every base is normalised so that the low side is ``U/1..U/m`` and the high
side ``V/1..V/r``, each in ascending label order.  The compound labelers rely
on that ordering and on nothing else about the base.
"""
from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

from .graph import Graph, GraphError, LabeledGraph, VertexAddress, addr, new_graph
from .verify import Certificate, verify_alpha

log = logging.getLogger(__name__)


class AlphaBaseError(GraphError):
    def __init__(self, message: str, certificate: Certificate | None = None):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class AlphaLabeledBase:
    graph: Graph
    u_side: tuple[VertexAddress, ...]
    v_side: tuple[VertexAddress, ...]
    f0: Mapping[VertexAddress, int]
    q0: int
    name: str = "custom"
    # address -> the caller's vertex name, when the base came from outside
    origin: Mapping[VertexAddress, Hashable] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.f0, MappingProxyType):
            object.__setattr__(self, "f0", MappingProxyType(dict(self.f0)))
        if not isinstance(self.origin, MappingProxyType):
            object.__setattr__(self, "origin", MappingProxyType(dict(self.origin)))
        if self.q0 != self.graph.q or self.q0 < 1:
            raise AlphaBaseError(f"q0={self.q0} but base has {self.graph.q} edges")
        if not self.u_side or not self.v_side:
            raise AlphaBaseError("both sides of the bipartition must be nonempty")
        cert = verify_alpha(self.labeled, self.u_side, self.v_side)
        if not cert.ok:
            raise AlphaBaseError(f"base {self.name} is not alpha-labeled:\n{cert.report()}", cert)
        for side in (self.u_side, self.v_side):
            for x, y in zip(side, side[1:]):
                if self.f0[x] >= self.f0[y]:
                    raise AlphaBaseError(f"side not in ascending label order at {x}, {y}")

    @cached_property
    def labeled(self) -> LabeledGraph:
        return LabeledGraph(self.graph, self.f0, self.q0)

    @property
    def m(self) -> int:
        return len(self.u_side)

    @property
    def r(self) -> int:
        return len(self.v_side)

    @property
    def p0(self) -> int:
        return self.graph.p

    @cached_property
    def a(self) -> tuple[int, ...]:
        """Low-side labels, ascending."""
        return tuple(self.f0[u] for u in self.u_side)

    @cached_property
    def b(self) -> tuple[int, ...]:
        """High-side labels, ascending."""
        return tuple(self.f0[v] for v in self.v_side)

    def __repr__(self) -> str:
        return f"AlphaLabeledBase({self.name}, m={self.m}, r={self.r}, q0={self.q0})"


def alpha_base(vertices: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]],
               labels: Mapping[Hashable, int], low_side: Iterable[Hashable],
               name: str = "custom") -> AlphaLabeledBase:
    """Normalise an arbitrary alpha-labeled bipartite graph into an atlas base.

    Raises :class:`AlphaBaseError` carrying the certificate if the labeling
    is not an alpha-labeling for the declared sides.
    """
    names = list(vertices)
    low = set(low_side)
    unknown = low.difference(names)
    if unknown:
        raise AlphaBaseError(f"low-side vertices not in graph: {sorted(map(str, unknown))}")
    missing = [x for x in names if x not in labels]
    if missing:
        raise AlphaBaseError(f"unlabeled vertices: {missing}")
    us = sorted((x for x in names if x in low), key=lambda x: labels[x])
    vs = sorted((x for x in names if x not in low), key=lambda x: labels[x])
    to_addr = {x: addr("U", i) for i, x in enumerate(us, 1)}
    to_addr.update({x: addr("V", j) for j, x in enumerate(vs, 1)})
    try:
        graph = new_graph([to_addr[x] for x in us + vs],
                          [(to_addr[x], to_addr[y]) for x, y in edges])
    except KeyError as exc:
        raise AlphaBaseError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
    f0 = {to_addr[x]: int(labels[x]) for x in names}
    return AlphaLabeledBase(graph, tuple(to_addr[x] for x in us), tuple(to_addr[x] for x in vs),
                            f0, graph.q, name, {a: x for x, a in to_addr.items()})


def base_path(n: int) -> AlphaLabeledBase:
    """P_n with the zigzag labeling 0, q0, 1, q0-1, ... along the path."""
    if n < 2:
        raise AlphaBaseError(f"path base needs n >= 2, got {n}")
    q0 = n - 1
    labels = {k: (k // 2 if k % 2 == 0 else q0 - k // 2) for k in range(n)}
    return alpha_base(range(n), [(k, k + 1) for k in range(n - 1)], labels,
                      range(0, n, 2), f"path:{n}")


def base_cycle(n: int) -> AlphaLabeledBase:
    """C_n, n = 0 mod 4, with the classical split labeling around x_1..x_n."""
    if n < 4 or n % 4:
        raise AlphaBaseError(f"cycle base needs n >= 4 and n = 0 mod 4, got {n}")
    q0 = n
    labels = {}
    for i in range(1, n + 1):
        if i % 2:
            labels[i] = (i - 1) // 2
        elif i <= n // 2:
            labels[i] = q0 - i // 2 + 1
        else:
            labels[i] = q0 - i // 2
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    return alpha_base(range(1, n + 1), edges, labels, range(1, n + 1, 2), f"cycle:{n}")


def base_complete_bipartite(m: int, n: int) -> AlphaLabeledBase:
    """K_{m,n}: u_i -> i-1, v_j -> j*m."""
    if m < 1 or n < 1:
        raise AlphaBaseError(f"K_{{m,n}} needs m, n >= 1, got {m}, {n}")
    us = [("u", i) for i in range(1, m + 1)]
    vs = [("v", j) for j in range(1, n + 1)]
    labels = {("u", i): i - 1 for i in range(1, m + 1)}
    labels.update({("v", j): j * m for j in range(1, n + 1)})
    return alpha_base(us + vs, [(u, v) for u in us for v in vs], labels, us, f"kmn:{m},{n}")


def _grid_sweep_labels(m: int, n: int) -> dict[tuple[int, int], int]:
    # Column j gets offsets A_j (low side) and B_j (high side, counted down
    # from q0).  Within a column the cells alternate like a zigzag path, and
    # the offsets are forced by making every column's vertical edges and
    # every pair of columns' horizontal edges use a contiguous run of labels.
    q0 = 2 * m * n - m - n
    A, B = [0] * n, [0] * n
    for j in range(n - 1):
        if j % 2 == 0:
            A[j + 1], B[j + 1] = A[j] + m, B[j] + m - 1
        else:
            A[j + 1], B[j + 1] = A[j] + m - 1, B[j] + m
    return {(i, j): (A[j] + i // 2 if (i + j) % 2 == 0 else q0 - B[j] - i // 2)
            for j in range(n) for i in range(m)}


def base_grid(m: int, n: int, *, search_budget_nodes: int = 2_000_000) -> AlphaLabeledBase:
    """P_m x P_n.  Degenerate grids are paths; otherwise a column sweep labeling.

    If the sweep ever fails verification the exhaustive search is used
    instead (only attempted for m, n <= 4).
    """
    if m < 1 or n < 1 or m * n < 2:
        raise AlphaBaseError(f"grid base needs m, n >= 1 and m*n >= 2, got {m}, {n}")
    name = f"grid:{m},{n}"
    if m == 1 or n == 1:
        base = base_path(m * n)
        return AlphaLabeledBase(base.graph, base.u_side, base.v_side, base.f0, base.q0,
                                name, base.origin)
    cells = [(i, j) for j in range(n) for i in range(m)]
    edges = [((i, j), (i + 1, j)) for j in range(n) for i in range(m - 1)]
    edges += [((i, j), (i, j + 1)) for j in range(n - 1) for i in range(m)]
    low = [c for c in cells if sum(c) % 2 == 0]
    try:
        return alpha_base(cells, edges, _grid_sweep_labels(m, n), low, name)
    except AlphaBaseError as exc:
        log.warning("column sweep failed for %s, falling back to search: %s", name, exc)
    if m > 4 or n > 4:
        raise AlphaBaseError(f"no verified closed form for {name} and search is limited to 4x4")
    from .graph import grid_graph
    from .oracle import SearchBudget, Status, find_alpha

    g = grid_graph(m, n)
    out = find_alpha(g, SearchBudget(max_nodes=search_budget_nodes, time_limit=60.0))
    if out.status is not Status.FOUND:
        raise AlphaBaseError(f"search fallback for {name} ended {out.status.value}")
    f = out.labeling
    lam = out.boundary
    lows = [v for v in g.vertices if f[v] <= lam]
    return alpha_base(g.vertices, g.edges, f, lows, name)


ATLAS = {
    "path": base_path,
    "cycle": base_cycle,
    "kmn": base_complete_bipartite,
    "grid": base_grid,
}


def atlas_base(descriptor: str) -> AlphaLabeledBase:
    """Look up ``path:N``, ``cycle:N``, ``kmn:M,N`` or ``grid:M,N``."""
    kind, _, args = descriptor.partition(":")
    if kind not in ATLAS or not args:
        raise AlphaBaseError(f"unknown atlas base {descriptor!r}")
    try:
        nums = [int(x) for x in args.split(",")]
    except ValueError:
        raise AlphaBaseError(f"bad parameters in {descriptor!r}") from None
    expected = 1 if kind in ("path", "cycle") else 2
    if len(nums) != expected:
        raise AlphaBaseError(f"{kind} takes {expected} parameter(s), got {descriptor!r}")
    return ATLAS[kind](*nums)
