"""Exhaustive backtracking search for graceful and alpha labelings of small graphs.

This is the independent ground truth the rest of the package is checked
against, so it deliberately avoids anything clever: vertices are labeled one
at a time, and a branch is cut only when an induced edge label repeats, or
by the complement symmetry ``f -> q - f``.
"""
from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass
from types import MappingProxyType
from collections.abc import Mapping

from .graph import Graph, LabeledGraph, VertexAddress, bipartition, components
from .verify import verify_alpha, verify_graceful


class Status(enum.Enum):
    FOUND = "FOUND"
    EXHAUSTED_NONE = "EXHAUSTED_NONE"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 1_000_000
    time_limit: float = 60.0  # seconds

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.time_limit <= 0:
            raise ValueError("search budget must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    labeling: Mapping[VertexAddress, int] | None
    nodes_expanded: int
    # alpha searches: largest label on the low side
    boundary: int | None = None

    def __post_init__(self) -> None:
        if (self.labeling is not None) != (self.status is Status.FOUND):
            raise ValueError("labeling must be present exactly when FOUND")


class _OutOfBudget(Exception):
    pass


def search_order(g: Graph) -> list[VertexAddress]:
    """Highest degree first, then greedily the vertex with most ordered neighbours.

    Ties fall back to degree, then to vertex order, so the order is fixed.
    """
    adj = g.adjacency
    pos = g.position
    remaining = set(g.vertices)
    placed_nbrs = {v: 0 for v in g.vertices}
    order: list[VertexAddress] = []
    while remaining:
        v = min(remaining, key=lambda x: (-placed_nbrs[x], -len(adj[x]), pos[x]))
        order.append(v)
        remaining.discard(v)
        for w in adj[v]:
            placed_nbrs[w] += 1
    return order


def _search(g: Graph, budget: SearchBudget, side: Mapping[VertexAddress, int] | None):
    q = g.q
    order = search_order(g)
    idx = {v: k for k, v in enumerate(order)}
    earlier = [[idx[w] for w in g.adjacency[v] if idx[w] < k] for k, v in enumerate(order)]
    sides = None if side is None else [side[v] for v in order]
    n = len(order)
    labels = [0] * n
    used_v = [False] * (q + 1)
    used_e = [False] * (q + 1)
    nodes = 0
    deadline = time.monotonic() + budget.time_limit
    bounds = [q, 0]  # alpha: running max of low side, min of high side

    def rec(k: int) -> bool:
        nonlocal nodes
        if k == n:
            return True
        nodes += 1
        if nodes > budget.max_nodes:
            raise _OutOfBudget
        if nodes & 0x3FF == 0 and time.monotonic() > deadline:
            raise _OutOfBudget
        nb = earlier[k]
        if sides is None:
            candidates = range(q + 1)
        elif sides[k] == 0:
            candidates = range(0, min(q, bounds[0]))
        else:
            candidates = range(max(1, bounds[1] + 1), q + 1)
        for x in candidates:
            if used_v[x]:
                continue
            # complement symmetry: the label-0 vertex precedes the label-q vertex
            if sides is None and x == q and q > 0 and not used_v[0]:
                continue
            ok = True
            new = []
            for j in nb:
                d = abs(x - labels[j])
                if used_e[d] or d == 0:
                    ok = False
                    break
                used_e[d] = True
                new.append(d)
            if ok:
                used_v[x] = True
                labels[k] = x
                saved = tuple(bounds)
                if sides is not None:
                    if sides[k] == 0:
                        bounds[1] = max(bounds[1], x)
                    else:
                        bounds[0] = min(bounds[0], x)
                if rec(k + 1):
                    return True
                bounds[0], bounds[1] = saved
                used_v[x] = False
            for d in new:
                used_e[d] = False
        return False

    # bounds[0] caps low labels (strictly below the smallest high label);
    # bounds[1] is the largest low label so far.
    if sides is not None:
        bounds[0], bounds[1] = q, -1
    try:
        found = rec(0)
    except _OutOfBudget:
        return Status.INDETERMINATE, None, nodes
    if not found:
        return Status.EXHAUSTED_NONE, None, nodes
    return Status.FOUND, {v: labels[idx[v]] for v in g.vertices}, nodes


def find_graceful(g: Graph, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    status, f, nodes = _search(g, budget, None)
    if status is Status.FOUND:
        assert verify_graceful(LabeledGraph(g, f, g.q)).ok
        f = MappingProxyType(f)
    return SearchOutcome(status, f, nodes)


def find_alpha(g: Graph, budget: SearchBudget = SearchBudget()) -> SearchOutcome:
    """Search for an alpha-labeling; non-bipartite graphs fail immediately.

    A connected graph has one bipartition up to swapping, and swapping is the
    complement symmetry, so one orientation suffices.  Disconnected graphs try
    every relative orientation of their components.
    """
    parts = bipartition(g)
    if parts is None:
        return SearchOutcome(Status.EXHAUSTED_NONE, None, 0)
    if g.q == 0:
        return SearchOutcome(Status.FOUND, MappingProxyType({v: 0 for v in g.vertices}), 0, 0)
    colour = {v: 0 for v in parts[0]}
    colour.update({v: 1 for v in parts[1]})
    comps = [c for c in components(g) if len(c) > 1]
    isolated = [c[0] for c in components(g) if len(c) == 1]
    total = 0
    indeterminate = False
    for flips in itertools.product((0, 1), repeat=max(len(comps) - 1, 0)):
        side = dict(colour)
        for comp, flip in zip(comps[1:], flips):
            for v in comp:
                side[v] ^= flip
        for v in isolated:
            side[v] = 0
        remaining = SearchBudget(max(budget.max_nodes - total, 1), budget.time_limit)
        status, f, nodes = _search(g, remaining, side)
        total += nodes
        if status is Status.FOUND:
            low = [v for v in g.vertices if side[v] == 0]
            high = [v for v in g.vertices if side[v] == 1]
            assert verify_alpha(LabeledGraph(g, f, g.q), low, high).ok
            return SearchOutcome(Status.FOUND, MappingProxyType(f), total,
                                 max(f[v] for v in low))
        if status is Status.INDETERMINATE or total >= budget.max_nodes:
            indeterminate = True
            break
    status = Status.INDETERMINATE if indeterminate else Status.EXHAUSTED_NONE
    return SearchOutcome(status, None, total)


def cross_check_enumeration(g: Graph) -> SearchOutcome:
    """Decide gracefulness by trying every injection V -> {0..q}; no pruning.

    Only for q <= 8.  Shares nothing with :func:`find_graceful` except the
    final verifier call.
    """
    q = g.q
    if q > 8:
        raise ValueError(f"enumeration is limited to q <= 8, got q={q}")
    if g.p > q + 1:
        return SearchOutcome(Status.EXHAUSTED_NONE, None, 0)
    tried = 0
    target = set(range(1, q + 1))
    for perm in itertools.permutations(range(q + 1), g.p):
        tried += 1
        f = dict(zip(g.vertices, perm))
        if {abs(f[a] - f[b]) for a, b in g.edges} == target:
            return SearchOutcome(Status.FOUND, MappingProxyType(f), tried)
    return SearchOutcome(Status.EXHAUSTED_NONE, None, tried)
