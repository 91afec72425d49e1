"""Unit-capacity max-flow / min-cut between contracted vertex sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Edge, Graph, components


@dataclass(frozen=True)
class CutWitness:
    cut_edges: tuple[Edge, ...]
    side: frozenset[int]
    component_sizes: tuple[int, ...]

    @classmethod
    def from_side(cls, g: Graph, side: Iterable[int]) -> "CutWitness":
        side = frozenset(side)
        cut = tuple(g.boundary(side))
        sizes = tuple(len(c) for c in components(g, cut))
        return cls(cut, side, sizes)

    @property
    def value(self) -> int:
        return len(self.cut_edges)

    def is_valid(self, g: Graph) -> bool:
        if tuple(g.boundary(self.side)) != self.cut_edges:
            return False
        return tuple(len(c) for c in components(g, self.cut_edges)) == self.component_sizes


@dataclass(frozen=True)
class Pruned:
    """The a-b flow reached ``lower_bound``; no cut value is known."""

    lower_bound: int


def _max_flow(g: Graph, source: set[int], sink: set[int], limit: int | None):
    """Augment along shortest residual paths; stop early once ``limit`` is hit.

    ``flow[e]`` is +1 when edge ``e = (u, v)`` carries flow u -> v, -1 for v -> u.
    Returns (value, flow, reached) where ``reached`` is the residual-reachable
    set from the source after the last search, or None when stopped at limit.
    """
    arcs = g.arcs
    flow = [0] * g.m
    n = g.n
    in_sink = [False] * n
    for t in sink:
        in_sink[t] = True
    stamp = [0] * n
    via_edge = [0] * n
    via_sign = [0] * n
    via_prev = [0] * n
    starts = sorted(source)
    value = 0
    rnd = 0
    while True:
        rnd += 1
        for s in starts:
            stamp[s] = rnd
            via_prev[s] = -1
        queue = deque(starts)
        hit = -1
        while queue:
            x = queue.popleft()
            for y, e, sgn in arcs[x]:
                # residual of arc x->y is 1 - sgn * flow[e]
                if stamp[y] != rnd and sgn * flow[e] < 1:
                    stamp[y] = rnd
                    via_edge[y] = e
                    via_sign[y] = sgn
                    via_prev[y] = x
                    if in_sink[y]:
                        hit = y
                        break
                    queue.append(y)
            if hit >= 0:
                break
        if hit < 0:
            return value, flow, {v for v in range(n) if stamp[v] == rnd}
        y = hit
        while via_prev[y] >= 0:
            flow[via_edge[y]] += via_sign[y]
            y = via_prev[y]
        value += 1
        if limit is not None and value >= limit:
            return value, flow, None


def min_cut_between(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    upper_bound: int | None = None,
) -> tuple[int, CutWitness] | Pruned:
    """Minimum number of edges separating every vertex of ``a`` from ``b``.

    With ``upper_bound`` set, returns :class:`Pruned` as soon as the flow
    reaches it, since the cut is then no better than the bound.
    """
    a, b = set(a), set(b)
    if not a or not b:
        raise ValueError("both vertex sets must be nonempty")
    if a & b:
        raise ValueError("vertex sets overlap")
    value, _, reached = _max_flow(g, a, b, upper_bound)
    if reached is None:
        return Pruned(value)
    return value, CutWitness.from_side(g, reached)


def edge_disjoint_paths(g: Graph, a: Iterable[int], b: Iterable[int]) -> list[list[int]]:
    """Decompose a maximum a-b flow into edge-disjoint vertex paths."""
    a, b = set(a), set(b)
    _, flow, _ = _max_flow(g, a, b, None)
    out_arcs: dict[int, list[int]] = {}
    for e, f in enumerate(flow):
        u, v = g.edges[e]
        if f == 1:
            out_arcs.setdefault(u, []).append(v)
        elif f == -1:
            out_arcs.setdefault(v, []).append(u)
    paths = []
    for s in sorted(a):
        while out_arcs.get(s):
            path = [s]
            x = s
            while True:
                x = out_arcs[x].pop()
                path.append(x)
                if x in b:
                    break
            paths.append(path)
    return paths


@dataclass(frozen=True)
class ConnectivityResult:
    value: int
    witness: CutWitness | None


def edge_connectivity(g: Graph) -> ConnectivityResult:
    """Global edge-connectivity: min over t != 0 of the 0-t min cut."""
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    comps = components(g)
    if len(comps) > 1:
        return ConnectivityResult(0, None)
    # λ ≤ δ; seed the bound with a trivial cut at a minimum-degree vertex.
    v_min = min(range(g.n), key=lambda v: (g.degree(v), v))
    best = (g.degree(v_min), CutWitness.from_side(g, {v_min}))
    for t in range(1, g.n):
        res = min_cut_between(g, {0}, {t}, upper_bound=best[0])
        if isinstance(res, Pruned):
            continue
        best = res
    return ConnectivityResult(best[0], best[1])
