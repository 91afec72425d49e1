"""Immutable simple undirected graphs and the line-oriented graph format.

Format::

    # comment
    p <num_vertices> <num_edges>
    v <index> <label>          (optional, one per labelled vertex)
    e <u> <v> [<level>]        (u < v, level defaults to 0)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    ``edges`` is kept sorted with ``u < v`` in every pair, so the position of an
    edge in that tuple is a stable edge index. ``levels`` (aligned with
    ``edges``) and ``labels`` (aligned with vertices) are optional metadata.
    """

    n: int
    edges: tuple[Edge, ...]
    levels: tuple[int, ...] | None = None
    labels: tuple[str | None, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not normalised")
            if not (0 <= u and v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted")
        if self.levels is not None:
            if len(self.levels) != len(self.edges):
                raise ValueError("one level tag per edge required")
            if any(lv < 0 for lv in self.levels):
                raise ValueError("negative level tag")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label slot per vertex required")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        levels: Iterable[int] | None = None,
        labels: Sequence[str | None] | None = None,
    ) -> "Graph":
        """Build a graph from edges in any orientation and order."""
        pairs = [_norm(int(u), int(v)) for u, v in edges]
        if levels is None:
            order = sorted(range(len(pairs)), key=pairs.__getitem__)
            lv = None
        else:
            lv_in = list(levels)
            if len(lv_in) != len(pairs):
                raise ValueError("one level tag per edge required")
            order = sorted(range(len(pairs)), key=pairs.__getitem__)
            lv = tuple(lv_in[i] for i in order)
        return cls(
            n,
            tuple(pairs[i] for i in order),
            lv,
            None if labels is None else tuple(labels),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def arcs(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per vertex: (neighbour, edge index, +1 if the vertex is the low end)."""
        out: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            out[u].append((v, i, 1))
            out[v].append((u, i, -1))
        return tuple(tuple(x) for x in out)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in ws) for ws in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_index

    def level(self, u: int, v: int) -> int:
        if self.levels is None:
            return 0
        return self.levels[self.edge_index[_norm(u, v)]]

    def without_edges(self, removed: Iterable[Edge | int]) -> "Graph":
        """Copy of the graph with the given edges (pairs or indices) deleted."""
        drop = set()
        for e in removed:
            drop.add(e if isinstance(e, int) else self.edge_index[_norm(*e)])
        keep = [i for i in range(self.m) if i not in drop]
        return Graph(
            self.n,
            tuple(self.edges[i] for i in keep),
            None if self.levels is None else tuple(self.levels[i] for i in keep),
            self.labels,
        )

    def boundary(self, side: Iterable[int]) -> list[Edge]:
        """The edge set [X, X̄] for X = ``side``, sorted."""
        inside = set(side)
        return [(u, v) for u, v in self.edges if (u in inside) != (v in inside)]


@dataclass(frozen=True)
class StatsRecord:
    min_degree: int
    max_degree: int
    is_regular: bool
    regular_degree: int | None
    triangle_free: bool


def components(g: Graph, removed: Iterable[Edge] = ()) -> list[frozenset[int]]:
    """Connected components of ``g`` minus ``removed``.

    Ordered by decreasing size, then by smallest vertex.
    """
    drop = {_norm(*e) for e in removed}
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y] and (not drop or _norm(x, y) not in drop):
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(frozenset(comp))
    out.sort(key=lambda c: (-len(c), min(c)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def basic_stats(g: Graph) -> StatsRecord:
    degs = [len(a) for a in g.adj]
    lo = min(degs, default=0)
    hi = max(degs, default=0)
    masks = g.adj_mask
    triangle_free = all(not (masks[u] & masks[v]) for u, v in g.edges)
    return StatsRecord(lo, hi, lo == hi, lo if lo == hi else None, triangle_free)


def parse_graph(text: str) -> Graph:
    n = None
    declared_m = 0
    header_line = 0
    labels: dict[int, str] = {}
    edges: list[Edge] = []
    levels: list[int] = []
    any_level = False
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, _, rest = line.partition(" ")
        if kind == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            parts = rest.split()
            if len(parts) != 2:
                raise GraphFormatError("header must be 'p <vertices> <edges>'", lineno)
            try:
                n, declared_m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 0 or declared_m < 0:
                raise GraphFormatError("negative header field", lineno)
            header_line = lineno
            continue
        if n is None:
            raise GraphFormatError("missing 'p' header", lineno)
        if kind == "v":
            idx_txt, _, label = rest.strip().partition(" ")
            try:
                idx = int(idx_txt)
            except ValueError:
                raise GraphFormatError("non-integer vertex index", lineno) from None
            if not 0 <= idx < n:
                raise GraphFormatError(f"vertex index {idx} out of range", lineno)
            if idx in labels:
                raise GraphFormatError(f"vertex {idx} labelled twice", lineno)
            labels[idx] = label.strip()
        elif kind == "e":
            parts = rest.split()
            if len(parts) not in (2, 3):
                raise GraphFormatError("edge must be 'e <u> <v> [<level>]'", lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
                lv = int(parts[2]) if len(parts) == 3 else 0
            except ValueError:
                raise GraphFormatError("non-integer edge field", lineno) from None
            if len(parts) == 3:
                any_level = True
            if u == v:
                raise GraphFormatError(f"self-loop at {u}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range", lineno)
            if u > v:
                raise GraphFormatError(f"edge ({u}, {v}) requires u < v", lineno)
            if lv < 0:
                raise GraphFormatError("negative level", lineno)
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
            seen.add((u, v))
            edges.append((u, v))
            levels.append(lv)
        else:
            raise GraphFormatError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p' header")
    if len(edges) != declared_m:
        raise GraphFormatError(
            f"header declares {declared_m} edges, found {len(edges)}", header_line
        )
    label_tuple = None
    if labels:
        label_tuple = tuple(labels.get(i) for i in range(n))
    return Graph.from_edges(n, edges, levels if any_level else None, label_tuple)


def write_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    if g.labels is not None:
        lines.extend(f"v {i} {lab}" for i, lab in enumerate(g.labels) if lab is not None)
    if g.levels is None:
        lines.extend(f"e {u} {v}" for u, v in g.edges)
    else:
        lines.extend(f"e {u} {v} {lv}" for (u, v), lv in zip(g.edges, g.levels))
    return "\n".join(lines) + "\n"


def read_graph_file(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# Small named graphs used by tests, oracles and the CLI.

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_k1(leaves: int) -> Graph:
    """The star K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
