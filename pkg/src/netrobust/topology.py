"""DCell D_{k,n}, (n',k')-star graphs S_{n',k'} and the D_{1,n} -> S_{n+1,2} map."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graph import Graph, complete_graph

DEFAULT_VERTEX_CAP = 100_000


def size_t(k: int, n: int) -> int:
    """Number of vertices of D_{k,n}: t_0 = n, t_k = t_{k-1} (t_{k-1} + 1)."""
    if n < 2:
        raise ValueError("DCell base n must be at least 2")
    if k < 0:
        raise ValueError("DCell level k must be non-negative")
    t = n
    for _ in range(k):
        t = t * (t + 1)
    return t


def uid(suffix: Sequence[int], j: int, n: int) -> int:
    """uid_j of a label suffix ``(a_j, ..., a_0)``."""
    if len(suffix) != j + 1:
        raise ValueError(f"uid_{j} needs {j + 1} digits, got {len(suffix)}")
    digits = list(reversed(suffix))  # digits[l] = a_l
    if not 0 <= digits[0] < n:
        raise ValueError(f"a_0 = {digits[0]} outside [0, {n})")
    value = digits[0]
    for l in range(1, j + 1):
        t_prev = size_t(l - 1, n)
        if not 0 <= digits[l] <= t_prev:
            raise ValueError(f"a_{l} = {digits[l]} outside [0, {t_prev}]")
        value += digits[l] * t_prev
    return value


def dcell_label(index: int, k: int, n: int) -> tuple[int, ...]:
    """Inverse of uid_k: the digit tuple ``(a_k, ..., a_0)`` of a vertex index."""
    digits = []
    rest = index
    for l in range(k, 0, -1):
        t_prev = size_t(l - 1, n)
        digits.append(rest // t_prev)
        rest %= t_prev
    digits.append(rest)
    return tuple(digits)


def _format_label(digits: Sequence[int]) -> str:
    return "(" + ",".join(map(str, digits)) + ")"


def parse_dcell_label(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.strip("()").split(","))


def gen_dcell(k: int, n: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """D_{k,n} with vertex index = uid_k of its label and edges tagged by level."""
    total = size_t(k, n)
    if total > vertex_cap:
        raise ValueError(f"D_{{{k},{n}}} has {total} vertices, cap is {vertex_cap}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    levels = [0] * len(edges)
    t = n
    for j in range(1, k + 1):
        copies = t + 1
        new_edges = []
        new_levels = []
        for c in range(copies):
            off = c * t
            new_edges.extend((u + off, v + off) for u, v in edges)
            new_levels.extend(levels)
        # uid_{j-1} b-1 of copy a joins uid_{j-1} a of copy b, for a < b
        for a in range(copies):
            for b in range(a + 1, copies):
                new_edges.append((a * t + b - 1, b * t + a))
                new_levels.append(j)
        edges, levels = new_edges, new_levels
        t *= copies
    labels = [_format_label(dcell_label(i, k, n)) for i in range(total)]
    return Graph.from_edges(total, edges, levels, labels)


def gen_complete(n: int) -> Graph:
    return complete_graph(n)


def star_vertices(n_prime: int, k_prime: int) -> list[tuple[int, ...]]:
    return list(permutations(range(1, n_prime + 1), k_prime))


def gen_star(n_prime: int, k_prime: int) -> Graph:
    """S_{n',k'}: k'-permutations of 1..n' in lexicographic order.

    Edge levels: 0 for first-symbol replacement, 1 for a transposition with
    the first position, so level-0 blocks are the K_{n'-k'+1} cliques.
    """
    if not 1 <= k_prime < n_prime:
        raise ValueError("star graph needs 1 <= k' < n'")
    verts = star_vertices(n_prime, k_prime)
    index = {p: i for i, p in enumerate(verts)}
    edges = []
    levels = []
    for i, p in enumerate(verts):
        for r in range(1, k_prime):
            q = list(p)
            q[0], q[r] = q[r], q[0]
            j = index[tuple(q)]
            if i < j:
                edges.append((i, j))
                levels.append(1)
        used = set(p)
        for s in range(1, n_prime + 1):
            if s not in used:
                j = index[(s,) + p[1:]]
                if i < j:
                    edges.append((i, j))
                    levels.append(0)
    labels = ["".join(map(str, p)) if n_prime < 10 else "-".join(map(str, p)) for p in verts]
    return Graph.from_edges(len(verts), edges, levels, labels)


@dataclass(frozen=True)
class VertexMap:
    forward: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.forward[v]

    def is_bijection(self, size: int) -> bool:
        return len(self.forward) == size and sorted(self.forward) == list(range(size))


def _ith_smallest(pool: list[int], i: int) -> int:
    return sorted(pool)[i - 1]


def dcell_star_symbols(a1: int, a2: int, n: int) -> tuple[int, int]:
    """Image (b_1, b_2) of the D_{1,n} vertex labelled (a1, a2)."""
    b2 = a1 + 1
    pool = [x for x in range(1, n + 2) if x != b2]
    return _ith_smallest(pool, a2 + 1), b2


def dcell_star_map(n: int) -> VertexMap:
    """The bijection from gen_dcell(1, n) to gen_star(n + 1, 2)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    star_index = {p: i for i, p in enumerate(star_vertices(n + 1, 2))}
    forward = []
    for v in range(size_t(1, n)):
        a1, a2 = dcell_label(v, 1, n)
        forward.append(star_index[dcell_star_symbols(a1, a2, n)])
    return VertexMap(tuple(forward))


def check_adjacency_preserving(g: Graph, h: Graph, m: VertexMap) -> bool:
    if g.n != h.n:
        raise ValueError("graphs have different orders")
    if not m.is_bijection(g.n):
        raise ValueError("vertex map is not a bijection")
    if g.m != h.m:
        return False
    return all(h.has_edge(m(u), m(v)) for u, v in g.edges)
