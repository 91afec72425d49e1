"""Brute-force reference implementations written straight from the definitions.

Nothing here calls the fast modules: components, perfect matchings and cuts
are recomputed with deliberately naive code so that a bug in one side cannot
hide the same bug in the other.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Iterable

from .graph import Edge, Graph, complete_graph, cycle_graph, path_graph, star_k1
from .limits import CapExceeded

DEFAULT_CAP = 2_000_000
CORPUS_SEED = 20190402
CORPUS_SIZE = 200
CORPUS_MAX_VERTICES = 9
CORPUS_MAX_EDGES = 16


@dataclass(frozen=True)
class OracleReport:
    instance: str
    metric: str
    oracle_value: Any
    fast_value: Any

    @property
    def agree(self) -> bool:
        return self.oracle_value == self.fast_value


# -- naive primitives -----------------------------------------------------

def _neighbours(n: int, edges: Iterable[Edge]) -> list[set[int]]:
    nb: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def _component_sizes(n: int, edges: Iterable[Edge]) -> list[int]:
    nb = _neighbours(n, edges)
    seen: set[int] = set()
    sizes = []
    for s in range(n):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        size = 0
        while stack:
            x = stack.pop()
            size += 1
            for y in nb[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        sizes.append(size)
    return sorted(sizes, reverse=True)


def _remaining(g: Graph, removed: Iterable[Edge]) -> list[Edge]:
    drop = set(removed)
    return [e for e in g.edges if e not in drop]


def _has_perfect_matching(n: int, edges: Iterable[Edge]) -> bool:
    """Match the lowest free vertex to each free neighbour in turn."""
    if n % 2:
        return False
    nb = [sorted(s) for s in _neighbours(n, edges)]
    free = [True] * n

    def extend(start: int) -> bool:
        v = start
        while v < n and not free[v]:
            v += 1
        if v == n:
            return True
        free[v] = False
        for w in nb[v]:
            if free[w]:
                free[w] = False
                if extend(v + 1):
                    free[v] = free[w] = True
                    return True
                free[w] = True
        free[v] = True
        return False

    return extend(0)


def _check_cap(total: int, cap: int) -> None:
    if total > cap:
        raise CapExceeded(f"{total} candidates exceed oracle cap {cap}")


# -- restricted edge-connectivity -----------------------------------------

def brute_lambda_k(g: Graph, k: int, cap: int = DEFAULT_CAP) -> int | None:
    """Minimum |F| such that G - F is disconnected with every component of
    order >= k, by trying every edge subset in ascending size. None when no
    such F exists."""
    _check_cap(2 ** g.m, cap)
    for size in range(g.m + 1):
        for f in combinations(g.edges, size):
            sizes = _component_sizes(g.n, _remaining(g, f))
            if len(sizes) > 1 and sizes[-1] >= k:
                return size
    return None


def _bipartition_cuts(g: Graph, k: int, cap: int):
    """Yield (|[X, X̄]|, X) over bipartitions with 0 in X whose removal leaves
    only components of order >= k."""
    _check_cap(2 ** max(g.n - 1, 0), cap)
    rest = list(range(1, g.n))
    for mask in range(2 ** len(rest)):
        side = {0} | {rest[i] for i in range(len(rest)) if mask >> i & 1}
        if len(side) == g.n:
            continue
        cut = [(u, v) for u, v in g.edges if (u in side) != (v in side)]
        sizes = _component_sizes(g.n, _remaining(g, cut))
        if sizes[-1] >= k:
            yield len(cut), frozenset(side)


def brute_lambda_k_bipartition(g: Graph, k: int, cap: int = DEFAULT_CAP) -> int | None:
    """λ_k over vertex bipartitions.

    Exact because a minimum k-restricted cut F leaves exactly two components
    and equals the edges between them: otherwise some edge of F could be
    put back without breaking the property.
    """
    best = None
    for value, _ in _bipartition_cuts(g, k, cap):
        if best is None or value < best:
            best = value
    return best


def brute_super_lambda_k(g: Graph, k: int, cap: int = DEFAULT_CAP) -> bool | None:
    """Whether every minimum k-restricted cut has a side of exactly k vertices.

    Enumerates every minimum cut. None when λ_k is not defined.
    """
    cuts = list(_bipartition_cuts(g, k, cap))
    if not cuts:
        return None
    best = min(v for v, _ in cuts)
    return all(min(len(x), g.n - len(x)) == k for v, x in cuts if v == best)


def brute_super_order(g: Graph, m: int, q: int, cap: int = DEFAULT_CAP) -> tuple[bool, list[Edge] | None]:
    """Check every F with |F| <= m: G - F must keep one big component and
    small ones of at most q vertices in total. Returns (holds, counterexample)."""
    _check_cap(sum(math.comb(g.m, s) for s in range(min(m, g.m) + 1)), cap)
    for size in range(min(m, g.m) + 1):
        for f in combinations(g.edges, size):
            sizes = _component_sizes(g.n, _remaining(g, f))
            if g.n - sizes[0] > q:
                return False, list(f)
    return True, None


# -- matching preclusion --------------------------------------------------

def brute_mp(g: Graph, conditional: bool = False, cap: int = DEFAULT_CAP) -> int | None:
    """Minimum |F| leaving no perfect matching (and, if ``conditional``, no
    isolated vertex). None when no such F exists."""
    if g.n % 2:
        raise ValueError("matching preclusion needs even order")
    tried = 0
    for size in range(g.m + 1):
        tried += math.comb(g.m, size)
        _check_cap(tried, cap)
        for f in combinations(g.edges, size):
            rest = _remaining(g, f)
            if conditional:
                nb = _neighbours(g.n, rest)
                if any(not s for s in nb):
                    continue
            if not _has_perfect_matching(g.n, rest):
                return size
    return None


def brute_alpha(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Largest independent set by checking every vertex subset, largest first."""
    _check_cap(2 ** g.n, cap)
    edges = set(g.edges)
    for size in range(g.n, 0, -1):
        for sub in combinations(range(g.n), size):
            if all((u, v) not in edges for u, v in combinations(sub, 2)):
                return size
    return 0


# -- corpus ---------------------------------------------------------------

def random_connected_graph(rng: random.Random, n: int, max_edges: int) -> Graph:
    """Random spanning tree plus a random number of extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    room = min(len(pool), max_edges - len(edges))
    edges.update(rng.sample(pool, rng.randint(0, max(room, 0))))
    return Graph.from_edges(n, edges)


def random_corpus(
    seed: int = CORPUS_SEED,
    count: int = CORPUS_SIZE,
    max_vertices: int = CORPUS_MAX_VERTICES,
    max_edges: int = CORPUS_MAX_EDGES,
) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(4, max_vertices)
        out.append((f"rand-{seed}-{i:03d}", random_connected_graph(rng, n, max_edges)))
    return out


def _cube() -> Graph:
    return Graph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def _k33() -> Graph:
    return Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])


def named_graphs() -> list[tuple[str, Graph]]:
    from .topology import gen_dcell, gen_star  # generators only, no algorithms

    return [
        ("K4", complete_graph(4)),
        ("K5", complete_graph(5)),
        ("K6", complete_graph(6)),
        ("C6", cycle_graph(6)),
        ("C8", cycle_graph(8)),
        ("P6", path_graph(6)),
        ("K1,4", star_k1(4)),
        ("K3,3", _k33()),
        ("Q3", _cube()),
        ("D1,2", gen_dcell(1, 2)),
        ("S3,2", gen_star(3, 2)),
    ]


def standard_corpus(seed: int = CORPUS_SEED) -> list[tuple[str, Graph]]:
    return named_graphs() + random_corpus(seed)


def compare(
    corpus: Iterable[tuple[str, Graph]],
    metric: str,
    oracle: Callable[[Graph], Any],
    fast: Callable[[Graph], Any],
    applies: Callable[[Graph], bool] = lambda g: True,
) -> list[OracleReport]:
    return [
        OracleReport(name, metric, oracle(g), fast(g))
        for name, g in corpus
        if applies(g)
    ]
