"""Maximum matching in general graphs and (conditional) matching preclusion."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .graph import Edge, Graph, basic_stats, components
from .limits import UNLIMITED, Budget, CapExceeded
from .restricted import PROVEN, REFUTED, UNKNOWN, SuperStatus

TRIVIAL = "Trivial"
SEMI_TRIVIAL = "SemiTrivial"
TRIVIAL_CONDITIONAL = "TrivialConditional"
OTHER = "Other"

DEFAULT_TEST_CAP = 10**7


class OddOrderError(ValueError):
    """Matching preclusion is only defined for graphs of even order."""


class Blossom:
    """Edmonds' blossom algorithm over a fixed graph with per-call deleted edges.

    ``mate[v]`` is the partner of ``v`` or -1.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.arcs = g.arcs

    def _augmenting_path(self, root: int, mate: list[int], blocked) -> int:
        n = self.n
        arcs = self.arcs
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        self._parent = parent
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to, e, _ in arcs[v]:
                if blocked and e in blocked:
                    continue
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    def _augment(self, end: int, mate: list[int]) -> None:
        parent = self._parent
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt

    def solve(self, mate: list[int] | None = None, blocked=None, perfect_only: bool = False):
        """Grow ``mate`` to a maximum matching of G minus ``blocked`` edges.

        With ``perfect_only`` the search gives up (returns None) at the first
        vertex that cannot be matched.
        """
        mate = [-1] * self.n if mate is None else list(mate)
        for v in range(self.n):
            if mate[v] != -1:
                continue
            end = self._augmenting_path(v, mate, blocked)
            if end == -1:
                if perfect_only:
                    return None
                continue
            self._augment(end, mate)
        return mate


def _mate_edges(g: Graph, mate: list[int]) -> list[Edge]:
    return sorted((v, mate[v]) for v in range(g.n) if mate[v] > v)


def maximum_matching(g: Graph) -> list[Edge]:
    return _mate_edges(g, Blossom(g).solve())


def is_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    seen = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def tutte_berge_certificate(g: Graph) -> tuple[int, frozenset[int]]:
    """(ν(G), A) from the Gallai-Edmonds decomposition.

    D = vertices missed by some maximum matching, A = N(D) - D. The
    Tutte-Berge bound (n + |A| - odd(G - A)) / 2 equals ν(G) for this A.
    """
    nu = len(maximum_matching(g))
    deficient = set()
    for v in range(g.n):
        rest = g.without_edges(g.incident[v])
        if len(maximum_matching(rest)) == nu:
            deficient.add(v)
    a = frozenset(w for v in deficient for w in g.adj[v] if w not in deficient)
    return nu, a


def tutte_berge_bound(g: Graph, a: Iterable[int]) -> int:
    """(n + |A| - odd(G - A)) // 2, an upper bound on any matching size."""
    a = set(a)
    removed = [e for e in g.edges if e[0] in a or e[1] in a]
    odd = sum(1 for c in components(g, removed) if not c & a and len(c) % 2 == 1)
    return (g.n + len(a) - odd) // 2


def certify_maximum(g: Graph, edges: list[Edge]) -> bool:
    """True iff ``edges`` is a matching whose size meets a Tutte-Berge bound."""
    if not is_matching(g, edges):
        return False
    _, a = tutte_berge_certificate(g)
    return len(edges) == tutte_berge_bound(g, a)


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return Blossom(g).solve(perfect_only=True) is not None


def v_e(g: Graph) -> tuple[int, tuple[int, int, int]]:
    """min d(u) + d(w) - 2 - y(u, w) over 2-paths u-v-w, with the best path."""
    best = None
    for v in range(g.n):
        for u, w in combinations(g.adj[v], 2):
            val = g.degree(u) + g.degree(w) - 2 - (1 if g.has_edge(u, w) else 0)
            if best is None or val < best[0]:
                best = (val, (u, v, w))
    if best is None:
        raise ValueError("graph has no path of length 2")
    return best


@dataclass(frozen=True)
class PreclusionWitness:
    edges: tuple[Edge, ...]
    kind: str
    anchor: tuple[int, ...] | None = None


@dataclass
class PreclusionResult:
    number: int | None  # None: no (conditional) preclusion set exists
    witnesses: list[PreclusionWitness] = field(default_factory=list)
    exhaustive: bool = False
    tests: int = 0

    def kinds(self) -> set[str]:
        return {w.kind for w in self.witnesses}


def complete_blocks(g: Graph) -> list[frozenset[int]]:
    """Complete-subgraph blocks used for semi-trivial sets.

    Level-0 components when the graph carries level tags, otherwise maximal
    cliques of size >= 3 (networkx, graphs up to 2,000 vertices).
    """
    if g.levels is not None and any(g.levels):
        level0 = [e for e, lv in zip(g.edges, g.levels) if lv == 0]
        sub = Graph.from_edges(g.n, level0)
        blocks = []
        for comp in components(sub):
            if len(comp) >= 2 and all(g.has_edge(u, v) for u, v in combinations(sorted(comp), 2)):
                blocks.append(comp)
        return blocks
    if g.n > 2000:
        return []
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return sorted(
        (frozenset(c) for c in nx.find_cliques(nxg) if len(c) >= 3),
        key=lambda c: sorted(c),
    )


@lru_cache(maxsize=32)
def _pattern_tables(g: Graph):
    trivial = {frozenset(g.edges[i] for i in g.incident[v]): v for v in range(g.n)}
    semi = {}
    for block in complete_blocks(g):
        cut = frozenset(g.boundary(block))
        if cut:
            semi.setdefault(cut, tuple(sorted(block)))
    cond = {}
    for v in range(g.n):
        for u, w in combinations(g.adj[v], 2):
            f = {g.edges[i] for i in g.incident[u]} | {g.edges[i] for i in g.incident[w]}
            f.discard((min(u, v), max(u, v)))
            f.discard((min(v, w), max(v, w)))
            cond.setdefault(frozenset(f), (u, v, w))
    return trivial, semi, cond


def _leaves_isolated(g: Graph, f: Iterable[Edge]) -> bool:
    lost = [0] * g.n
    for u, v in f:
        lost[u] += 1
        lost[v] += 1
    return any(lost[v] >= g.degree(v) for v in range(g.n))


def classify_preclusion_set(g: Graph, f: Iterable[Edge], conditional: bool = False) -> PreclusionWitness:
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in f))
    if conditional and _leaves_isolated(g, edges):
        raise ValueError("edge set leaves an isolated vertex")
    if has_perfect_matching(g.without_edges(edges)):
        raise ValueError("edge set does not preclude perfect matchings")
    trivial, semi, cond = _pattern_tables(g)
    key = frozenset(edges)
    if key in trivial:
        return PreclusionWitness(edges, TRIVIAL, (trivial[key],))
    if key in semi:
        return PreclusionWitness(edges, SEMI_TRIVIAL, semi[key])
    if key in cond:
        return PreclusionWitness(edges, TRIVIAL_CONDITIONAL, cond[key])
    return PreclusionWitness(edges, OTHER)


class _Searcher:
    """Subset search for (conditional) matching preclusion sets.

    A pool of perfect matchings of G answers most queries: if F misses one of
    them, G - F still has a perfect matching. Only the rest go to the blossom
    solver, which starts from a pool matching with F's edges removed.
    """

    POOL_SIZE = 128

    def __init__(self, g: Graph, conditional: bool, cap: int, budget: Budget):
        if g.n % 2:
            raise OddOrderError("matching preclusion needs even order")
        self.g = g
        self.conditional = conditional
        self.cap = cap
        self.budget = budget
        self.solver = Blossom(g)
        self.tests = 0
        self.pool: list[tuple[int, list[int]]] = []
        mate = self.solver.solve(perfect_only=True)
        if mate is not None:
            self._remember(mate)

    def _remember(self, mate: list[int]) -> None:
        mask = 0
        for v in range(self.g.n):
            if mate[v] > v:
                mask |= 1 << self.g.edge_index[(v, mate[v])]
        self.pool.insert(0, (mask, mate))
        del self.pool[self.POOL_SIZE:]

    def precludes(self, f: tuple[int, ...]) -> bool:
        """True iff G minus edge indices ``f`` has no perfect matching."""
        fmask = 0
        for i in f:
            fmask |= 1 << i
        for pos, (mask, _) in enumerate(self.pool):
            if not mask & fmask:
                if pos:
                    self.pool.insert(0, self.pool.pop(pos))
                return False
        if not self.pool:
            return True
        start = list(self.pool[0][1])
        for i in f:
            u, v = self.g.edges[i]
            if start[u] == v:
                start[u] = start[v] = -1
        mate = self.solver.solve(start, blocked=set(f), perfect_only=True)
        if mate is None:
            return True
        self._remember(mate)
        return False

    def search(self, max_size: int, exhaustive: bool) -> PreclusionResult:
        g = self.g
        degree = [g.degree(v) for v in range(g.n)]
        ends = g.edges
        for size in range(0, min(max_size, g.m) + 1):
            found: list[tuple[int, ...]] = []
            for f in combinations(range(g.m), size):
                self.tests += 1
                if self.tests > self.cap:
                    raise CapExceeded(f"more than {self.cap} candidate sets")
                self.budget.tick()
                if self.conditional and size:
                    lost = {}
                    isolated = False
                    for i in f:
                        for x in ends[i]:
                            lost[x] = lost.get(x, 0) + 1
                            if lost[x] == degree[x]:
                                isolated = True
                    if isolated:
                        continue
                if self.precludes(f):
                    found.append(f)
                    if not exhaustive:
                        break
            if found:
                witnesses = []
                for f in found:
                    edges = [ends[i] for i in f]
                    witnesses.append(classify_preclusion_set(g, edges, self.conditional))
                return PreclusionResult(size, witnesses, exhaustive, self.tests)
        return PreclusionResult(None, [], exhaustive, self.tests)


def mp_number(
    g: Graph, exhaustive: bool = False, cap: int = DEFAULT_TEST_CAP, budget: Budget = UNLIMITED
) -> PreclusionResult:
    """Matching preclusion number by ascending subset search.

    Sizes are tried in increasing order and, within a size, in lexicographic
    edge-index order. With ``exhaustive`` every optimal set is returned.
    """
    s = _Searcher(g, False, cap, budget)
    return s.search(g.m, exhaustive)


def mp1_number(
    g: Graph, exhaustive: bool = False, cap: int = DEFAULT_TEST_CAP, budget: Budget = UNLIMITED
) -> PreclusionResult:
    """Conditional matching preclusion number (no isolated vertex allowed)."""
    s = _Searcher(g, True, cap, budget)
    return s.search(g.m, exhaustive)


def search_cost(m: int, max_size: int) -> int:
    """Number of candidate sets an ascending search up to ``max_size`` visits."""
    return sum(math.comb(m, s) for s in range(max_size + 1))


def super_matched_status(
    g: Graph, cap: int = DEFAULT_TEST_CAP, budget: Budget = UNLIMITED
) -> SuperStatus:
    delta = basic_stats(g).min_degree
    try:
        res = mp_number(g, exhaustive=True, cap=cap, budget=budget)
    except CapExceeded as exc:
        return SuperStatus(UNKNOWN, {"reason": str(exc)})
    evidence = {"mp": res.number, "delta": delta, "optimal_sets": len(res.witnesses)}
    if res.number != delta:
        evidence["reason"] = "mp differs from minimum degree"
        if res.witnesses:
            evidence["witness"] = res.witnesses[0]
        return SuperStatus(REFUTED, evidence)
    bad = [w for w in res.witnesses if w.kind != TRIVIAL]
    if bad:
        evidence["reason"] = "non-trivial optimal solution"
        evidence["witness"] = bad[0]
        evidence["kinds"] = sorted(res.kinds())
        return SuperStatus(REFUTED, evidence)
    evidence["reason"] = "every optimal solution is trivial"
    return SuperStatus(PROVEN, evidence)


def cond_super_matched_status(
    g: Graph, cap: int = DEFAULT_TEST_CAP, budget: Budget = UNLIMITED
) -> SuperStatus:
    ve, _ = v_e(g)
    try:
        res = mp1_number(g, exhaustive=True, cap=cap, budget=budget)
    except CapExceeded as exc:
        return SuperStatus(UNKNOWN, {"reason": str(exc)})
    evidence = {"mp1": res.number, "v_e": ve, "optimal_sets": len(res.witnesses)}
    if res.number != ve:
        evidence["reason"] = "mp1 differs from v_e"
        if res.witnesses:
            evidence["witness"] = res.witnesses[0]
        return SuperStatus(REFUTED, evidence)
    bad = [w for w in res.witnesses if w.kind != TRIVIAL_CONDITIONAL]
    if bad:
        evidence["reason"] = "optimal conditional solution not induced by a 2-path"
        evidence["witness"] = bad[0]
        evidence["kinds"] = sorted(res.kinds())
        return SuperStatus(REFUTED, evidence)
    evidence["reason"] = "every optimal conditional solution is induced by a 2-path"
    return SuperStatus(PROVEN, evidence)
