"""Exact independence number and the α-inequality hypotheses."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, basic_stats
from .limits import CapExceeded
from .matching import maximum_matching
from .topology import size_t

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class AlphaResult:
    alpha: int
    witness: tuple[int, ...]
    proof_bound: int  # n - ν(G): each matched edge holds at most one chosen vertex
    nodes: int = 0


def is_independent(g: Graph, vertices) -> bool:
    vs = set(vertices)
    return all(not (u in vs and v in vs) for u, v in g.edges)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_bound(cand: int, adj: tuple[int, ...]) -> int:
    """Number of cliques in a greedy clique cover of G[cand] (bounds α from above)."""
    cliques = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique_common = adj[v] & rest
        rest ^= low
        # grow a clique greedily inside the common neighbourhood
        while clique_common:
            w = (clique_common & -clique_common).bit_length() - 1
            rest &= ~(1 << w)
            clique_common &= adj[w]
            clique_common &= rest
        cliques += 1
    return cliques


def independence_number(g: Graph, cap: int = DEFAULT_NODE_BUDGET) -> AlphaResult:
    """Exact α(G) by branch and bound.

    Degree-0/1 vertices are taken greedily, the bound is a greedy clique cover,
    and branching is on a maximum-degree vertex (ties by smallest index).
    """
    adj = g.adj_mask
    best_set = 0
    best_size = -1
    nodes = 0

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best_set, best_size, nodes
        nodes += 1
        if nodes > cap:
            raise CapExceeded(f"independence search exceeded {cap} nodes")
        # reductions: vertices with at most one neighbour left are always safe
        changed = True
        while changed and cand:
            changed = False
            for v in _bits(cand):
                if not (cand >> v) & 1:
                    continue
                nb = adj[v] & cand
                if nb & (nb - 1) == 0:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~(nb | (1 << v))
                    changed = True
        if not cand:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + _clique_cover_bound(cand, adj) <= best_size:
            return
        pivot = max(_bits(cand), key=lambda v: ((adj[v] & cand).bit_count(), -v))
        search(cand & ~(adj[pivot] | (1 << pivot)), chosen | (1 << pivot), size + 1)
        search(cand & ~(1 << pivot), chosen, size)

    search((1 << g.n) - 1, 0, 0)
    witness = tuple(_bits(best_set))
    if not is_independent(g, witness) or len(witness) != best_size:
        raise AssertionError("independence witness failed verification")
    bound = g.n - len(maximum_matching(g))
    return AlphaResult(best_size, witness, bound, nodes)


def dcell_alpha_bound(k: int, n: int) -> Fraction:
    """Upper bound on α(D_{k,n}): 19/42 |V| for n = 2 and k >= 2, |V|/n for n >= 3.

    The n = 2 bound is built from copies of D_{2,2}, so it says nothing about
    D_{0,2} or D_{1,2} (the 6-cycle has α = 3 > 19/42 * 6).
    """
    order = size_t(k, n)
    if n == 2:
        if k < 2:
            raise ValueError("the n = 2 bound needs k >= 2")
        return Fraction(19, 42) * order
    return Fraction(order, n)


@dataclass(frozen=True)
class HypothesisReport:
    order: int
    r: int
    alpha: Fraction
    alpha_is_exact: bool
    triangle_free: bool
    order_at_least_8: bool
    super_matched_alpha: bool  # α < (|V| - 2) / 2
    mp1_triangle_alpha: bool  # α < (|V| - 2) / 2 - (2r - 8)
    cond_triangle_alpha: bool  # α < min{(|V| - 4) / 2, (|V| - 2) / 2 - (2r - 6)}
    mp1_triangle_free_alpha: bool  # α < (|V| - 2) / 2 - (2r - 6)
    cond_triangle_free_alpha: bool  # α < (|V| - 2) / 2 - (2r - 4)


def hypothesis_report(
    g: Graph,
    r: int,
    alpha_bound: Fraction | int | None = None,
    exact: bool = True,
    cap: int = DEFAULT_NODE_BUDGET,
) -> HypothesisReport:
    """Evaluate the α-inequalities with exact rationals.

    Uses exact α when ``exact`` and the search fits ``cap``; otherwise falls
    back to ``alpha_bound`` (an upper bound is enough, every check is α < ...).
    """
    stats = basic_stats(g)
    if stats.regular_degree != r:
        raise ValueError(f"graph is not {r}-regular")
    if g.n % 2:
        raise ValueError("hypothesis checks need even order")
    alpha = None
    is_exact = False
    if exact:
        try:
            alpha = Fraction(independence_number(g, cap).alpha)
            is_exact = True
        except CapExceeded:
            alpha = None
    if alpha is None:
        if alpha_bound is None:
            raise CapExceeded("exact α infeasible and no bound supplied")
        alpha = Fraction(alpha_bound)
    order = Fraction(g.n)
    half = (order - 2) / 2
    return HypothesisReport(
        order=g.n,
        r=r,
        alpha=alpha,
        alpha_is_exact=is_exact,
        triangle_free=stats.triangle_free,
        order_at_least_8=g.n >= 8,
        super_matched_alpha=alpha < half,
        mp1_triangle_alpha=alpha < half - (2 * r - 8),
        cond_triangle_alpha=alpha < min((order - 4) / 2, half - (2 * r - 6)),
        mp1_triangle_free_alpha=alpha < half - (2 * r - 6),
        cond_triangle_free_alpha=alpha < half - (2 * r - 4),
    )
