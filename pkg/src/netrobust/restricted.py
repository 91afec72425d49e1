"""k-restricted edge-connectivity, minimum k-edge degree and super-λ_k."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterator

from .graph import Edge, Graph, components, is_connected
from .limits import UNLIMITED, Budget, CapExceeded
from .mincut import CutWitness, Pruned, edge_connectivity, min_cut_between

PROVEN = "Proven"
REFUTED = "Refuted"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class LadderResult:
    k: int
    value: int | None  # None: no k-restricted edge-cut exists
    witness: CutWitness | None
    method: str = "pair-sweep"

    @property
    def defined(self) -> bool:
        return self.value is not None


@dataclass(frozen=True)
class SuperStatus:
    verdict: str
    evidence: dict[str, Any] = field(default_factory=dict)


def connected_subsets(
    g: Graph, k: int, cap: int | None = None, containing: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Every vertex set X with |X| = k and G[X] connected, exactly once.

    Sets are grown from their smallest vertex (extension-set enumeration), so
    the order is deterministic. ``containing`` restricts output to sets that
    include that vertex.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"subset size {k} outside [1, {g.n}]")
    adj = g.adj
    count = 0

    def grow(sub: list[int], nbhd: set[int], ext: list[int], root: int):
        nonlocal count
        if len(sub) == k:
            if containing is None or containing in sub:
                count += 1
                if cap is not None and count > cap:
                    raise CapExceeded(f"more than {cap} connected {k}-sets")
                yield tuple(sorted(sub))
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            new_ext = list(ext)
            added = []
            for u in adj[w]:
                if u > root and u not in nbhd:
                    new_ext.append(u)
                    added.append(u)
            nbhd.update(added)
            sub.append(w)
            yield from grow(sub, nbhd, new_ext, root)
            sub.pop()
            nbhd.difference_update(added)

    roots = range(g.n) if containing is None else range(containing + 1)
    for v in roots:
        ext = [u for u in adj[v] if u > v]
        yield from grow([v], {v, *ext}, ext, v)


def _sorted_subsets(g: Graph, k: int, cap: int | None, containing: int | None = None):
    return sorted(connected_subsets(g, k, cap, containing))


def xi_k(g: Graph, k: int) -> tuple[int, tuple[int, ...]]:
    """Minimum |[X, X̄]| over connected k-sets X, with the minimising X."""
    best = None
    for x in connected_subsets(g, k):
        inside = set(x)
        d = sum(1 for v in x for w in g.adj[v] if w not in inside)
        if best is None or d < best[0]:
            best = (d, x)
    if best is None:
        raise ValueError(f"no connected {k}-set")
    return best


def lambda_k(
    g: Graph,
    k: int,
    cap: int | None = None,
    lower_bound: int | None = None,
    budget: Budget = UNLIMITED,
) -> LadderResult:
    """Exact λ_k by sweeping disjoint connected k-set pairs with max-flow.

    Vertex 0 lies in some component of G - F for an optimal cut F; that
    component holds a connected k-set through vertex 0. So one side of every
    pair is drawn from the connected k-sets containing vertex 0.

    ``lower_bound`` (any known value ≤ λ_k, such as λ_{k-1}) lets the sweep
    stop as soon as it is attained.
    """
    if not is_connected(g):
        raise ValueError("lambda_k requires a connected graph")
    if k == 1:
        res = edge_connectivity(g)
        return LadderResult(1, res.value, res.witness, "max-flow")
    if 2 * k > g.n:
        return LadderResult(k, None, None)
    floor = edge_connectivity(g).value
    if lower_bound is not None:
        floor = max(floor, lower_bound)
    anchors = _sorted_subsets(g, k, cap, containing=0)
    others = _sorted_subsets(g, k, cap)
    best: tuple[int, CutWitness] | None = None
    for a in anchors:
        a_set = set(a)
        for b in others:
            if a_set.intersection(b):
                continue
            budget.tick()
            res = min_cut_between(g, a_set, b, None if best is None else best[0])
            if isinstance(res, Pruned):
                continue
            best = res
            if best[0] <= floor:
                break
        if best is not None and best[0] <= floor:
            break
    if best is None:
        return LadderResult(k, None, None)
    witness = best[1]
    if min(witness.component_sizes) < k:
        raise AssertionError("sweep produced a cut that is not k-restricted")
    return LadderResult(k, best[0], witness)


def classify_super_lambda_k(
    g: Graph, k: int, cap: int | None = None, budget: Budget = UNLIMITED
) -> SuperStatus:
    """Super-λ_k via the ladder: λ_{k+1} > λ_k, or λ_{k+1} undefined."""
    low = lambda_k(g, k, cap, budget=budget)
    if not low.defined:
        raise ValueError(f"lambda_{k} is not defined for this graph")
    high = lambda_k(g, k + 1, cap, lower_bound=low.value, budget=budget)
    evidence: dict[str, Any] = {f"lambda_{k}": low.value, f"lambda_{k + 1}": high.value}
    if not high.defined or high.value > low.value:
        evidence["reason"] = f"lambda_{k + 1} exceeds lambda_{k} (or is undefined)"
        evidence["witness"] = low.witness
        return SuperStatus(PROVEN, evidence)
    evidence["reason"] = (
        f"a minimum {k}-restricted cut leaves no component of order exactly {k}"
    )
    evidence["witness"] = high.witness
    return SuperStatus(REFUTED, evidence)


def _small_total(g: Graph, cut: list[Edge] | tuple[Edge, ...]) -> int:
    comps = components(g, cut)
    return g.n - len(comps[0])


def check_super_edge_connected(
    g: Graph,
    m: int,
    q: int,
    mode: str = "oracle",
    oracle_cap: int = 10**7,
    sweep_extra: int = 4,
    budget: Budget = UNLIMITED,
) -> SuperStatus:
    """Whether deleting at most ``m`` edges always leaves one big component
    plus small components of at most ``q`` vertices in total.

    ``oracle`` checks every edge set of size <= m. ``subset-sweep`` checks the
    two-sided cuts [X, X̄] with q < |X| <= min(q + sweep_extra, n // 2). Any
    failing edge set can be coarsened to such a cut with both sides above q
    when n >= 3q + 1, so the sweep proves the property only when it reaches
    n // 2 on such a graph; otherwise it reports Unknown.
    """
    if m < 0 or q < 1:
        raise ValueError("need m >= 0 and q >= 1")
    if mode == "oracle":
        total = sum(math.comb(g.m, s) for s in range(min(m, g.m) + 1))
        if total > oracle_cap:
            return SuperStatus(UNKNOWN, {"reason": f"{total} edge sets exceed cap {oracle_cap}"})
        for s in range(min(m, g.m) + 1):
            for f in combinations(g.edges, s):
                budget.tick()
                if _small_total(g, f) > q:
                    return SuperStatus(REFUTED, {"cut": list(f), "checked_up_to": s})
        return SuperStatus(PROVEN, {"checked_up_to": min(m, g.m)})
    if mode == "subset-sweep":
        top = min(q + sweep_extra, g.n // 2)
        checked = 0
        for size in range(q + 1, top + 1):
            if math.comb(g.n, size) > oracle_cap:
                return SuperStatus(UNKNOWN, {"reason": "sweep cap", "checked_sizes": size - 1})
            for x in combinations(range(g.n), size):
                budget.tick()
                cut = g.boundary(x)
                if len(cut) <= m and _small_total(g, cut) > q:
                    return SuperStatus(REFUTED, {"cut": cut, "side": list(x)})
                checked += 1
        if top >= g.n // 2 and g.n >= 3 * q + 1:
            return SuperStatus(PROVEN, {"checked_sides": checked})
        return SuperStatus(UNKNOWN, {"checked_sizes": top, "checked_sides": checked})
    raise ValueError(f"unknown mode {mode!r}")
