from __future__ import annotations

from collections import Counter

import networkx as nx
import pytest
from conftest import connected_graphs, to_nx
from hypothesis import given, settings
from hypothesis import strategies as st

from netrobust.graph import Graph, complete_graph, cycle_graph
from netrobust.limits import CapExceeded
from netrobust.matching import (
    OTHER,
    SEMI_TRIVIAL,
    TRIVIAL,
    TRIVIAL_CONDITIONAL,
    Blossom,
    OddOrderError,
    certify_maximum,
    classify_preclusion_set,
    complete_blocks,
    cond_super_matched_status,
    has_perfect_matching,
    is_matching,
    maximum_matching,
    mp1_number,
    mp_number,
    search_cost,
    super_matched_status,
    v_e,
)
from netrobust.oracle import brute_mp
from netrobust.restricted import PROVEN, REFUTED, UNKNOWN
from netrobust.topology import gen_dcell, gen_star


@st.composite
def any_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@settings(max_examples=200, deadline=None)
@given(any_graphs())
def test_blossom_is_maximum_and_certified(g):
    m = maximum_matching(g)
    assert is_matching(g, m)
    assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    assert certify_maximum(g, m)


@settings(max_examples=100, deadline=None)
@given(any_graphs(max_n=10), st.data())
def test_blocked_edges_and_warm_start(g, data):
    blocked = set(data.draw(st.lists(st.integers(0, max(g.m - 1, 0)), unique=True))) if g.m else set()
    solver = Blossom(g)
    start = solver.solve()
    for i in blocked:
        u, v = g.edges[i]
        if start[u] == v:
            start[u] = start[v] = -1
    mate = solver.solve(start, blocked=blocked)
    rest = g.without_edges(blocked)
    size = sum(1 for v in range(g.n) if mate[v] > v)
    assert size == len(maximum_matching(rest))
    assert all(mate[v] == -1 or rest.has_edge(v, mate[v]) for v in range(g.n))


def test_certificate_rejects_non_maximum():
    g = cycle_graph(6)
    assert not certify_maximum(g, [(0, 1)])
    assert not certify_maximum(g, [(0, 1), (1, 2)])


def test_v_e():
    assert v_e(gen_dcell(2, 2))[0] == 4
    assert v_e(complete_graph(4))[0] == 3
    assert v_e(gen_dcell(1, 3))[0] == 3
    with pytest.raises(ValueError):
        v_e(Graph.from_edges(2, [(0, 1)]))


@settings(max_examples=80, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_mp_and_mp1_match_oracle(g):
    if g.n % 2:
        with pytest.raises(OddOrderError):
            mp_number(g)
        return
    assert mp_number(g).number == brute_mp(g)
    assert mp1_number(g).number == brute_mp(g, conditional=True)


def test_exhaustive_witnesses_are_all_optima():
    g = cycle_graph(6)
    res = mp_number(g, exhaustive=True)
    assert res.number == 2 and len(res.witnesses) == 9
    assert Counter(w.kind for w in res.witnesses) == {TRIVIAL: 6, TRIVIAL_CONDITIONAL: 3}
    for w in res.witnesses:
        assert not has_perfect_matching(g.without_edges(w.edges))


def test_complete_blocks():
    assert sorted(map(sorted, complete_blocks(gen_dcell(1, 3)))) == [
        [0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]
    ]
    assert len(complete_blocks(gen_star(4, 2))) == 4
    # without level tags the maximal cliques of size >= 3 are used
    assert complete_blocks(complete_graph(4)) == [frozenset(range(4))]
    assert complete_blocks(cycle_graph(6)) == []


def test_classification_kinds():
    g = gen_dcell(1, 3)
    assert classify_preclusion_set(g, [(0, 1), (0, 2), (0, 3)]).kind == TRIVIAL
    semi = classify_preclusion_set(g, g.boundary({0, 1, 2}))
    assert semi.kind == SEMI_TRIVIAL and semi.anchor == (0, 1, 2)
    two_path = classify_preclusion_set(g, [(0, 1), (0, 3), (1, 6)])
    assert two_path.kind == TRIVIAL_CONDITIONAL and two_path.anchor[1] == 2
    with pytest.raises(ValueError):
        classify_preclusion_set(g, [(0, 1)])
    with pytest.raises(ValueError):
        classify_preclusion_set(g, [(0, 1), (0, 2), (0, 3)], conditional=True)


def test_other_kind_on_dcell_22_conditional_optima():
    res = mp1_number(gen_dcell(2, 2), exhaustive=True)
    assert res.number == 4
    assert {TRIVIAL_CONDITIONAL, OTHER} <= res.kinds()


def test_cap_is_enforced():
    with pytest.raises(CapExceeded):
        mp_number(gen_dcell(2, 2), cap=100)


def test_search_cost():
    assert search_cost(6, 2) == 1 + 6 + 15


def test_super_matched_statuses():
    assert super_matched_status(gen_dcell(2, 2)).verdict == PROVEN
    assert super_matched_status(gen_dcell(1, 4)).verdict == PROVEN
    odd = super_matched_status(gen_dcell(1, 3))
    assert odd.verdict == REFUTED and odd.evidence["witness"].kind != TRIVIAL
    assert super_matched_status(cycle_graph(6)).verdict == REFUTED
    assert super_matched_status(gen_dcell(2, 2), cap=10).verdict == UNKNOWN
    assert cond_super_matched_status(gen_dcell(2, 2)).verdict == REFUTED
