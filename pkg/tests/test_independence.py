from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import connected_graphs
from hypothesis import given, settings

from netrobust.graph import Graph, complete_graph, cycle_graph
from netrobust.independence import (
    dcell_alpha_bound,
    hypothesis_report,
    independence_number,
    is_independent,
)
from netrobust.limits import CapExceeded
from netrobust.oracle import brute_alpha, random_corpus
from netrobust.topology import gen_dcell, size_t


def test_examples():
    res = independence_number(gen_dcell(2, 2))
    assert res.alpha == 19 and is_independent(gen_dcell(2, 2), res.witness)
    assert res.alpha <= res.proof_bound == 21
    for n in range(1, 9):
        assert independence_number(complete_graph(n)).alpha == 1
    assert independence_number(cycle_graph(6)).alpha == 3
    assert independence_number(Graph(0, ())).alpha == 0


@settings(max_examples=150, deadline=None)
@given(connected_graphs(min_n=1, max_n=14, extra=20))
def test_matches_brute_force(g):
    res = independence_number(g)
    assert res.alpha == brute_alpha(g)
    assert len(res.witness) == res.alpha and is_independent(g, res.witness)
    assert res.alpha <= res.proof_bound


def test_matches_brute_force_on_corpus():
    for _, g in random_corpus(count=60):
        assert independence_number(g).alpha == brute_alpha(g)


def test_node_budget():
    with pytest.raises(CapExceeded):
        independence_number(gen_dcell(2, 3), cap=5)


@pytest.mark.parametrize("k,n", [(1, 3), (1, 4), (1, 5), (2, 2), (2, 3)])
def test_bounds_hold_on_desk_instances(k, n):
    alpha = independence_number(gen_dcell(k, n)).alpha
    assert alpha <= dcell_alpha_bound(k, n)


def test_bound_values():
    assert dcell_alpha_bound(2, 2) == 19
    assert dcell_alpha_bound(3, 2) == Fraction(19, 42) * size_t(3, 2)
    assert dcell_alpha_bound(2, 3) == 52
    with pytest.raises(ValueError):
        dcell_alpha_bound(1, 2)  # the 6-cycle has alpha 3 > 19/42 * 6


def test_hypothesis_report_examples():
    rep = hypothesis_report(gen_dcell(2, 2), 3)
    assert rep.alpha == 19 and rep.alpha_is_exact and rep.super_matched_alpha
    assert rep.triangle_free and rep.order_at_least_8

    rep = hypothesis_report(gen_dcell(2, 3), 4, alpha_bound=dcell_alpha_bound(2, 3), exact=False)
    assert rep.alpha == 52 and not rep.alpha_is_exact
    assert rep.super_matched_alpha  # 52 < 77
    assert not rep.triangle_free

    rep = hypothesis_report(complete_graph(4), 3)
    assert rep.alpha == 1 and not rep.super_matched_alpha  # 1 < 1 is false
    assert not rep.order_at_least_8


def test_hypothesis_report_inequalities_are_exact():
    # D_{2,2}: r = 3, |V| = 42, (|V| - 2) / 2 = 20
    rep = hypothesis_report(gen_dcell(2, 2), 3)
    assert rep.mp1_triangle_alpha == (19 < 20 + 2)
    assert rep.cond_triangle_alpha == (19 < min(19, 20))
    assert rep.mp1_triangle_free_alpha == (19 < 20)
    assert rep.cond_triangle_free_alpha == (19 < 18)


def test_hypothesis_report_errors():
    with pytest.raises(ValueError):
        hypothesis_report(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), 2)
    with pytest.raises(ValueError):
        hypothesis_report(complete_graph(5), 4)
    with pytest.raises(CapExceeded):
        hypothesis_report(gen_dcell(2, 3), 4, cap=5)
