"""Acceptance criteria 1-13.

Each test records exactly one line ``criterion <n>: PASS|FAIL <detail>``;
the lines are printed together in the pytest terminal summary. Every value check is
exact and every time limit is pinned below.
"""

from __future__ import annotations

import json
import os
import random
import time
from collections import Counter

import pytest

from netrobust.cli import main as cli_main
from netrobust.graph import basic_stats, complete_graph, cycle_graph, is_connected, star_k1
from netrobust.independence import hypothesis_report, independence_number, is_independent
from netrobust.matching import (
    SEMI_TRIVIAL,
    TRIVIAL,
    TRIVIAL_CONDITIONAL,
    has_perfect_matching,
    mp1_number,
    mp_number,
    v_e,
)
from netrobust.mincut import edge_connectivity
from netrobust.restricted import PROVEN, REFUTED, classify_super_lambda_k, lambda_k
from netrobust.topology import (
    check_adjacency_preserving,
    dcell_star_map,
    gen_dcell,
    gen_star,
    size_t,
)
from netrobust.verify import corpus_crosscheck, revalidate_report

# Pinned wall-clock limits in seconds, one per criterion.
LIMITS = {
    1: 5,
    2: 5,
    3: 5,
    4: 30,
    5: 60,
    "5-slow": 600,
    6: 300,
    7: 600,
    8: 60,
    9: 600,
    10: 900,
    11: 120,
    12: 600,
    13: 2700,
}

PERTURBATION_SEED = 20190402
PERTURBATION_SAMPLES = 1000


class Criterion:
    """Collects sub-check failures and prints the single summary line."""

    def __init__(self, number):
        self.number = number
        self.failures: list[str] = []
        self.notes: list[str] = []
        self.start = time.perf_counter()

    def check(self, ok: bool, what: str) -> None:
        (self.notes if ok else self.failures).append(what)

    def finish(self) -> None:
        elapsed = time.perf_counter() - self.start
        limit = LIMITS[self.number]
        self.check(elapsed < limit, f"took {elapsed:.1f}s (limit {limit}s)")
        status = "FAIL" if self.failures else "PASS"
        detail = "; ".join(self.failures) if self.failures else f"{elapsed:.1f}s"
        _report(f"criterion {self.number}: {status} {detail}")
        assert not self.failures, "; ".join(self.failures)


# Lines printed in the terminal summary by tests/conftest.py.
REPORT_LINES: list[str] = []


def _report(line: str) -> None:
    REPORT_LINES.append(line)


def test_criterion_01_construction():
    c = Criterion(1)
    expected = {(1, 2): 6, (2, 2): 42, (1, 3): 12, (2, 3): 156, (3, 2): 1806}
    for (k, n), t in expected.items():
        c.check(size_t(k, n) == t, f"size_t({k},{n}) = {size_t(k, n)}, want {t}")
        g = gen_dcell(k, n)
        c.check(g.n == t, f"gen_dcell({k},{n}) has {g.n} vertices")
        c.check(basic_stats(g).regular_degree == n + k - 1, f"D_{k},{n} not {n + k - 1}-regular")
        c.check(is_connected(g), f"D_{k},{n} disconnected")
        want = [0] * (n - 1) + list(range(1, k + 1))
        profile_ok = all(
            sorted(g.level(v, w) for w in g.adj[v]) == want for v in range(g.n)
        )
        c.check(profile_ok, f"D_{k},{n} level profile wrong")
    c.finish()


def test_criterion_02_common_neighbours():
    c = Criterion(2)
    for k, n in [(1, 3), (2, 2), (2, 3)]:
        g = gen_dcell(k, n)
        masks = g.adj_mask
        for (u, v), lv in zip(g.edges, g.levels):
            common = (masks[u] & masks[v]).bit_count()
            want = n - 2 if lv == 0 else 0
            if common != want:
                c.check(False, f"D_{k},{n} edge {(u, v)} level {lv}: {common} common neighbours")
                break
    c.finish()


def test_criterion_03_isomorphism():
    c = Criterion(3)
    for n in range(2, 7):
        ok = check_adjacency_preserving(gen_dcell(1, n), gen_star(n + 1, 2), dcell_star_map(n))
        c.check(ok, f"map fails for n={n}")
    for name, g in (("S_3,2", gen_star(3, 2)), ("D_1,2", gen_dcell(1, 2))):
        six_cycle = g.n == 6 and basic_stats(g).regular_degree == 2 and is_connected(g)
        c.check(six_cycle, f"{name} is not a 6-cycle")
    c.finish()


def test_criterion_04_lambda():
    c = Criterion(4)
    for k, n in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)]:
        got = edge_connectivity(gen_dcell(k, n)).value
        c.check(got == n + k - 1, f"lambda(D_{k},{n}) = {got}, want {n + k - 1}")
    c.finish()


def test_criterion_05_lambda2():
    c = Criterion(5)
    for (k, n), want in {(2, 2): 4, (2, 3): 6}.items():
        res = lambda_k(gen_dcell(k, n), 2)
        c.check(res.value == want, f"lambda2(D_{k},{n}) = {res.value}, want {want}")
        c.check(res.witness is not None and res.witness.is_valid(gen_dcell(k, n)), "bad witness")
    for n, want in {4: 4, 5: 6, 6: 8}.items():
        got = lambda_k(complete_graph(n), 2).value
        c.check(got == want, f"lambda2(K_{n}) = {got}, want {want}")
    c.check(not lambda_k(star_k1(4), 2).defined, "lambda2(K_1,4) should be NotDefined")
    c.finish()


@pytest.mark.skipif(not os.environ.get("NETROBUST_SLOW"), reason="set NETROBUST_SLOW=1")
def test_criterion_05_slow_lambda2_d32():
    c = Criterion("5-slow")
    got = lambda_k(gen_dcell(3, 2), 2).value
    c.check(got == 6, f"lambda2(D_3,2) = {got}, want 6")
    c.finish()


def test_criterion_06_lambda3():
    c = Criterion(6)
    cases = [("D_2,2", gen_dcell(2, 2), 5), ("K_6", complete_graph(6), 9), ("D_2,3", gen_dcell(2, 3), 6)]
    for name, g, want in cases:
        res = lambda_k(g, 3)
        c.check(res.value == want, f"lambda3({name}) = {res.value}, want {want}")
        if res.defined:
            c.check(min(res.witness.component_sizes) >= 3, f"{name} witness not 3-restricted")
    c.finish()


def test_criterion_07_super_classifications():
    c = Criterion(7)
    expectations = [
        ((2, 2), 1, PROVEN),
        ((2, 3), 1, PROVEN),
        ((1, 3), 1, REFUTED),
        ((1, 4), 1, REFUTED),
        ((2, 2), 2, PROVEN),
        ((2, 3), 2, REFUTED),
        ((2, 2), 3, PROVEN),
    ]
    for (k, n), level, want in expectations:
        got = classify_super_lambda_k(gen_dcell(k, n), level)
        c.check(got.verdict == want, f"super-lambda{level}(D_{k},{n}) = {got.verdict}, want {want}")
    lam4 = lambda_k(gen_dcell(2, 2), 4)
    c.check(lam4.defined and lam4.value > 5, f"lambda4(D_2,2) = {lam4.value}, must exceed 5")
    c.finish()


def test_criterion_08_alpha():
    c = Criterion(8)
    g = gen_dcell(2, 2)
    res = independence_number(g)
    c.check(res.alpha == 19, f"alpha(D_2,2) = {res.alpha}")
    c.check(is_independent(g, res.witness) and len(res.witness) == 19, "witness invalid")
    for n in range(1, 9):
        got = independence_number(complete_graph(n)).alpha
        c.check(got == 1, f"alpha(K_{n}) = {got}")
    c.check(independence_number(cycle_graph(6)).alpha == 3, "alpha(C_6) != 3")
    c.finish()


def test_criterion_09_mp():
    c = Criterion(9)
    d13 = mp_number(gen_dcell(1, 3), exhaustive=True)
    kinds = Counter(w.kind for w in d13.witnesses)
    c.check(d13.number == 3, f"mp(D_1,3) = {d13.number}")
    c.check(
        set(kinds) == {TRIVIAL, SEMI_TRIVIAL},
        "D_1,3 optimal sets are "
        + ", ".join(f"{n} {k}" for k, n in sorted(kinds.items()))
        + " (want only Trivial and SemiTrivial)",
    )
    d14 = mp_number(gen_dcell(1, 4), exhaustive=True)
    c.check(d14.number == 4, f"mp(D_1,4) = {d14.number}")
    c.check(d14.kinds() == {TRIVIAL}, f"D_1,4 optimum kinds {sorted(d14.kinds())}")
    d22 = mp_number(gen_dcell(2, 2), exhaustive=True)
    c.check(d22.number == 3, f"mp(D_2,2) = {d22.number}")
    c.check(d22.kinds() == {TRIVIAL}, f"D_2,2 optimum kinds {sorted(d22.kinds())}")
    c.finish()


def test_criterion_10_mp1():
    c = Criterion(10)
    g = gen_dcell(2, 2)
    res = mp1_number(g, exhaustive=True)
    # the ascending search visits every conditional candidate of size <= 3
    # before reporting 4, so none of them precludes a perfect matching
    c.check(res.number == 4, f"mp1(D_2,2) = {res.number}")
    c.check(res.number == v_e(g)[0], f"v_e(D_2,2) = {v_e(g)[0]}")
    c.check(
        any(w.kind == TRIVIAL_CONDITIONAL for w in res.witnesses),
        "no TrivialConditional optimum",
    )
    for w in res.witnesses:
        rest = g.without_edges(w.edges)
        if has_perfect_matching(rest) or min(rest.degree(v) for v in range(g.n)) == 0:
            c.check(False, f"invalid optimum {w.edges}")
            break
    c.finish()


def test_criterion_11_hypotheses():
    c = Criterion(11)
    g = gen_dcell(2, 2)
    mp1 = mp1_number(g).number
    c.check(mp1 <= v_e(g)[0], f"mp1 {mp1} > v_e {v_e(g)[0]}")
    rng = random.Random(PERTURBATION_SEED)
    for _ in range(PERTURBATION_SAMPLES):
        size = rng.randint(0, 2)
        f = rng.sample(g.edges, size)
        if not has_perfect_matching(g.without_edges(f)):
            c.check(False, f"{f} destroys every perfect matching")
            break
    rep = hypothesis_report(g, 3)
    c.check(rep.alpha == 19 and rep.super_matched_alpha, f"alpha {rep.alpha} < 20 fails")
    c.finish()


def test_criterion_12_oracle_equivalence():
    c = Criterion(12)
    reports = corpus_crosscheck()
    bad = [r for r in reports if not r.agree]
    metrics = Counter(r.metric for r in reports)
    c.check(not bad, f"{len(bad)} disagreements, first {bad[:1]}")
    c.check(metrics["lambda1"] >= 200 and metrics["mp"] > 0 and metrics["mp1"] > 0, "corpus too small")
    c.finish()


def test_criterion_13_end_to_end(tmp_path):
    c = Criterion(13)
    out = tmp_path / "report.json"
    code = cli_main(["verify-paper", "--json", str(out)])
    doc = json.loads(out.read_text())
    claims = doc["claims"]
    fails = [e["claim_id"] for e in claims if e["status"] == "FAIL"]
    c.check(code == 0, f"exit code {code}")
    c.check(len(claims) >= 20, f"only {len(claims)} claim records")
    c.check(not fails, f"FAIL entries: {fails}")
    c.check(revalidate_report(doc) == [], "witness re-validation failed")
    c.check(sum(1 for e in claims if "witness" in e) > 0, "no witnesses embedded")
    c.finish()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
