"""Verification runner: evaluate catalog claims, cross-check, serialise, replay."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from . import __version__
from .claims import (
    ClaimRecord,
    claims_for,
    complete_claims,
    star_claims,
)
from .graph import Graph, components
from .independence import independence_number, is_independent
from .limits import Budget, BudgetExceeded, CapExceeded, budget_ms_from_env, worker_count
from .matching import (
    TRIVIAL,
    mp1_number,
    mp_number,
    search_cost,
    v_e,
)
from .mincut import CutWitness, edge_connectivity
from .oracle import (
    CORPUS_SEED,
    OracleReport,
    compare,
    random_corpus,
    named_graphs,
    brute_alpha,
    brute_lambda_k_bipartition,
    brute_mp,
    brute_super_lambda_k,
)
from .restricted import LadderResult, connected_subsets, lambda_k, xi_k
from .topology import (
    VertexMap,
    check_adjacency_preserving,
    dcell_star_map,
    gen_complete,
    gen_dcell,
    gen_star,
    size_t,
)

SCHEMA_VERSION = 1

PASS = "PASS"
FAIL = "FAIL"
SKIP_LARGE = "SKIPPED-too-large"
SKIP_NOT_STATED = "SKIPPED-not-stated"

DEFAULT_MAX_ORDER = 500

# Size gates. An instance above a gate is reported SKIPPED-too-large without
# being attempted; the limits keep the default plan well inside its budget.
PAIR_SWEEP_LIMIT = 3 * 10**8  # anchors * other sets * |E| for one ladder rung
MATCHING_TEST_CAP = 2 * 10**6  # candidate sets for one exhaustive search
ALPHA_NODE_CAP = 2 * 10**5
ORACLE_BIPARTITION_LIMIT = 16  # vertices
ORACLE_MP_CAP = 2 * 10**5
ORACLE_ALPHA_LIMIT = 20  # vertices


class TooLarge(Exception):
    """The computation is predicted to exceed the desk-scale gates."""


def default_plan(max_order: int = DEFAULT_MAX_ORDER) -> list[tuple[int, int]]:
    """All D_{k,n} with k >= 1 and at most ``max_order`` vertices."""
    plan = []
    k = 1
    while size_t(k, 2) <= max_order:
        n = 2
        while size_t(k, n) <= max_order:
            plan.append((k, n))
            n += 1
        k += 1
    return plan


def build_graph(family: str, params: tuple[int, int]) -> Graph:
    if family == "dcell":
        return gen_dcell(*params)
    if family == "star":
        return gen_star(*params)
    if family == "complete":
        return gen_complete(params[0])
    raise ValueError(f"unknown family {family!r}")


# -- witness (de)serialisation ------------------------------------------------

def _cut_json(k: int, w: CutWitness) -> dict:
    return {
        "kind": "cut",
        "k": k,
        "side": sorted(w.side),
        "cut_edges": [list(e) for e in w.cut_edges],
    }


def _check_cut(g: Graph, wit: dict, value: int) -> bool:
    side = set(wit["side"])
    cut = [tuple(e) for e in wit["cut_edges"]]
    if not side or len(side) == g.n or g.boundary(side) != cut or len(cut) != value:
        return False
    return min(len(c) for c in components(g, cut)) >= wit["k"]


def validate_witness(g: Graph, metric: str, computed: Any, wit: dict | None) -> bool:
    """Replay a serialised witness against the regenerated graph."""
    if wit is None:
        return True
    kind = wit["kind"]
    if kind == "cut":
        return _check_cut(g, wit, computed)
    if kind == "vertex_set":
        xs = set(wit["vertices"])
        sub = Graph.from_edges(g.n, [e for e in g.edges if e[0] in xs and e[1] in xs])
        comp_of_first = next(c for c in components(sub) if min(xs) in c)
        return (
            len(xs) == wit["k"]
            and xs <= comp_of_first
            and len(g.boundary(xs)) == computed
        )
    if kind == "independent_set":
        return is_independent(g, wit["vertices"]) and len(wit["vertices"]) == computed
    if kind == "preclusion_set":
        edges = [tuple(e) for e in wit["edges"]]
        if len(edges) != wit["size"]:
            return False
        rest = g.without_edges(edges)
        if wit["conditional"] and any(rest.degree(v) == 0 for v in range(g.n)):
            return False
        if _has_perfect_matching_nx(rest):
            return False
        if metric in ("mp", "mp1"):
            return wit["size"] == computed
        if metric == "super_matched":
            # a refutation must show a non-trivial optimum
            return computed is True or wit["class"] != TRIVIAL
        return True
    if kind == "ladder":
        cut = wit["cut"]
        if not _check_cut(g, cut, wit["lambda_k"]):
            return False
        k = wit["k"]
        if computed:
            return cut["k"] == k
        return cut["k"] == k + 1
    if kind == "vertex_map":
        h = gen_star(*wit["star"])
        return check_adjacency_preserving(g, h, VertexMap(tuple(wit["forward"]))) == computed
    return False


def _has_perfect_matching_nx(g: Graph) -> bool:
    """True when ``g`` still has a perfect matching (blossom-independent check)."""
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    return 2 * len(nx.max_weight_matching(nxg, maxcardinality=True)) == g.n


# -- per-instance evaluation -------------------------------------------------

@dataclass
class ClaimResult:
    claim: ClaimRecord
    status: str
    computed: Any = None
    runtime_ms: float = 0.0
    witness: dict | None = None
    oracle: Any = None
    note: str = ""

    def to_json(self) -> dict:
        c = self.claim
        out = {
            "claim_id": c.id,
            "family": c.family,
            "params": list(c.params),
            "metric": c.metric,
            "expected": c.expected,
            "computed": self.computed,
            "status": self.status,
            "runtime_ms": round(self.runtime_ms, 3),
            "source": c.source,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.oracle is not None:
            out["oracle"] = self.oracle
        if self.note:
            out["note"] = self.note
        return out


class Instance:
    """Lazily computed, shared quantities for one graph."""

    def __init__(self, family: str, params: tuple[int, int], budget_ms: float | None):
        self.family = family
        self.params = params
        self.g = build_graph(family, params)
        self.budget_ms = budget_ms
        self._ladder: dict[int, Any] = {}
        self._mp: dict[bool, Any] = {}

    def budget(self) -> Budget:
        return Budget(self.budget_ms)

    # restricted connectivity ladder, each rung seeded with the one below
    def ladder(self, k: int):
        if k in self._ladder:
            got = self._ladder[k]
            if isinstance(got, Exception):
                raise got
            return got
        try:
            if k == 1:
                res = edge_connectivity(self.g)
                value = LadderResult(1, res.value, res.witness, "max-flow")
            else:
                below = self.ladder(k - 1)
                self._gate_sweep(k)
                floor = below.value if below.defined else None
                value = lambda_k(self.g, k, lower_bound=floor, budget=self.budget())
        except (TooLarge, CapExceeded) as exc:
            self._ladder[k] = exc
            raise
        self._ladder[k] = value
        return value

    def _gate_sweep(self, k: int) -> None:
        g = self.g
        if 2 * k > g.n:
            return
        limit = PAIR_SWEEP_LIMIT // max(g.m, 1)
        anchors = 0
        for _ in connected_subsets(g, k, containing=0):
            anchors += 1
        others = 0
        for _ in connected_subsets(g, k):
            others += 1
            if anchors * others > limit:
                raise TooLarge(f"lambda_{k} pair sweep exceeds the desk gate")

    def preclusion(self, conditional: bool, exhaustive: bool = True):
        """Ascending preclusion search; None for odd order.

        The exhaustive run lists every optimum and serves both kinds of
        request. A value-only request stops at the first optimum, so its gate
        counts the candidate sets strictly below the degree-based bound.
        """
        if self.g.n % 2:
            return None
        for key in ((conditional, True), (conditional, exhaustive)):
            if key in self._mp:
                got = self._mp[key]
                if not isinstance(got, Exception):
                    return got
                if key[1] == exhaustive:
                    raise got
        g = self.g
        key = (conditional, exhaustive)
        try:
            bound = v_e(g)[0] if conditional else min(g.degree(v) for v in range(g.n))
            if search_cost(g.m, bound if exhaustive else bound - 1) > MATCHING_TEST_CAP:
                raise TooLarge("preclusion search exceeds the desk gate")
            search = mp1_number if conditional else mp_number
            value = search(g, exhaustive=exhaustive, cap=MATCHING_TEST_CAP, budget=self.budget())
        except (TooLarge, CapExceeded) as exc:
            self._mp[key] = exc
            raise
        self._mp[key] = value
        return value

    # metric evaluators return (computed, witness json, oracle value or None)

    def evaluate(self, metric: str) -> tuple[Any, dict | None, Any]:
        g = self.g
        small = g.n <= ORACLE_BIPARTITION_LIMIT
        if metric in ("lambda", "lambda2", "lambda3"):
            k = {"lambda": 1, "lambda2": 2, "lambda3": 3}[metric]
            res = self.ladder(k)
            wit = _cut_json(k, res.witness) if res.witness is not None else None
            oracle = brute_lambda_k_bipartition(g, k) if small else None
            return res.value, wit, oracle
        if metric in ("xi2", "xi3"):
            k = int(metric[-1])
            value, xs = xi_k(g, k)
            return value, {"kind": "vertex_set", "k": k, "vertices": list(xs)}, None
        if metric in ("super_lambda", "super_lambda2", "super_lambda3"):
            k = {"super_lambda": 1, "super_lambda2": 2, "super_lambda3": 3}[metric]
            low = self.ladder(k)
            if not low.defined:
                return None, None, None
            high = self.ladder(k + 1)
            proven = not high.defined or high.value > low.value
            cut = _cut_json(k, low.witness) if proven else _cut_json(k + 1, high.witness)
            wit = {
                "kind": "ladder",
                "k": k,
                "lambda_k": low.value,
                "lambda_k_plus_1": high.value,
                "cut": cut,
            }
            oracle = brute_super_lambda_k(g, k) if small else None
            return proven, wit, oracle
        if metric == "alpha":
            try:
                res = independence_number(g, ALPHA_NODE_CAP)
            except CapExceeded as exc:
                raise TooLarge(str(exc)) from None
            oracle = brute_alpha(g) if g.n <= ORACLE_ALPHA_LIMIT else None
            return res.alpha, {"kind": "independent_set", "vertices": list(res.witness)}, oracle
        if metric in ("mp", "mp1"):
            conditional = metric == "mp1"
            try:
                res = self.preclusion(conditional)
            except TooLarge:
                res = self.preclusion(conditional, exhaustive=False)
            if res is None:
                return None, None, None
            wit = None
            if res.witnesses:
                w = res.witnesses[0]
                wit = {
                    "kind": "preclusion_set",
                    "conditional": conditional,
                    "size": len(w.edges),
                    "class": w.kind,
                    "edges": [list(e) for e in w.edges],
                }
            oracle = None
            if search_cost(g.m, res.number or 0) <= ORACLE_MP_CAP and g.n <= ORACLE_BIPARTITION_LIMIT:
                oracle = brute_mp(g, conditional)
            return res.number, wit, oracle
        if metric in ("super_matched", "cond_super_matched"):
            conditional = metric == "cond_super_matched"
            res = self.preclusion(conditional)
            if res is None:
                return None, None, None
            if res.number is None:
                return False, None, None
            if conditional:
                target = v_e(g)[0]
                good_kind = "TrivialConditional"
            else:
                target = min(g.degree(v) for v in range(g.n))
                good_kind = TRIVIAL
            bad = [w for w in res.witnesses if w.kind != good_kind]
            verdict = res.number == target and not bad
            shown = bad[0] if bad else res.witnesses[0]
            wit = {
                "kind": "preclusion_set",
                "conditional": conditional,
                "size": len(shown.edges),
                "class": shown.kind,
                "edges": [list(e) for e in shown.edges],
                "optimal_sets": len(res.witnesses),
                "classes": sorted(res.kinds()),
            }
            return verdict, wit, None
        if metric == "isomorphic_to_star":
            k, n = self.params
            if self.family != "dcell" or k != 1:
                return None, None, None
            m = dcell_star_map(n)
            ok = check_adjacency_preserving(g, gen_star(n + 1, 2), m)
            return ok, {"kind": "vertex_map", "star": [n + 1, 2], "forward": list(m.forward)}, None
        raise ValueError(f"unknown metric {metric!r}")


def _run_claim(inst: Instance, claim: ClaimRecord) -> ClaimResult:
    start = time.perf_counter()
    if not claim.desk_verifiable:
        status = SKIP_NOT_STATED if not claim.stated else SKIP_LARGE
        return ClaimResult(claim, status, note="instance beyond desk scale")
    try:
        computed, wit, oracle = inst.evaluate(claim.metric)
    except (TooLarge, CapExceeded) as exc:
        elapsed = (time.perf_counter() - start) * 1000
        status = SKIP_NOT_STATED if not claim.stated else SKIP_LARGE
        note = "time budget exhausted" if isinstance(exc, BudgetExceeded) else str(exc)
        return ClaimResult(claim, status, None, elapsed, note=note)
    elapsed = (time.perf_counter() - start) * 1000
    res = ClaimResult(claim, PASS, computed, elapsed, wit, oracle)
    if oracle is not None and oracle != computed:
        res.status = FAIL
        res.note = f"oracle disagrees: {oracle!r}"
    elif wit is not None and not validate_witness(inst.g, claim.metric, computed, wit):
        res.status = FAIL
        res.note = "witness failed re-validation"
    elif not claim.stated:
        res.status = SKIP_NOT_STATED
    elif computed != claim.expected:
        res.status = FAIL
    return res


def _run_instance(job: tuple[str, tuple[int, int], list[ClaimRecord], float | None, tuple[str, ...] | None]):
    family, params, claims, budget_ms, only = job
    inst = None
    out = []
    for claim in claims:
        if only is not None and claim.metric not in only:
            continue
        if inst is None and claim.desk_verifiable:
            inst = Instance(family, params, budget_ms)
        out.append(_run_claim(inst, claim) if inst else _run_claim(None, claim))  # type: ignore[arg-type]
    return out


def _fast_super(k: int):
    def run(g: Graph):
        low = lambda_k(g, k)
        if not low.defined:
            return None
        high = lambda_k(g, k + 1, lower_bound=low.value)
        return not high.defined or high.value > low.value

    return run


def _even(g: Graph) -> bool:
    return g.n % 2 == 0


def corpus_crosscheck(seed: int = CORPUS_SEED, count: int = 200) -> list[OracleReport]:
    """Fast paths against the oracles on the named graphs plus a seeded corpus."""
    corpus = named_graphs() + random_corpus(seed, count)
    reports: list[OracleReport] = []
    for k in (1, 2, 3):
        reports += compare(
            corpus,
            f"lambda{k}",
            lambda g, k=k: brute_lambda_k_bipartition(g, k),
            lambda g, k=k: lambda_k(g, k).value,
        )
        reports += compare(
            corpus, f"super_lambda{k}", lambda g, k=k: brute_super_lambda_k(g, k), _fast_super(k)
        )
    reports += compare(corpus, "mp", brute_mp, lambda g: mp_number(g).number, _even)
    reports += compare(
        corpus,
        "mp1",
        lambda g: brute_mp(g, conditional=True),
        lambda g: mp1_number(g).number,
        _even,
    )
    return reports


@dataclass
class VerificationReport:
    results: list[ClaimResult]
    seed: int
    tool_version: str = __version__
    plan: list[dict] = field(default_factory=list)
    corpus: list[OracleReport] | None = None

    @property
    def failures(self) -> list[ClaimResult]:
        return [r for r in self.results if r.status == FAIL]

    @property
    def disagreements(self) -> list[OracleReport]:
        return [r for r in self.corpus or [] if not r.agree]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures or self.disagreements else 0

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.results:
            out[r.status] = out.get(r.status, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "corpus_seed": self.seed,
            "plan": self.plan,
            "summary": self.counts(),
            "oracle_corpus": None
            if self.corpus is None
            else {
                "comparisons": len(self.corpus),
                "disagreements": [
                    {
                        "instance": r.instance,
                        "metric": r.metric,
                        "oracle": r.oracle_value,
                        "fast": r.fast_value,
                    }
                    for r in self.disagreements
                ],
            },
            "claims": [r.to_json() for r in self.results],
        }

    def table(self) -> str:
        rows = [("claim", "expected", "computed", "status", "ms")]
        for r in self.results:
            rows.append(
                (
                    r.claim.id,
                    str(r.claim.expected),
                    "-" if r.computed is None else str(r.computed),
                    r.status,
                    f"{r.runtime_ms:.0f}",
                )
            )
        widths = [max(len(row[i]) for row in rows) for i in range(5)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        summary = ", ".join(f"{k}={v}" for k, v in sorted(self.counts().items()))
        tail = ["", summary]
        if self.corpus is not None:
            tail.append(
                f"oracle corpus (seed {self.seed}): {len(self.corpus)} comparisons, "
                f"{len(self.disagreements)} disagreements"
            )
        return "\n".join(lines + tail)


def run_verification(
    plan: list[tuple[int, int]] | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
    slow: bool = False,
    seed: int = CORPUS_SEED,
    complete_range: range = range(4, 9),
    star_range: range = range(4, 7),
    budget_ms: float | None = None,
    metrics: tuple[str, ...] | None = None,
    corpus: bool = True,
    progress: Callable[[ClaimResult], None] | None = None,
) -> VerificationReport:
    """Evaluate the catalog for every instance in ``plan``.

    ``slow`` adds lambda and lambda2 of D_{3,2}. ``budget_ms`` is the wall-clock
    budget per computation (default from NETROBUST_BUDGET_MS). With ``corpus``
    the fast paths are also compared with the oracles on the seeded corpus.
    """
    if plan is None:
        plan = default_plan(max_order)
    if budget_ms is None:
        budget_ms = budget_ms_from_env()
    jobs = []
    for k, n in plan:
        jobs.append(("dcell", (k, n), claims_for(k, n), budget_ms, metrics))
    if slow:
        jobs.append(("dcell", (3, 2), claims_for(3, 2), budget_ms, ("lambda", "lambda2")))
    for n in complete_range:
        jobs.append(("complete", (n, 0), complete_claims(n), budget_ms, metrics))
    for n_prime in star_range:
        jobs.append(("star", (n_prime, 2), star_claims(n_prime), budget_ms, metrics))

    results: list[ClaimResult] = []
    workers = worker_count()
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            for batch in pool.map(_run_instance, jobs):
                results.extend(batch)
    else:
        for job in jobs:
            for r in _run_instance(job):
                if progress:
                    progress(r)
                results.append(r)
    results.sort(key=lambda r: r.claim.id)
    plan_json = [{"family": f, "params": list(p)} for f, p, *_ in jobs]
    checks = corpus_crosscheck(seed) if corpus else None
    return VerificationReport(results, seed, plan=plan_json, corpus=checks)


def revalidate_report(doc: dict) -> list[str]:
    """Replay every witness in a serialised report; returns failing claim ids."""
    bad = []
    graphs: dict[tuple, Graph] = {}
    for entry in doc["claims"]:
        wit = entry.get("witness")
        if wit is None:
            continue
        key = (entry["family"], tuple(entry["params"]))
        if key not in graphs:
            graphs[key] = build_graph(*key)
        if not validate_witness(graphs[key], entry["metric"], entry["computed"], wit):
            bad.append(entry["claim_id"])
    return bad


def write_report(report: VerificationReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_json(), fh, indent=2, sort_keys=False)
        fh.write("\n")
