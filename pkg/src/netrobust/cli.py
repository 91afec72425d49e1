"""Command-line entry point: ``netrobust <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Any

from . import __version__
from .graph import GraphFormatError, read_graph_file, write_graph
from .independence import independence_number
from .limits import CapExceeded
from .matching import (
    cond_super_matched_status,
    mp1_number,
    mp_number,
    super_matched_status,
    v_e,
)
from .mincut import CutWitness, edge_connectivity
from .oracle import (
    CORPUS_SEED,
    brute_alpha,
    brute_lambda_k,
    brute_lambda_k_bipartition,
    brute_mp,
    brute_super_lambda_k,
)
from .restricted import classify_super_lambda_k, lambda_k, xi_k
from .topology import (
    check_adjacency_preserving,
    dcell_star_map,
    gen_dcell,
    gen_star,
)
from .verify import DEFAULT_MAX_ORDER, revalidate_report, run_verification, write_report

METRICS = ("lambda", "lambda2", "lambda3", "lambdak", "xi", "alpha", "ve", "mp", "mp1")
PROPERTIES = ("super-lambda", "super-lambda2", "super-lambda3", "super-matched", "cond-super-matched")
ORACLE_METRICS = ("lambda", "lambda2", "lambda3", "lambdak", "super-lambdak", "alpha", "mp", "mp1")


def _plain(obj: Any) -> Any:
    """Make dataclasses, sets and fractions JSON friendly."""
    if isinstance(obj, CutWitness):
        return {
            "side": sorted(obj.side),
            "cut_edges": [list(e) for e in obj.cut_edges],
            "component_sizes": list(obj.component_sizes),
        }
    if hasattr(obj, "__dataclass_fields__"):
        return _plain(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def _emit(result: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(_plain(result), indent=2))
        return
    for key, value in result.items():
        print(f"{key}: {_plain(value)}")


def _metric_k(args) -> int:
    fixed = {"lambda": 1, "lambda2": 2, "lambda3": 3}
    if args.metric in fixed:
        return fixed[args.metric]
    if args.k is None:
        raise SystemExit(f"--metric {args.metric} needs --k")
    return args.k


def cmd_gen(args) -> int:
    if args.family == "dcell":
        g = gen_dcell(args.k, args.n)
    else:
        g = gen_star(args.n, args.k)
    text = write_graph(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {g.n} vertices, {g.m} edges to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(args) -> int:
    g = read_graph_file(args.file)
    out: dict[str, Any] = {"metric": args.metric, "vertices": g.n, "edges": g.m}
    if args.metric in ("lambda", "lambda2", "lambda3", "lambdak"):
        k = _metric_k(args)
        if k == 1:
            res = edge_connectivity(g)
            out.update(k=1, value=res.value, witness=res.witness)
        else:
            res = lambda_k(g, k)
            out.update(k=k, value=res.value if res.defined else "NotDefined", witness=res.witness)
    elif args.metric == "xi":
        if args.k is None:
            raise SystemExit("--metric xi needs --k")
        value, xs = xi_k(g, args.k)
        out.update(k=args.k, value=value, witness=list(xs))
    elif args.metric == "alpha":
        res = independence_number(g)
        out.update(value=res.alpha, witness=list(res.witness), matching_bound=res.proof_bound)
    elif args.metric == "ve":
        value, path = v_e(g)
        out.update(value=value, path=list(path))
    else:
        search = mp1_number if args.metric == "mp1" else mp_number
        res = search(g, exhaustive=args.exhaustive)
        out.update(
            value=res.number,
            tests=res.tests,
            optimal_sets=[{"edges": w.edges, "kind": w.kind, "anchor": w.anchor} for w in res.witnesses],
        )
        if args.exhaustive:
            out["kinds"] = sorted(res.kinds())
    _emit(out, args.json)
    return 0


def cmd_classify(args) -> int:
    g = read_graph_file(args.file)
    prop = args.property
    if prop.startswith("super-lambda"):
        k = {"super-lambda": 1, "super-lambda2": 2, "super-lambda3": 3}[prop]
        status = classify_super_lambda_k(g, k)
    elif prop == "super-matched":
        status = super_matched_status(g)
    else:
        status = cond_super_matched_status(g)
    _emit({"property": prop, "verdict": status.verdict, "evidence": status.evidence}, args.json)
    return 0


def cmd_isocheck(args) -> int:
    g = gen_dcell(1, args.n)
    h = gen_star(args.n + 1, 2)
    ok = check_adjacency_preserving(g, h, dcell_star_map(args.n))
    print(f"D_1,{args.n} -> S_{args.n + 1},2 map is {'an isomorphism' if ok else 'NOT an isomorphism'}")
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    g = read_graph_file(args.file)
    out: dict[str, Any] = {"metric": args.metric}
    if args.metric in ("lambda", "lambda2", "lambda3", "lambdak"):
        k = _metric_k(args)
        oracle = brute_lambda_k_bipartition(g, k)
        fast = edge_connectivity(g).value if k == 1 else lambda_k(g, k).value
        if args.literal:
            out["literal_edge_subsets"] = brute_lambda_k(g, k)
    elif args.metric == "super-lambdak":
        if args.k is None:
            raise SystemExit("--metric super-lambdak needs --k")
        oracle = brute_super_lambda_k(g, args.k)
        fast = None if oracle is None else classify_super_lambda_k(g, args.k).verdict == "Proven"
    elif args.metric == "alpha":
        oracle = brute_alpha(g)
        fast = independence_number(g).alpha
    else:
        conditional = args.metric == "mp1"
        oracle = brute_mp(g, conditional)
        fast = (mp1_number if conditional else mp_number)(g).number
    out.update(oracle=oracle, fast=fast, agree=oracle == fast)
    _emit(out, args.json)
    return 0 if oracle == fast else 1


def cmd_verify(args) -> int:
    def progress(r):
        if args.verbose:
            print(f"{r.claim.id}: {r.status}", file=sys.stderr)

    report = run_verification(
        max_order=args.max_order, slow=args.slow, seed=args.seed, progress=progress
    )
    print(report.table())
    if args.json:
        write_report(report, args.json)
        with open(args.json, encoding="utf-8") as fh:
            bad = revalidate_report(json.load(fh))
        print(f"report written to {args.json}; witness re-validation failures: {len(bad)}")
        if bad:
            return 1
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netrobust",
        description="Exact edge-connectivity and matching-preclusion analysis of DCell networks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a DCell or (n',k')-star graph")
    p.add_argument("--family", choices=("dcell", "star"), required=True)
    p.add_argument("--k", type=int, required=True, help="DCell level, or k' for star graphs")
    p.add_argument("--n", type=int, required=True, help="DCell base, or n' for star graphs")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="compute one metric of a graph file")
    p.add_argument("--metric", choices=METRICS, required=True)
    p.add_argument("--k", type=int, help="subset size for lambdak and xi")
    p.add_argument("--exhaustive", action="store_true", help="list every optimal preclusion set")
    p.add_argument("--json", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="decide a super-connectivity or matching property")
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("isocheck", help="check the D_{1,n} to S_{n+1,2} map")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_isocheck)

    p = sub.add_parser("oracle", help="compare a fast metric with its brute-force oracle")
    p.add_argument("--metric", choices=ORACLE_METRICS, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--literal", action="store_true", help="also run the edge-subset lambda_k oracle")
    p.add_argument("--json", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify-paper", help="check every desk-scale catalog claim")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.add_argument("--slow", action="store_true", help="add lambda and lambda2 of D_{3,2}")
    p.add_argument("--seed", type=int, default=CORPUS_SEED)
    p.add_argument("--json", metavar="OUT", help="write the JSON report here")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
