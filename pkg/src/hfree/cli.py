"""Command-line front end.

Subcommands: classify (dichotomy verdict for a pattern), churn (pattern
stripping trace), reduce (apply one reduction step to an instance), solve
(decide one instance), verify (equivalence and property campaigns).  All
output is JSON, UTF-8, newline-terminated.  Exit codes: 0 for success (a
"yes" answer, a clean report), 1 for a "no" answer or a report with
problems, 2 for errors of any sort.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .classify import classify, deletion_churn, editing_churn
from .formats import GraphParseError, graph_to_obj, parse_graph
from .graphs import Graph
from .problems import (
    ContractViolationError,
    Instance,
    instance_from_obj,
    kind_from_str,
)
from .reductions import (
    reduce_degree_max,
    complement_reduce,
    reduce_degree,
    reduce_sparse_case1,
    reduce_sparse_vh,
    reduce_sparse_vl,
    reduce_tdiamond,
)
from .solve import BruteForceCapExceeded, solve_instance
from .verify import SUITE_NAMES, run_suites


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _load_instance(path: str) -> Instance:
    return instance_from_obj(json.loads(_read_text(path)))


def _emit(obj: Any, out: str | None) -> None:
    text = json.dumps(obj) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_classify(args: argparse.Namespace) -> int:
    h = _load_graph(args.input)
    verdict = classify(h, kind_from_str(args.kind))
    _emit(verdict.to_obj(), args.out)
    return 0


def cmd_churn(args: argparse.Namespace) -> int:
    h = _load_graph(args.input)
    if args.mode == "editing":
        terminal, steps = editing_churn(h)
    else:
        terminal, steps = deletion_churn(h)
    _emit(
        {
            "mode": args.mode,
            "input": graph_to_obj(h),
            "steps": [s.to_obj() for s in steps],
            "terminal": graph_to_obj(terminal),
        },
        args.out,
    )
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    inst = _load_instance(args.input)

    def pattern() -> Graph:
        if args.pattern is None:
            raise ValueError(f"step {args.step} needs --pattern")
        return _load_graph(args.pattern)

    if args.step == "complement-problem":
        out, step = complement_reduce(inst)
    elif args.step == "degree-reduce":
        if args.degree is None:
            raise ValueError("degree-reduce needs --degree")
        if args.variant == "max":
            out, step = reduce_degree_max(inst, pattern(), args.degree)
        else:
            out, step = reduce_degree(inst, pattern(), args.degree)
    elif args.step == "tdiamond-induction":
        if args.t is None:
            raise ValueError("tdiamond-induction needs --t")
        out, step = reduce_tdiamond(inst, args.t)
    elif args.step == "sparse-vl-strip":
        out, step = reduce_sparse_vl(inst, pattern())
    elif args.step == "sparse-vh-route":
        out, step = reduce_sparse_vh(inst, pattern())
    else:  # sparse-case1
        from .graphs import are_isomorphic

        h = pattern()
        out, step = reduce_sparse_case1(inst.g, inst.k, h)
        if inst.kind is not out.kind or not are_isomorphic(inst.h, step.source_h):
            raise ValueError(
                "sparse-case1 input must be a deletion instance of the "
                "pattern's high-centered 3-path"
            )
    _emit({"instance": out.to_obj(), "step": step.to_obj()}, args.out)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _load_instance(args.input)
    result = solve_instance(inst, engine=args.engine)
    _emit(result.to_obj(), args.out)
    return 0 if result.answer else 1


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suites(
        [args.suite],
        host_cap=args.host_cap,
        k_cap=args.k_cap,
        n_cap=args.n_cap,
        seed=args.seed,
        workers=args.workers,
    )
    _emit(report, args.out)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfree",
        description="Classify, reduce, and solve h-free edge modification problems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="dichotomy verdict for a pattern graph")
    p.add_argument("--input", required=True, help="pattern graph file (graph6 or JSON)")
    p.add_argument(
        "--kind",
        required=True,
        choices=["deletion", "completion", "editing"],
        help="modification kind",
    )
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("churn", help="pattern stripping trace")
    p.add_argument("--input", required=True, help="pattern graph file")
    p.add_argument("--mode", required=True, choices=["editing", "deletion"])
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_churn)

    p = sub.add_parser("reduce", help="apply one reduction step to an instance")
    p.add_argument("--input", required=True, help="instance JSON file")
    p.add_argument(
        "--step",
        required=True,
        choices=[
            "complement-problem",
            "degree-reduce",
            "tdiamond-induction",
            "sparse-vl-strip",
            "sparse-vh-route",
            "sparse-case1",
        ],
    )
    p.add_argument("--pattern", help="target pattern graph file")
    p.add_argument("--degree", type=int, help="degree threshold for degree-reduce")
    p.add_argument(
        "--variant",
        choices=["min", "max"],
        default="min",
        help="strip the low side (min) or the high side (max) of the pattern",
    )
    p.add_argument("--t", type=int, help="target size for tdiamond-induction")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="decide one instance exactly")
    p.add_argument("--input", required=True, help="instance JSON file")
    p.add_argument("--engine", choices=["branch", "brute"], default="branch")
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run verification campaigns")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=list(SUITE_NAMES) + ["all"],
        help="suite to run (default: all)",
    )
    p.add_argument("--host-cap", type=int, help="max host vertices for campaigns")
    p.add_argument("--k-cap", type=int, help="max budget for campaigns")
    p.add_argument("--n-cap", type=int, help="max vertices for pattern sweeps")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized audits")
    p.add_argument("--workers", type=int, default=1, help="parallel workers")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for cap in ("host_cap", "k_cap", "n_cap", "workers"):
        value = getattr(args, cap, None)
        if value is not None and value < 1:
            print(f"error: --{cap.replace('_', '-')} must be positive", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except BruteForceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        ValueError,
        ContractViolationError,
        GraphParseError,
        json.JSONDecodeError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
