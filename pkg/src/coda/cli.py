"""Command-line surface: evaluator, REPL, counter, space search and
analysis, and the demo runner.

Every subcommand is a thin adapter over the library; the primary output is
exactly what the corresponding API call renders.  Exit codes: 0 success,
1 demo assertion failure, 2 cap or overflow refusal.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .algebra import ProbeSet, default_probes
from .engine import Budget, Context, add_definition, evaluate
from .lang import parse, render
from .organic import DEMOS, SearchResult, search_spaces
from .prelude import prelude
from .spacelab import (
    CarrierOverflow,
    TooManyEndos,
    classify,
    enumerate_endos,
    extract_carrier,
    render_report,
)
from .terms import CapExceeded, SizeBound, count_pure_data, enumerate_pure_data

BUDGET_ENV = "CODA_BUDGET"


def _budget(args) -> Budget:
    steps = getattr(args, "budget", None)
    if steps is None:
        raw = os.environ.get(BUDGET_ENV)
        steps = int(raw) if raw else None
    if steps is None:
        return Budget()
    return Budget(max_steps=steps, max_nodes=max(10 * steps, 1))


def _load_preludes(paths: List[str]) -> Context:
    ctx = prelude()
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                ctx = _define(ctx, line) or ctx
    return ctx


def _define(ctx: Context, line: str) -> Optional[Context]:
    """Handle a `def name : body` line; None when it is not one."""
    if not line.startswith("def "):
        return None
    d = parse(line[4:])
    if len(d) == 1 and len(d[0].left) == 1:
        return add_definition(ctx, d[0].left[0], d[0].right)
    print(f"ignored malformed definition: {line}", file=sys.stderr)
    return ctx


def cmd_eval(args) -> int:
    src = args.expr
    if src == "-":
        src = sys.stdin.read()
    ctx = _load_preludes(args.prelude)
    out = evaluate(parse(src), ctx, _budget(args))
    print(render(out.result))
    if not out.normalized:
        print("budget exhausted; partial form shown", file=sys.stderr)
    return 0


def cmd_repl(args) -> int:
    ctx = _load_preludes(args.prelude)
    budget = _budget(args)
    print("coda repl; :quit to leave, :defs, :budget N", file=sys.stderr)
    while True:
        try:
            line = input("coda> ")
        except EOFError:
            print(file=sys.stderr)
            return 0
        except KeyboardInterrupt:
            print(file=sys.stderr)
            return 0
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(":"):
            parts = stripped.split()
            if parts[0] == ":quit":
                return 0
            if parts[0] == ":defs":
                print(" ".join(ctx.names()))
            elif parts[0] == ":budget" and len(parts) == 2 and parts[1].isdigit():
                steps = int(parts[1])
                budget = Budget(max_steps=steps, max_nodes=max(10 * steps, 1))
                print(f"budget set to {steps} steps", file=sys.stderr)
            else:
                print(f"unknown meta-command: {stripped}", file=sys.stderr)
            continue
        new_ctx = _define(ctx, stripped)
        if new_ctx is not None:
            ctx = new_ctx
            continue
        out = evaluate(parse(line), ctx, budget)
        print(render(out.result))
        if not out.normalized:
            print("budget exhausted; partial form shown", file=sys.stderr)


def cmd_count(args) -> int:
    bound = SizeBound(args.width, args.depth)
    n = count_pure_data(bound)
    if args.format == "tsv":
        print(f"{args.width}\t{args.depth}\t{n}")
    else:
        print(n)
    if args.enumerate:
        try:
            seen = sum(1 for _ in enumerate_pure_data(bound, cap=args.cap))
        except CapExceeded as exc:
            print(f"CapExceeded: {exc}", file=sys.stderr)
            return 2
        if seen != n:
            print(f"enumeration mismatch: {seen} != {n}", file=sys.stderr)
            return 1
        print(f"enumeration cross-check: {seen}", file=sys.stderr)
    return 0


def _print_search(results: List[SearchResult], fmt: str) -> None:
    for r in results:
        if fmt == "tsv":
            print(f"{r.source}\t{r.verdict.status}\t{r.verdict.checked}")
        else:
            print(f"{r.source}  [{r.verdict.status}, {r.verdict.checked} probes]")


def cmd_search(args) -> int:
    ctx = _load_preludes(args.prelude)
    try:
        results = search_spaces(args.words, args.max_len, ctx=ctx, cap=args.cap)
    except CapExceeded as exc:
        print(f"CapExceeded: {exc}", file=sys.stderr)
        return 2
    _print_search(results, args.format)
    return 0


def cmd_space(args) -> int:
    ctx = _load_preludes(args.prelude)
    space = parse(args.expr)
    probes = ProbeSet(default_probes().probes, budget=_budget(args))
    try:
        carrier = extract_carrier(space, probes, cap=args.cap, ctx=ctx,
                                  on_overflow="raise")
        endos = enumerate_endos(carrier, cap=args.endo_cap)
    except CarrierOverflow as exc:
        print(f"CarrierOverflow: {exc}", file=sys.stderr)
        return 2
    except TooManyEndos as exc:
        print(f"TooManyEndos: {exc}", file=sys.stderr)
        return 2
    report = classify(carrier, endos)
    print(render_report(report, fmt=args.format))
    return 0


def cmd_demo(args) -> int:
    try:
        report = DEMOS[args.name]()
    except (CapExceeded, CarrierOverflow, TooManyEndos) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    print(report.render(args.format))
    return 0 if report.passed else 1


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "tsv"), default="text",
                   help="output format (default text)")
    p.add_argument("--budget", type=int, default=None,
                   help=f"step budget (default {BUDGET_ENV} or 100000)")
    p.add_argument("--prelude", action="append", default=[], metavar="FILE",
                   help="definition file loaded before the command; repeatable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coda", description="evaluate, analyze and demo coda spaces"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression ('-' reads stdin)")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("repl", help="interactive session")
    _add_common(p)
    p.set_defaults(fn=cmd_repl)

    p = sub.add_parser("count", help="count pure data within a size bound")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--enumerate", action="store_true",
                   help="cross-check the count by enumeration")
    p.add_argument("--cap", type=int, default=100_000)
    _add_common(p)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("search", help="screen token sequences for associativity")
    p.add_argument("--words", nargs="*", default=[])
    p.add_argument("--max-len", type=int, default=2)
    p.add_argument("--cap", type=int, default=5_000)
    _add_common(p)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("space", help="carrier and endomorphism analysis")
    p.add_argument("action", choices=("analyze",))
    p.add_argument("expr")
    p.add_argument("--cap", type=int, default=64, help="carrier size cap")
    p.add_argument("--endo-cap", type=int, default=5 ** 5)
    _add_common(p)
    p.set_defaults(fn=cmd_space)

    p = sub.add_parser("demo", help="run a worked construction")
    p.add_argument("name", choices=sorted(DEMOS))
    _add_common(p)
    p.set_defaults(fn=cmd_demo)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
