"""Command-line entry point.

Exit codes: 0 success, 1 validation failure or falsified check, 2 usage error
(including bound violations).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import cross_sections as cs_mod
from . import isn, oracle, verify, wreath
from .config import load_bounds
from .counting import count_noniso_wreath, count_r_cross_sections_isn, noniso_wreath_terms, partition_count
from .errors import ParseError, RankTooLarge, SemigroupError, TheoremFalsified
from .semigroup import FiniteSemigroup

THEOREMS = ("isom-conjugacy-isn", "isom-conjugacy-wreath", "green-criteria", "counting", "gm-classification")


class UsageError(Exception):
    pass


def _emit_elements(elements, fmt: str, out) -> None:
    for x in elements:
        if fmt == "json":
            out.write(json.dumps(x.to_json()) + "\n")
        else:
            out.write(str(x) + "\n")


def cmd_enumerate(args, bounds, out) -> int:
    if args.semigroup == "isn":
        elements = isn.enumerate_is(args.n, max_n=bounds.max_n)
    else:
        if args.m is None:
            raise UsageError("--m is required for --semigroup wreath")
        elements = wreath.enumerate_wreath(args.m, args.n, spot=args.spot, bounds=bounds)
    if args.count_only:
        out.write(f"{len(elements)}\n")
    else:
        _emit_elements(elements, args.format, out)
    return 0


def _build(args):
    op = cs_mod.parse_partition(args.partition)
    if args.components is None:
        if args.kind == "R":
            return cs_mod.build_r_cross_section(op)
        return cs_mod.build_l_cross_section(op)
    if args.m is None:
        raise UsageError("--m is required with --components")
    comps = [cs_mod.parse_partition(c, args.m) for c in args.components]
    if args.kind == "R":
        return cs_mod.build_wreath_r_cross_section(op, comps)
    return cs_mod.build_wreath_l_cross_section(op, comps)


def cmd_cross_section(args, bounds, out, stdin) -> int:
    if args.action == "build":
        cs = _build(args)
        if args.count_only:
            out.write(f"{len(cs)}\n")
        elif args.format == "json":
            out.write(json.dumps(cs.to_json()) + "\n")
        else:
            out.write(f"# {cs.kind}-cross-section of {cs.ambient}"
                      + (f" from {cs.partition}" if cs.partition else "") + "\n")
            _emit_elements(cs.elements, "text", out)
        return 0
    text = open(args.infile).read() if args.infile else stdin.read()
    try:
        cs = cs_mod.CrossSection.from_json(json.loads(text))
    except (json.JSONDecodeError, SemigroupError, ValueError) as exc:
        raise ParseError(f"cannot read cross-section: {exc}") from exc
    diag = cs_mod.validate_cross_section(cs.elements, cs.ambient, cs.kind, bounds=bounds)
    out.write(f"{'VALID' if diag else 'INVALID'} {cs.kind}-cross-section of {cs.ambient}: {diag}\n")
    return 0 if diag else 1


def cmd_verify(args, bounds, out) -> int:
    t = args.theorem
    if t == "isom-conjugacy-isn":
        report = verify.isom_conjugacy_isn(args.n, jobs=args.jobs, bounds=bounds)
    elif t == "isom-conjugacy-wreath":
        if args.m is None:
            raise UsageError("--m is required")
        report = verify.isom_conjugacy_wreath(args.m, args.n, jobs=args.jobs, bounds=bounds)
    elif t == "green-criteria":
        report = verify.green_criteria(args.m, args.n, bounds=bounds)
    elif t == "counting":
        report = verify.counting(args.m, args.n, bounds=bounds)
    else:
        report = verify.gm_classification(args.n, bounds=bounds)
    out.write(report.summary() + "\n")
    if not report.passed:
        out.write(json.dumps({"counterexample": report.counterexample}) + "\n")
        return 1
    return 0


def cmd_count(args, out) -> int:
    if args.pn is not None:
        out.write(f"{partition_count(args.pn)}\n")
    elif args.isn is not None:
        out.write(f"{count_r_cross_sections_isn(args.isn)}\n")
    else:
        if args.m is None or args.n is None:
            raise UsageError("--noniso needs --m and --n")
        if args.m < 1 or args.n < 1:
            raise UsageError("--m and --n must be positive")
        terms = [{"j": list(pv.j), "value": v} for pv, v in noniso_wreath_terms(args.m, args.n)]
        out.write(json.dumps({"m": args.m, "n": args.n, "count": count_noniso_wreath(args.m, args.n),
                              "terms": terms}) + "\n")
    return 0


def cmd_oracle(args, bounds, out) -> int:
    if args.m is None:
        elements = isn.enumerate_is(args.n, max_n=bounds.max_n)
    else:
        if not args.allow_wreath:
            raise UsageError("wreath search is opt-in: pass --allow-wreath")
        elements = wreath.enumerate_wreath(args.m, args.n, bounds=bounds)
    S = FiniteSemigroup.from_elements(elements)
    oracle.stream_cross_sections_jsonl(S, args.kind, out, time_budget=args.time_budget)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iswreath", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="key=value bounds file (default: $IW_CONFIG)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list all elements of IS_n or IS_m wr IS_n")
    e.add_argument("--semigroup", choices=("isn", "wreath"), default="isn")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int)
    e.add_argument("--spot", action="store_true", help="allow the spot-check wreath bound")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--count-only", action="store_true")

    c = sub.add_parser("cross-section", help="build or validate cross-sections")
    c.add_argument("action", choices=("build", "validate"))
    c.add_argument("--kind", choices=("R", "L"), default="R")
    c.add_argument("--partition", help='ordered partition such as "[1<2][3]"')
    c.add_argument("--m", type=int, help="inner rank (wreath mode)")
    c.add_argument("--components", nargs="+", help="one IS_m partition per block, in block order")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--count-only", action="store_true")
    c.add_argument("--in", dest="infile", help="JSON cross-section (default: stdin)")

    v = sub.add_parser("verify", help="run an exhaustive theorem check")
    v.add_argument("--theorem", choices=THEOREMS, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int)
    v.add_argument("--jobs", type=int, default=1)

    k = sub.add_parser("count", help="partition numbers and cross-section counts")
    g = k.add_mutually_exclusive_group(required=True)
    g.add_argument("--noniso", action="store_true", help="non-isomorphic R-cross-sections of IS_m wr IS_n")
    g.add_argument("--pn", type=int, help="number of integer partitions of N")
    g.add_argument("--isn", type=int, help="number of R-cross-sections of IS_N")
    k.add_argument("--m", type=int)
    k.add_argument("--n", type=int)

    o = sub.add_parser("oracle", help="stream every cross-section found by exhaustive search (JSON lines)")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--m", type=int)
    o.add_argument("--kind", choices=("R", "L"), default="R")
    o.add_argument("--allow-wreath", action="store_true")
    o.add_argument("--time-budget", type=float, default=60.0, help="seconds before the search gives up (exit 2)")
    return p


def main(argv=None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        bounds = load_bounds(args.config)
        if args.command == "enumerate":
            return cmd_enumerate(args, bounds, out)
        if args.command == "cross-section":
            if args.action == "build" and not args.partition:
                raise UsageError("build needs --partition")
            return cmd_cross_section(args, bounds, out, stdin)
        if args.command == "verify":
            return cmd_verify(args, bounds, out)
        if args.command == "count":
            return cmd_count(args, out)
        return cmd_oracle(args, bounds, out)
    except TheoremFalsified as exc:
        print(f"iswreath: FALSIFIED: {exc}", file=sys.stderr)
        return 1
    except (UsageError, RankTooLarge, ParseError, SemigroupError, ValueError, OSError) as exc:
        print(f"iswreath: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
