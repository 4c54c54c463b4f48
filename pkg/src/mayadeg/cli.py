"""
Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
violation, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import InvariantError, OracleSizeError, ParseError
from .maya import RimHookSpec, diagram_leq, render, rim_hook, from_maya, to_maya
from .oracle import verify_space
from .qdegree import (
    ChainTrace, exponent_form, format_degree, graded_degree, greedy_min_degree,
)
from .weyl import (
    FlagShape, enumerate_cosets, count_cosets, format_coset,
    parse_coset, parse_flag,
)

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def output_record(shape: FlagShape, total, trace: ChainTrace) -> dict:
    """JSON-ready record of a minimal degree computation."""
    return {
        "flag": {"n": shape.n, "dims": list(shape.dims)},
        "v": format_coset(trace.start),
        "w": format_coset(trace.target),
        "min_degree": list(total),
        "exponent_form": exponent_form(total),
        "graded_degree": graded_degree(shape, total),
        "chain": [
            {"q": s.spec.q, "t": s.spec.t, "degree": list(s.degree), "coset": format_coset(s.result)}
            for s in trace.steps
        ],
    }


def record_json(record: dict) -> str:
    return json.dumps(record)


def mindeg_record(shape: FlagShape, v_text: str, w_text: str) -> dict:
    v, w = parse_coset(shape, v_text), parse_coset(shape, w_text)
    total, trace = greedy_min_degree(v, w)
    return output_record(shape, total, trace)


def format_chain(trace: ChainTrace, color: bool = False) -> str:
    """Diagrams of every coset along the greedy chain, then the target."""
    parts = [f"v = {format_coset(trace.start)}", render(to_maya(trace.start), color)]
    for s in trace.steps:
        parts.append("")
        parts.append(f"--({s.spec.q},{s.spec.t}) {exponent_form(s.degree)}--> {format_coset(s.result)}")
        parts.append(render(to_maya(s.result), color))
    parts.append("")
    parts.append(f"w = {format_coset(trace.target)}")
    parts.append(render(to_maya(trace.target), color))
    return "\n".join(parts)


def cmd_mindeg(args) -> int:
    shape = parse_flag(args.flag)
    v, w = parse_coset(shape, args.v), parse_coset(shape, args.w)
    total, trace = greedy_min_degree(v, w)
    if args.json:
        print(record_json(output_record(shape, total, trace)))
        return EXIT_OK
    print(format_degree(total))
    print(exponent_form(total))
    if args.show_chain:
        print()
        print(format_chain(trace, args.color))
    return EXIT_OK


def cmd_rimhook(args) -> int:
    shape = parse_flag(args.flag)
    v = parse_coset(shape, args.v)
    spec = RimHookSpec(args.q, args.t)
    spec.check(shape)
    mv = to_maya(v)
    result = rim_hook(mv, spec)
    print(format_coset(from_maya(result)))
    print()
    print(render(mv, args.color))
    print()
    print(render(result, args.color))
    return EXIT_OK


def cmd_bruhat(args) -> int:
    shape = parse_flag(args.flag)
    v, w = parse_coset(shape, args.v), parse_coset(shape, args.w)
    print("true" if diagram_leq(to_maya(w), to_maya(v)) else "false")
    return EXIT_OK


def cmd_verify(args) -> int:
    shape = parse_flag(args.flag)
    report = verify_space(shape, cap_margin=args.cap_margin, jobs=args.jobs)
    print("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    shape = parse_flag(args.flag)
    if args.count_only:
        print(count_cosets(shape))
        return EXIT_OK
    for c in enumerate_cosets(shape):
        print(format_coset(c))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mayadeg", description="Minimal quantum degrees on partial flag varieties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def flag_arg(p):
        p.add_argument("--flag", required=True, help="flag shape 'i1,...,ik/n'")

    p = sub.add_parser("mindeg", help="minimal quantum degree of sigma^v * sigma_w")
    flag_arg(p)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--json", action="store_true", help="emit one JSON record")
    p.add_argument("--show-chain", action="store_true", help="draw the Maya diagram chain")
    p.add_argument("--color", action="store_true", help="ANSI colors (ignored if NO_COLOR is set)")
    p.set_defaults(func=cmd_mindeg)

    p = sub.add_parser("rimhook", help="apply one generalized qt-rim hook")
    flag_arg(p)
    p.add_argument("--v", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--color", action="store_true")
    p.set_defaults(func=cmd_rimhook)

    p = sub.add_parser("bruhat", help="print whether w <= v in Bruhat order")
    flag_arg(p)
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_bruhat)

    p = sub.add_parser("verify", help="sweep all pairs of a small space against the oracles")
    flag_arg(p)
    p.add_argument("--cap-margin", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list minimal coset representatives")
    flag_arg(p)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OracleSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
