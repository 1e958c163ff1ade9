"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import core
from .dsl import format_ratfun, parse_spec
from .errors import SpecSyntaxError
from .ratfun import series_expand
from .verify import verify_spec

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2
INLINE_PREFIX = "spec:"


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="recsquares",
        description="Exact generating functions for the squares of linear recurrences.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_spec(p):
        p.add_argument("--spec", required=True, help="spec file path, or inline source prefixed with 'spec:'")

    def with_format(p):
        p.add_argument("--format", choices=("plain", "latex", "json"), default="plain")

    p = sub.add_parser("gf", help="print sum a_n^2 x^n")
    with_spec(p)
    with_format(p)

    p = sub.add_parser("series", help="print the coefficients a_0^2..a_N^2")
    with_spec(p)
    p.add_argument("--terms", type=_nonneg, default=10, help="N (default 10)")

    p = sub.add_parser("verify", help="check the closed form against brute force")
    with_spec(p)
    p.add_argument("--terms", type=_nonneg, default=core.DEFAULT_TERMS,
                   help=f"verification depth N (default {core.DEFAULT_TERMS})")

    p = sub.add_parser("weighted", help="print sum n a_n^2 x^n")
    with_spec(p)
    with_format(p)

    p = sub.add_parser("table", help="generating function for a built-in family")
    p.add_argument("--family", required=True, choices=sorted(core.FAMILIES))
    p.add_argument("--k", required=True, type=int)
    with_format(p)
    return parser


def load_spec(source: str) -> core.RecurrenceSpec:
    if source.startswith(INLINE_PREFIX):
        text, origin = source[len(INLINE_PREFIX):], "<inline>"
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read spec file {source!r}: {exc.strerror}") from None
        origin = source
    try:
        return parse_spec(text)
    except SpecSyntaxError as exc:
        raise InputError(f"{origin}:{exc}") from None


def _warn_order(spec: core.RecurrenceSpec) -> None:
    if not spec.is_minimal_order():
        print(
            f"warning: p_{spec.order} = 0, so order {spec.order} is not minimal",
            file=sys.stderr,
        )


def run(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    if args.command == "table":
        try:
            spec = core.FAMILIES[args.family](args.k)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        spec = load_spec(args.spec)
        _warn_order(spec)

    if args.command in ("gf", "table"):
        print(format_ratfun(core.gf_squares(spec), args.format), file=out)
    elif args.command == "weighted":
        print(format_ratfun(core.weighted_gf(spec), args.format), file=out)
    elif args.command == "series":
        for c in series_expand(core.gf_squares(spec), args.terms):
            print(c, file=out)
    elif args.command == "verify":
        if args.terms < 1:
            raise InputError("--terms must be at least 1 for verify")
        report = verify_spec(spec, args.terms)
        for line in report.lines():
            print(line, file=out)
        return EXIT_OK if report.ok else EXIT_MISMATCH
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
