"""Command-line front end.

Subcommands: check | classify | span | bench | parse.  Text and JSON
reports are deterministic: for fixed inputs, everything except the
duration counter is byte-identical regardless of --workers.

Exit codes: 0 = requested statements hold (or command succeeded),
1 = a violation was found (witness in the report), 2 = usage/parse error
or unsupported configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .decide import (
    Statement,
    check_statement,
    classify,
    is_identity,
    mesyan_applicable,
    naive_identity_check,
    span_oracle,
)
from .errors import GradedPIError
from .grading import GradingSpec, format_unit_tuple, tuple_counts
from .polynomial import (
    BUILTIN_FAMILIES,
    MultilinearPoly,
    builtin,
    parse_poly,
    standard_polynomial,
)
from .scalars import FieldSpec

__all__ = ["main"]

_BUILTIN_HEADS = ("commutator", "standard", "jordan-central", "single", "zero")

_MESYAN_TEXT = (
    "arity m <= 2n-1: the image of a nonzero multilinear polynomial is"
    " conjectured to contain every trace-zero matrix (informational)"
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedpi",
        description=(
            "Decide whether a multilinear polynomial is an identity, a central"
            " polynomial, or trace-zero valued on n x n matrices, and classify"
            " the span of its image, by graded evaluation on matrix units."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly_args(p, with_n=True, with_workers=True):
        p.add_argument(
            "input",
            nargs="?",
            help="polynomial text, or a builtin family name such as standard:4",
        )
        p.add_argument("--poly", help="polynomial text, e.g. \"x1*x2 - x2*x1\"")
        p.add_argument(
            "--builtin",
            help="builtin family: " + ", ".join(BUILTIN_FAMILIES),
        )
        if with_n:
            p.add_argument("--n", type=int, required=True, help="matrix size")
        p.add_argument("--field", default="Q", help="Q (default) or Fp:<p>")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if with_workers:
            p.add_argument("--workers", type=int, default=1)

    p_check = sub.add_parser("check", help="decide S0/S1/S2 statements")
    add_poly_args(p_check)
    p_check.add_argument(
        "--statement", choices=("S0", "S1", "S2", "all"), default="all"
    )
    p_check.set_defaults(func=cmd_check)

    p_classify = sub.add_parser(
        "classify", help="four-way classification of the image span"
    )
    add_poly_args(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_span = sub.add_parser("span", help="canonical basis of the image span")
    add_poly_args(p_span)
    p_span.set_defaults(func=cmd_span)

    p_parse = sub.add_parser("parse", help="validate and canonicalize a polynomial")
    add_poly_args(p_parse, with_n=False, with_workers=False)
    p_parse.set_defaults(func=cmd_parse)

    p_bench = sub.add_parser(
        "bench", help="graded vs naive identity-check enumeration counts and timings"
    )
    p_bench.add_argument("--n", required=True, help="size range, e.g. 2:3 or 2")
    p_bench.add_argument("--m", required=True, help="arity range, e.g. 1:4 or 3")
    p_bench.add_argument("--field", default="Q", help="Q (default) or Fp:<p>")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def _resolve_poly(args) -> MultilinearPoly:
    field = FieldSpec.from_string(args.field)
    sources = [s for s in (args.input, args.poly, args.builtin) if s is not None]
    if len(sources) != 1:
        raise GradedPIError(
            "give exactly one polynomial: positional, --poly, or --builtin"
        )
    if args.builtin is not None:
        return builtin(args.builtin, field)
    if args.poly is not None:
        return parse_poly(args.poly, field)
    text = args.input
    if text.partition(":")[0] in _BUILTIN_HEADS:
        return builtin(text, field)
    return parse_poly(text, field)


def _request_block(command: str, f, args, statement=None) -> dict:
    return {
        "command": command,
        "poly": str(f) if f is not None else None,
        "arity": f.arity if f is not None else None,
        "n": getattr(args, "n", None),
        "field": args.field,
        "statement": statement,
    }


def _witness_block(report) -> dict:
    units, value = report.witness
    return {
        "tuple": format_unit_tuple(units),
        "value": value.to_text(),
        "trace": str(value.trace()),
    }


def _emit(args, report: dict, text_lines: list) -> None:
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(text_lines))


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def cmd_check(args) -> int:
    f = _resolve_poly(args)
    wanted = (
        [Statement.S0, Statement.S1, Statement.S2]
        if args.statement == "all"
        else [Statement(args.statement)]
    )
    start = time.perf_counter()
    reports = [
        check_statement(f, args.n, f.field, s, workers=args.workers) for s in wanted
    ]
    duration = _ms(start)
    verdicts = {}
    examined = {}
    witnesses = {}
    lines = [
        f"polynomial: {f}",
        f"arity: {f.arity}",
        f"n: {args.n}",
        f"field: {args.field}",
    ]
    for rep in reports:
        name = rep.statement.value
        verdicts[name] = {"holds": rep.holds, "tuples_examined": rep.tuples_examined}
        examined[name] = rep.tuples_examined
        status = "holds" if rep.holds else "violated"
        lines.append(f"{name}: {status}  tuples examined: {rep.tuples_examined}")
        if not rep.holds:
            block = _witness_block(rep)
            witnesses[name] = block
            lines.append(f"  witness: {block['tuple']}")
            lines.append(f"  value: {block['value']}")
            lines.append(f"  trace: {block['trace']}")
    all_hold = all(rep.holds for rep in reports)
    lines.append(f"result: {'holds' if all_hold else 'violated'}")
    report = {
        "schema": "1",
        "request": _request_block("check", f, args, args.statement),
        "verdicts": verdicts,
        "classification": None,
        "counters": {
            "tuples_examined": examined,
            "naive_total": tuple_counts(f.arity, GradingSpec(args.n)).total,
            "duration_ms": duration,
        },
        "witnesses": witnesses,
    }
    _emit(args, report, lines)
    return 0 if all_hold else 1


def cmd_classify(args) -> int:
    f = _resolve_poly(args)
    start = time.perf_counter()
    result = classify(f, args.n, f.field, workers=args.workers)
    duration = _ms(start)
    note = (
        _MESYAN_TEXT if not f.is_zero() and mesyan_applicable(f.arity, args.n) else None
    )
    verdicts = {}
    examined = {}
    witnesses = {}
    for rep in (result.s1_report, result.s2_report):
        name = rep.statement.value
        verdicts[name] = {"holds": rep.holds, "tuples_examined": rep.tuples_examined}
        examined[name] = rep.tuples_examined
        if not rep.holds:
            witnesses[name] = _witness_block(rep)
    lines = [
        f"polynomial: {f}",
        f"arity: {f.arity}",
        f"n: {args.n}",
        f"field: {args.field}",
        f"verdict: {result.verdict.value}",
        f"span dimension: {result.span_dimension}",
        f"S1 holds: {str(result.s1_holds).lower()}",
        f"S2 holds: {str(result.s2_holds).lower()}",
    ]
    for name in ("S1", "S2"):
        if name in witnesses:
            lines.append(f"{name} witness: {witnesses[name]['tuple']}")
            lines.append(f"{name} value: {witnesses[name]['value']}")
    if note:
        lines.append(f"note: {note}")
    report = {
        "schema": "1",
        "request": _request_block("classify", f, args),
        "verdicts": verdicts,
        "classification": {
            "verdict": result.verdict.value,
            "span_dimension": result.span_dimension,
            "s1_holds": result.s1_holds,
            "s2_holds": result.s2_holds,
            "mesyan_note": note,
        },
        "counters": {
            "tuples_examined": examined,
            "naive_total": tuple_counts(f.arity, GradingSpec(args.n)).total,
            "duration_ms": duration,
        },
        "witnesses": witnesses,
    }
    _emit(args, report, lines)
    return 0


def cmd_span(args) -> int:
    f = _resolve_poly(args)
    start = time.perf_counter()
    basis = span_oracle(f, args.n, f.field, workers=args.workers)
    duration = _ms(start)
    rows = [mat.to_text() for mat in basis.basis_matrices()]
    lines = [
        f"polynomial: {f}",
        f"arity: {f.arity}",
        f"n: {args.n}",
        f"field: {args.field}",
        f"span dimension: {basis.dimension}",
        "basis:",
    ] + [f"  {r}" for r in rows]
    report = {
        "schema": "1",
        "request": _request_block("span", f, args),
        "verdicts": {},
        "classification": {
            "span_dimension": basis.dimension,
            "span_basis": rows,
        },
        "counters": {
            "tuples_examined": {},
            "naive_total": tuple_counts(f.arity, GradingSpec(args.n)).total,
            "duration_ms": duration,
        },
        "witnesses": {},
    }
    _emit(args, report, lines)
    return 0


def cmd_parse(args) -> int:
    f = _resolve_poly(args)
    lines = [
        f"polynomial: {f}",
        f"arity: {f.arity}",
        f"field: {args.field}",
    ]
    report = {
        "schema": "1",
        "request": _request_block("parse", f, args),
        "verdicts": {},
        "classification": None,
        "counters": {"tuples_examined": {}, "naive_total": None, "duration_ms": 0},
        "witnesses": {},
    }
    _emit(args, report, lines)
    return 0


def _parse_range(text: str) -> range:
    lo, _, hi = text.partition(":")
    try:
        low = int(lo)
        high = int(hi) if hi else low
    except ValueError:
        raise GradedPIError(f"bad range {text!r}: expected lo:hi or a single value")
    if low < 1 or high < low:
        raise GradedPIError(f"bad range {text!r}")
    return range(low, high + 1)


def cmd_bench(args) -> int:
    field = FieldSpec.from_string(args.field)
    print("n,m,graded_tuples,naive_tuples,ratio,graded_ms,naive_ms")
    for n in _parse_range(args.n):
        for m in _parse_range(args.m):
            f = standard_polynomial(m, field)
            counts = tuple_counts(m, GradingSpec(n))
            start = time.perf_counter()
            is_identity(f, n, field)
            graded_ms = _ms(start)
            start = time.perf_counter()
            naive_identity_check(f, n, field)
            naive_ms = _ms(start)
            ratio = counts.total // counts.sum_zero
            print(
                f"{n},{m},{counts.sum_zero},{counts.total},{ratio},"
                f"{graded_ms},{naive_ms}"
            )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GradedPIError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
