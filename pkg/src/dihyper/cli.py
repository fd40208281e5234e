"""Command line front end.

Subcommands: formula (run a counting pipeline), oracle (exhaustive
census), compare (formula vs census), check (self-check suites),
fixtures (classify a shipped example graph).

Exit codes: 0 success, 1 strict comparison found a mismatch or a check
suite failed, 2 invalid arguments, 3 oracle cap exceeded.
"""
from __future__ import annotations

import argparse
import sys

from .formulas import DEFAULT_METHOD, count_sequence
from .harness import (
    FIXTURE_NAMES,
    SUITE_NAMES,
    compare_family,
    emit_census_csv,
    emit_census_json,
    emit_compare_json,
    emit_counts_csv,
    emit_counts_json,
    emit_eval_csv,
    emit_eval_json,
    fixture_report,
    format_fixture_report,
    format_results,
    run_suite,
)
from .oracle import CensusTable, UniverseTooLargeError, census
from .polynomials import format_poly

__all__ = ["build_parser", "main", "run_cli"]

_METHOD_CHOICES = (
    "direct",
    "reciprocal",
    "recurrence",
    "compositions",
    "inversion",
    "lambda-printed",
    "lambda-corrected",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihyper",
        description="exact enumeration of b-uniform labeled directed hypergraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="run a counting pipeline")
    p.add_argument("--family", required=True, choices=("total", "acyclic", "strong"))
    p.add_argument("--b", type=int, required=True, help="uniformity, at least 2")
    p.add_argument("--n", type=int, required=True, help="largest node count")
    p.add_argument("--method", choices=_METHOD_CHOICES)
    p.add_argument("--eval", type=int, dest="eval_y", metavar="Y0",
                   help="evaluate each polynomial at y=Y0")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("oracle", help="exhaustive census of one (n, b)")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, help="universe-size cap in bits (default 26)")
    p.add_argument("--jobs", type=int, help="parallel workers for the sweep")
    p.add_argument("--backend", choices=("numba", "numpy"),
                   help="sweep kernel (default: numba when available)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("compare", help="compare a pipeline against the census")
    p.add_argument("--family", required=True, choices=("acyclic", "strong"))
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--method", choices=_METHOD_CHOICES)
    p.add_argument("--cap", type=int, help="universe-size cap in bits (default 26)")
    p.add_argument("--jobs", type=int)
    p.add_argument("--strict", action="store_true",
                   help="exit 1 if the verdict is mismatch")
    p.add_argument("--out", help="write the JSON report to this path")

    p = sub.add_parser("check", help="run a self-check suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)

    p = sub.add_parser("fixtures", help="classify a shipped example graph")
    p.add_argument("--name", required=True, choices=FIXTURE_NAMES)

    return parser


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_counts_text(seq, eval_y: int | None) -> str:
    if eval_y is not None:
        return " ".join(str(v) for v in seq.evaluated(eval_y)) + "\n"
    lines = [f"n={n}: {format_poly(p)}" for n, p in enumerate(seq.counts)]
    return "\n".join(lines) + "\n"


def _format_census_text(table: CensusTable) -> str:
    lines = [
        f"census n={table.n} b={table.b} universe={table.universe_size} "
        f"semantics={table.semantics}",
        f"totals:  {format_poly(table.totals_poly())}",
        f"acyclic: {format_poly(table.acyclic_poly())}",
        f"strong:  {format_poly(table.strong_poly())}",
        "source profile (q, source components, sources, count):",
    ]
    for q, c, s, count in table.source_profile():
        lines.append(f"  {q} {c} {s} {count}")
    return "\n".join(lines) + "\n"


def _cmd_formula(args) -> int:
    try:
        seq = count_sequence(args.family, args.b, args.n, args.method)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        text = (
            emit_eval_json(seq, args.eval_y)
            if args.eval_y is not None
            else emit_counts_json(seq)
        )
    elif args.format == "csv":
        text = (
            emit_eval_csv(seq, args.eval_y)
            if args.eval_y is not None
            else emit_counts_csv(seq)
        )
    else:
        text = _format_counts_text(seq, args.eval_y)
    _write(text, args.out)
    return 0


def _cmd_oracle(args) -> int:
    try:
        table = census(args.n, args.b, cap=args.cap, jobs=args.jobs,
                       backend=args.backend)
    except UniverseTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        text = emit_census_json(table)
    elif args.format == "csv":
        text = emit_census_csv(table)
    else:
        text = _format_census_text(table)
    _write(text, args.out)
    return 0


def _cmd_compare(args) -> int:
    try:
        report = compare_family(
            args.b, args.n_max, args.family, args.method,
            cap=args.cap, jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write(emit_compare_json(report), args.out)
    summary = f"verdict: {report.verdict}"
    first = report.first_mismatch()
    if first:
        n, q, f, o = first
        summary += f" (first mismatch at n={n}, q={q}: formula {f}, oracle {o})"
    print(summary, file=sys.stderr)
    if args.strict and report.verdict == "mismatch":
        return 1
    return 0


def _cmd_check(args) -> int:
    results = run_suite(args.suite)
    print(format_results(results))
    return 0 if all(r.passed for r in results) else 1


def _cmd_fixtures(args) -> int:
    print(format_fixture_report(fixture_report(args.name)))
    return 0


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad arguments and 0 on --help
        return int(exc.code or 0)
    handler = {
        "formula": _cmd_formula,
        "oracle": _cmd_oracle,
        "compare": _cmd_compare,
        "check": _cmd_check,
        "fixtures": _cmd_fixtures,
    }[args.command]
    return handler(args)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
