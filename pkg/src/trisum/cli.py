"""Command line entry point.

    trisum verify <check|all> [--bound N] [--jobs J] [--format table|json|csv]
    trisum compute <psi|trep|divsum|bell|rhs> --n N [--r R] [--k K] [--order M]

Exit codes: 0 every identity holds, 1 an identity failed (or the run could not
finish), 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from typing import List, Optional

from . import bell, harness, numtheory, series
from .errors import InsufficientTable
from .harness import CHECKS, DEFAULT_BOUNDS

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trisum",
        description="Exact checks of triangular-number representation identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity checks")
    verify.add_argument("check", choices=CHECKS + ("all",))
    verify.add_argument("--bound", type=_positive, help="override the default bound")
    verify.add_argument("--jobs", type=_positive, default=1)
    verify.add_argument("--format", choices=("table", "json", "csv"), default="table")
    # debugging hook: "trep:R:M" or "bell:N:K" adds one to that table entry
    verify.add_argument("--inject-fault", help=argparse.SUPPRESS)

    compute = sub.add_parser("compute", help="print one exact quantity")
    compute.add_argument("entity", choices=("psi", "trep", "divsum", "bell", "rhs"))
    compute.add_argument("--n", type=int)
    compute.add_argument("--r", type=int)
    compute.add_argument("--k", type=int)
    compute.add_argument("--order", type=int)
    return parser


def _inject_fault(tables: harness.Tables, spec: str) -> harness.Tables:
    try:
        kind, a, b = spec.split(":")
        a, b = int(a), int(b)
    except ValueError:
        raise UsageError(f"--inject-fault expects KIND:I:J, got {spec!r}")
    try:
        if kind == "trep" and tables.trep is not None:
            trep = tables.trep.with_entry(a, b, tables.trep.t(a, b) + 1)
            return dataclasses.replace(tables, trep=trep)
        if kind == "bell" and tables.bell is not None:
            table = tables.bell.with_entry(a, b, tables.bell.get(a, b) + 1)
            return dataclasses.replace(tables, bell=table)
    except InsufficientTable as exc:
        raise UsageError(str(exc))
    raise UsageError(f"cannot inject {spec!r}: no such table in this run")


def _verify(args) -> int:
    names = CHECKS if args.check == "all" else (args.check,)
    bounds = {name: args.bound or DEFAULT_BOUNDS[name] for name in names}
    tables = harness.build_tables(bounds)
    if args.inject_fault:
        tables = _inject_fault(tables, args.inject_fault)
    reports = harness.run_checks(bounds, jobs=args.jobs, tables=tables)
    sys.stdout.write(harness.emit_reports(reports, args.format))
    return harness.exit_code(reports)


def _require(args, name: str, minimum: int) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{args.entity} needs --{name}")
    if value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}, got {value}")
    return value


def compute(args) -> str:
    entity = args.entity
    if entity == "psi":
        order = _require(args, "order", 0)
        return str(list(series.psi_series(order)))
    if entity == "trep":
        n = _require(args, "n", 0)
        if args.r is None:
            top = max(n, 1)
            table = numtheory.trep_table(n, top)
            return str([table.t(r, n) for r in range(1, top + 1)])
        r = _require(args, "r", 1)
        return str(numtheory.trep_table(n, r).t(r, n))
    if entity == "divsum":
        return str(numtheory.divisor_sum(_require(args, "n", 1)))
    if entity == "bell":
        n = _require(args, "n", 1)
        k = _require(args, "k", 1)
        if k > n:
            raise UsageError(f"--k must be <= --n, got k={k}, n={n}")
        table = bell.bell_table(bell.psi_derivative_point(n), n)
        return str(table.get(n, k))
    if entity == "rhs":
        n = _require(args, "n", 1)
        return str(numtheory.theorem_rhs(n, numtheory.trep_table(n, n)))
    raise UsageError(f"unknown entity {entity!r}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "verify":
            return _verify(args)
        print(compute(args))
        return EXIT_OK
    except UsageError as exc:
        print(f"trisum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MemoryError, RecursionError) as exc:
        print(f"trisum: aborted: {type(exc).__name__}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
