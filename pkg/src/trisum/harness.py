"""Identity checks over shared exact tables, with deterministic reports.

Every check is a list of *instances* (index tuples).  An instance passes when
all relations attached to its indices hold exactly; a failing instance is
reported with the two sides of the first relation that broke.  Tables are
built once, sequentially, and then only read, so instances can be spread over
worker processes without affecting the result.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import bell as _bell
from . import numtheory as _nt
from . import series as _series
from .errors import UnknownCheck

CHECKS = ("theorem", "lemma1", "lemma2", "product", "logseries", "binomial", "oracle")

DEFAULT_BOUNDS = {
    "theorem": 300,
    "lemma1": 60,
    "lemma2": 60,
    "product": 2000,
    "logseries": 500,
    "binomial": 100,
    "oracle": 30,
}

ORACLE_MAX_R = 5
ORACLE_BELL_MAX_N = 20
ORACLE_RANDOM_POINTS = 10
ORACLE_SEED = 20240607

Index = Tuple[int, ...]


@dataclass(frozen=True)
class Failure:
    indices: Index
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"indices": list(self.indices), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    check_name: str
    bound: int
    total_cases: int
    failures: List[Failure] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "check": self.check_name,
            "bound": self.bound,
            "total_cases": self.total_cases,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True)
class Tables:
    """Read-only data shared by all checks of one invocation.

    Any field may be ``None`` when no requested check needs it.
    """

    trep: Optional[_nt.TripRepTable] = None
    bell: Optional[_bell.BellTable] = None
    psi: Optional[_series.TruncatedSeries] = None
    product_a: Optional[_series.TruncatedSeries] = None
    product_b: Optional[_series.TruncatedSeries] = None
    log: Optional[_series.RationalSeries] = None
    oracle_points: Tuple[_bell.DerivativePoint, ...] = ()
    oracle_bell: Tuple[_bell.BellTable, ...] = ()


def _oracle_points() -> Tuple[_bell.DerivativePoint, ...]:
    rng = random.Random(ORACLE_SEED)
    points = [_bell.psi_derivative_point(ORACLE_BELL_MAX_N)]
    for _ in range(ORACLE_RANDOM_POINTS):
        points.append(
            _bell.DerivativePoint(tuple(rng.randint(-3, 3) for _ in range(ORACLE_BELL_MAX_N)))
        )
    return tuple(points)


def build_tables(bounds: Mapping[str, int]) -> Tables:
    """Build every table the given checks need, once, at the largest bound."""
    for name in bounds:
        if name not in CHECKS:
            raise UnknownCheck(name)

    trep_n = trep_r = 0
    if "theorem" in bounds:
        trep_n = trep_r = bounds["theorem"]
    if "lemma2" in bounds:
        trep_n = max(trep_n, bounds["lemma2"])
        trep_r = max(trep_r, bounds["lemma2"])
    if "oracle" in bounds:
        trep_n = max(trep_n, bounds["oracle"])
        trep_r = max(trep_r, ORACLE_MAX_R)

    bell_n = max(bounds.get("lemma1", 0), bounds.get("lemma2", 0))
    log_order = max(bounds.get("lemma1", 0), bounds.get("logseries", 0))
    psi_order = max(log_order, bounds.get("product", 0))

    kwargs = {}
    if trep_r:
        kwargs["trep"] = _nt.trep_table(trep_n, trep_r)
    if bell_n:
        kwargs["bell"] = _bell.bell_table(_bell.psi_derivative_point(bell_n), bell_n)
    if psi_order:
        kwargs["psi"] = _series.psi_series(psi_order)
    if log_order:
        kwargs["log"] = _series.formal_log(kwargs["psi"].truncate(log_order))
    if "product" in bounds:
        kwargs["product_a"] = _series.product_form_A(bounds["product"])
        kwargs["product_b"] = _series.product_form_B(bounds["product"])
    if "oracle" in bounds:
        points = _oracle_points()
        bell_max = min(bounds["oracle"], ORACLE_BELL_MAX_N)
        kwargs["oracle_points"] = points
        kwargs["oracle_bell"] = tuple(_bell.bell_table(p, bell_max) for p in points)
    return Tables(**kwargs)


def instances(check: str, bound: int) -> List[Index]:
    if check == "theorem" or check == "lemma1" or check == "logseries":
        return [(n,) for n in range(1, bound + 1)]
    if check == "lemma2" or check == "binomial":
        return [(n, k) for n in range(1, bound + 1) for k in range(1, n + 1)]
    if check == "product":
        return [(i,) for i in range(bound + 1)]
    if check == "oracle":
        trep = [(n, r) for n in range(bound + 1) for r in range(1, ORACLE_MAX_R + 1)]
        bell_max = min(bound, ORACLE_BELL_MAX_N)
        bell = [
            (n, k, p)
            for p in range(ORACLE_RANDOM_POINTS + 1)
            for n in range(1, bell_max + 1)
            for k in range(1, n + 1)
        ]
        return trep + bell
    raise UnknownCheck(check)


def _mismatch(pairs: Iterable[Tuple[object, object]]) -> Optional[Tuple[str, str]]:
    for lhs, rhs in pairs:
        if lhs != rhs:
            return str(lhs), str(rhs)
    return None


def evaluate(check: str, idx: Index, tables: Tables) -> Optional[Tuple[str, str]]:
    """Return ``None`` if instance ``idx`` of ``check`` holds, else both sides."""
    if check == "theorem":
        (n,) = idx
        return _mismatch([(_nt.divisor_sum(n), _nt.theorem_rhs(n, tables.trep))])
    if check == "lemma1":
        (n,) = idx
        return _mismatch(
            [
                (_nt.divisor_sum(n), _bell.lemma1_lhs_via_bell(tables.bell, n)),
                (
                    math.factorial(n) * tables.log[n],
                    _bell.faa_di_bruno_log_derivative(tables.bell, n),
                ),
            ]
        )
    if check == "lemma2":
        n, k = idx
        return _mismatch([(tables.bell.get(n, k), _bell.lemma2_rhs(n, k, tables.trep))])
    if check == "product":
        (i,) = idx
        psi = tables.psi[i]
        return _mismatch([(psi, tables.product_a[i]), (psi, tables.product_b[i])])
    if check == "logseries":
        (n,) = idx
        return _mismatch([(tables.log[n], -_nt.divisor_sum(n))])
    if check == "binomial":
        n, r = idx
        return _mismatch([_nt.binomial_sum(n, r), _nt.pascal_sides(n, r)])
    if check == "oracle":
        if len(idx) == 2:
            n, r = idx
            return _mismatch([(tables.trep.t(r, n), _nt.trep_oracle(n, r))])
        n, k, p = idx
        return _mismatch(
            [(tables.oracle_bell[p].get(n, k), _bell.bell_oracle(tables.oracle_points[p], n, k))]
        )
    raise UnknownCheck(check)


def _evaluate_chunk(
    check: str, chunk: Sequence[Index], tables: Tables
) -> List[Failure]:
    out = []
    for idx in chunk:
        bad = evaluate(check, idx, tables)
        if bad is not None:
            out.append(Failure(idx, *bad))
    return out


_WORKER_TABLES: Optional[Tables] = None


def _init_worker(tables: Tables) -> None:
    global _WORKER_TABLES
    _WORKER_TABLES = tables


def _worker_chunk(check: str, chunk: Sequence[Index]) -> List[Failure]:
    return _evaluate_chunk(check, chunk, _WORKER_TABLES)


def _chunks(items: Sequence[Index], count: int) -> List[Sequence[Index]]:
    size = max(1, math.ceil(len(items) / count))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _run(
    check: str,
    bound: int,
    tables: Tables,
    pool: Optional[ProcessPoolExecutor],
    jobs: int,
) -> VerificationReport:
    start = time.perf_counter()
    cases = instances(check, bound)
    if pool is None or jobs <= 1:
        failures = _evaluate_chunk(check, cases, tables)
    else:
        # results come back in submission order, so the merge is deterministic
        parts = pool.map(_worker_chunk, [check] * (jobs * 4), _chunks(cases, jobs * 4))
        failures = [f for part in parts for f in part]
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(check, bound, len(cases), failures, elapsed)


def run_checks(
    bounds: Mapping[str, int], jobs: int = 1, tables: Optional[Tables] = None
) -> List[VerificationReport]:
    """Run several checks against one shared set of tables.

    ``bounds`` maps check names to bounds; reports come back in the same
    order.  Pass ``tables`` to reuse (or deliberately corrupt) prebuilt data.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    for name, bound in bounds.items():
        if name not in CHECKS:
            raise UnknownCheck(name)
        if bound < 1:
            raise ValueError(f"bound for {name} must be positive, got {bound}")
    if tables is None:
        tables = build_tables(bounds)
    if jobs == 1:
        return [_run(name, bound, tables, None, 1) for name, bound in bounds.items()]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(tables,)) as pool:
        return [_run(name, bound, tables, pool, jobs) for name, bound in bounds.items()]


def run_check(
    check_name: str, bound: int, jobs: int = 1, tables: Optional[Tables] = None
) -> VerificationReport:
    return run_checks({check_name: bound}, jobs=jobs, tables=tables)[0]


def exit_code(reports: Iterable[VerificationReport]) -> int:
    return 0 if all(r.passed for r in reports) else 1


def emit_report(report: VerificationReport, format: str = "table") -> str:
    return emit_reports([report], format)


CSV_HEADER = ("check", "bound", "indices", "lhs", "rhs")


def emit_reports(reports: Sequence[VerificationReport], format: str = "table") -> str:
    """Render reports as ``table``, ``json`` (one object per line) or ``csv``."""
    if format == "json":
        return "".join(
            json.dumps(r.to_dict(), separators=(",", ":")) + "\n" for r in reports
        )
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in reports:
            for f in r.failures:
                writer.writerow(
                    [r.check_name, r.bound, " ".join(map(str, f.indices)), f.lhs, f.rhs]
                )
        return buf.getvalue()
    if format == "table":
        lines = [f"{'check':<10} {'bound':>6} {'cases':>7} {'failures':>8}  {'result':<6} {'ms':>7}"]
        for r in reports:
            lines.append(
                f"{r.check_name:<10} {r.bound:>6} {r.total_cases:>7} {len(r.failures):>8}  "
                f"{'PASS' if r.passed else 'FAIL':<6} {r.elapsed_ms:>7}"
            )
        for r in reports:
            for f in r.failures:
                lines.append(
                    f"  {r.check_name} {list(f.indices)}: lhs={f.lhs} rhs={f.rhs}"
                )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")


def reports_without_timing(reports: Sequence[VerificationReport]) -> List[Dict]:
    out = []
    for r in reports:
        d = r.to_dict()
        d.pop("elapsed_ms")
        out.append(d)
    return out

