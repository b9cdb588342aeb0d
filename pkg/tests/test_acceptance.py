"""Exit criteria, each run at its full bound with exact (zero tolerance) equality."""

import json
import math
import random
import time

import pytest

from trisum.bell import (
    DerivativePoint,
    bell_oracle,
    bell_table,
    faa_di_bruno_log_derivative,
    lemma1_lhs_via_bell,
    lemma2_rhs,
    psi_derivative_point,
)
from trisum.cli import main
from trisum.numtheory import (
    binomial_identity_check,
    divisor_sum,
    pascal_sides,
    theorem_rhs,
    trep_oracle,
    trep_table,
)
from trisum.series import formal_log, product_form_A, product_form_B, psi_series

pytestmark = pytest.mark.acceptance


def test_main_identity_to_300(criterion):
    criterion("main identity: divisor sum == alternating t_r sum, 1 <= n <= 300, < 60 s")
    start = time.perf_counter()
    table = trep_table(300, 300)
    bad = [n for n in range(1, 301) if divisor_sum(n) != theorem_rhs(n, table)]
    elapsed = time.perf_counter() - start
    assert bad == []
    assert elapsed < 60


def test_worked_value_and_zero_convention(criterion):
    criterion("t_2(7) == 2 by table and oracle; t_r(0) == 1 for r <= 300")
    table = trep_table(7, 300)
    assert table.t(2, 7) == 2
    assert trep_oracle(7, 2) == 2
    assert all(table.t(r, 0) == 1 for r in range(1, 301))


def test_product_forms_2000(criterion):
    criterion("Psi == both product forms, coefficientwise to N = 2000, < 30 s")
    start = time.perf_counter()
    psi = psi_series(2000)
    a = product_form_A(2000)
    b = product_form_B(2000)
    elapsed = time.perf_counter() - start
    assert list(psi) == list(a) == list(b)
    assert elapsed < 30


def test_log_derivative_to_60(criterion):
    criterion(
        "log-derivative via Bell sums == divisor sum; "
        "Faa di Bruno == n! log coefficient, n <= 60, < 60 s"
    )
    start = time.perf_counter()
    table = bell_table(psi_derivative_point(60), 60)
    log = formal_log(psi_series(60))
    for n in range(1, 61):
        assert lemma1_lhs_via_bell(table, n) == divisor_sum(n)
        assert faa_di_bruno_log_derivative(table, n) == math.factorial(n) * log[n]
    assert time.perf_counter() - start < 60


def test_bell_vs_trep_to_60(criterion):
    criterion("Bell entries: B(n,k) == (n!/k!) alternating t_r sum, 1 <= k <= n <= 60")
    table = bell_table(psi_derivative_point(60), 60)
    trep = trep_table(60, 60)
    bad = [
        (n, k)
        for n in range(1, 61)
        for k in range(1, n + 1)
        if table.get(n, k) != lemma2_rhs(n, k, trep)
    ]
    assert bad == []


def test_log_series_to_1000(criterion):
    criterion("log Psi coefficient == -divisor sum, 1 <= n <= 1000, < 120 s")
    start = time.perf_counter()
    log = formal_log(psi_series(1000))
    bad = [n for n in range(1, 1001) if log[n] != -divisor_sum(n)]
    assert bad == []
    assert time.perf_counter() - start < 120


def test_binomial_and_pascal(criterion):
    criterion("sum C(k,r)/k == C(n,r)/r for r <= n <= 100; Pascal for r <= k <= 60")
    assert all(binomial_identity_check(n, r) for n in range(1, 101) for r in range(1, n + 1))
    for k in range(61):
        for r in range(k + 1):
            lhs, rhs = pascal_sides(k, r)
            assert lhs == rhs


def test_oracle_equivalence(criterion):
    criterion("table vs enumeration oracles: t_r(n) n<=30 r<=5; Bell n<=20 at Psi + 10 random points")
    trep = trep_table(30, 5)
    assert all(trep.t(r, n) == trep_oracle(n, r) for n in range(31) for r in range(1, 6))
    rng = random.Random(7)
    points = [psi_derivative_point(20)] + [
        DerivativePoint(tuple(rng.randint(-3, 3) for _ in range(20))) for _ in range(10)
    ]
    for point in points:
        table = bell_table(point, 20)
        for n in range(1, 21):
            for k in range(1, n + 1):
                assert table.get(n, k) == bell_oracle(point, n, k)


def _verify_all(capsys, *extra):
    code = main(["verify", "all", "--format", "json", *extra])
    out = capsys.readouterr().out
    reports = [json.loads(line) for line in out.splitlines()]
    for r in reports:
        r.pop("elapsed_ms")
    return code, reports


def test_determinism_and_exit_codes(criterion, capsys):
    criterion("verify all: jobs=1 == jobs=8 modulo elapsed_ms, exit 0; exit 1 with one corrupted entry")
    code1, one = _verify_all(capsys, "--jobs", "1")
    code8, eight = _verify_all(capsys, "--jobs", "8")
    assert code1 == code8 == 0
    assert one == eight
    assert [r["check"] for r in one] == [
        "theorem", "lemma1", "lemma2", "product", "logseries", "binomial", "oracle"
    ]
    assert all(r["failures"] == [] for r in one)

    bad_code, bad = _verify_all(capsys, "--inject-fault", "trep:4:10")
    assert bad_code == 1
    failing = {r["check"] for r in bad if r["failures"]}
    assert "theorem" in failing
