"""Partial Bell polynomials evaluated at a fixed integer point.

The table is filled with the recurrence

    B(n, k) = sum_{i=1}^{n-k+1} C(n-1, i-1) * x_i * B(n-i, k-1)

and :func:`bell_oracle` evaluates the defining sum over multi-indices
directly, for cross-checking at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

from .errors import InsufficientTable, NonIntegerResult
from .numtheory import TripRepTable, binomial, is_triangular


@dataclass(frozen=True)
class DerivativePoint:
    """Values x_1, ..., x_M; ``values[0]`` is x_1."""

    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self):
        return len(self.values)

    def x(self, i: int) -> int:
        return self.values[i - 1]

    def scaled(self, c: int) -> "DerivativePoint":
        return DerivativePoint(tuple(c * v for v in self.values))


def psi_derivative_point(m: int) -> DerivativePoint:
    """x_i = i! when i is triangular, else 0, for 1 <= i <= m."""
    return DerivativePoint(
        tuple(math.factorial(i) if is_triangular(i) else 0 for i in range(1, m + 1))
    )


@dataclass(frozen=True)
class BellTable:
    max_n: int
    entries: Tuple[Tuple[int, ...], ...]

    def get(self, n: int, k: int) -> int:
        if n > self.max_n or n < 0:
            raise InsufficientTable(f"B({n}, {k}) outside table (max_n={self.max_n})")
        if k < 0 or k > n:
            return 0
        return self.entries[n][k]

    def require(self, n: int) -> None:
        if n > self.max_n:
            raise InsufficientTable(f"need max_n >= {n}, table has max_n={self.max_n}")

    def with_entry(self, n: int, k: int, value: int) -> "BellTable":
        """Copy of the table with one entry replaced (fault injection)."""
        self.require(n)
        rows = [list(row) for row in self.entries]
        rows[n][k] = value
        return BellTable(self.max_n, tuple(tuple(row) for row in rows))


def bell_table(point: DerivativePoint, max_n: int) -> BellTable:
    if len(point) < max_n:
        raise InsufficientTable(
            f"point has {len(point)} values, need at least {max_n}"
        )
    x = (0,) + point.values
    rows: List[List[int]] = [[1]]
    for n in range(1, max_n + 1):
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            s = 0
            for i in range(1, n - k + 2):
                if x[i]:
                    s += binomial(n - 1, i - 1) * x[i] * rows[n - i][k - 1]
            row[k] = s
        rows.append(row)
    return BellTable(max_n, tuple(tuple(row) for row in rows))


def _multi_indices(n: int, k: int, largest: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    # yields ((part, multiplicity), ...) with parts <= largest, weight n, k parts
    if n == 0 and k == 0:
        yield ()
        return
    if n <= 0 or k <= 0 or largest <= 0:
        return
    for part in range(min(largest, n), 0, -1):
        for mult in range(1, min(k, n // part) + 1):
            for rest in _multi_indices(n - part * mult, k - mult, part - 1):
                yield ((part, mult),) + rest


def bell_oracle(point: DerivativePoint, n: int, k: int) -> int:
    """B(n, k) from the defining sum over (l_1, ..., l_{n-k+1})."""
    total = Fraction(0)
    n_fact = math.factorial(n)
    for parts in _multi_indices(n, k, n - k + 1):
        term = Fraction(n_fact)
        for i, mult in parts:
            term /= math.factorial(mult)
            term *= Fraction(point.x(i), math.factorial(i)) ** mult
        total += term
    if total.denominator != 1:
        raise NonIntegerResult(f"B({n}, {k}) evaluated to {total}")
    return total.numerator


def _signed_log_sum(table: BellTable, n: int) -> int:
    # sum_{k=1}^{n} (-1)^(k-1) (k-1)! B(n, k)
    table.require(n)
    s = 0
    for k in range(1, n + 1):
        term = math.factorial(k - 1) * table.get(n, k)
        s += term if k % 2 else -term
    return s


def faa_di_bruno_log_derivative(table: BellTable, n: int) -> Fraction:
    """n-th derivative at 0 of log(Psi(q)), assembled from log^(k)(1) = (-1)^(k-1) (k-1)!."""
    return Fraction(_signed_log_sum(table, n))


def lemma1_lhs_via_bell(table: BellTable, n: int) -> Fraction:
    """(1/n!) sum_{k=1}^{n} (-1)^k (k-1)! B(n, k)."""
    return Fraction(-_signed_log_sum(table, n), math.factorial(n))


def lemma2_rhs(n: int, k: int, table: TripRepTable) -> int:
    """(n!/k!) sum_{r=1}^{k} (-1)^(k-r) C(k, r) t_r(n)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    table.require(n, k)
    s = 0
    for r in range(1, k + 1):
        term = binomial(k, r) * table.t(r, n)
        s += -term if (k - r) % 2 else term
    falling = 1
    for j in range(k + 1, n + 1):
        falling *= j
    return falling * s

