"""Divisor sums, binomials and triangular representation counts.

``t_r(n)`` is the number of ordered ``r``-tuples of triangular numbers
(0 included) that sum to ``n``.  Two routes are provided: :func:`trep_table`
builds all counts by sparse convolution, and :func:`trep_oracle` counts
tuples by plain recursive enumeration without touching any series code.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from operator import add
from typing import List, Tuple

from .errors import InsufficientTable


def is_triangular(m: int) -> bool:
    if m < 0:
        return False
    s = 8 * m + 1
    root = math.isqrt(s)
    return root * root == s


def triangular_numbers(limit: int) -> List[int]:
    """All triangular numbers ``k(k+1)/2 <= limit``, ascending, starting at 0."""
    out = []
    k = 0
    while k * (k + 1) // 2 <= limit:
        out.append(k * (k + 1) // 2)
        k += 1
    return out


def divisors(n: int) -> List[int]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def divisor_sum(n: int) -> Fraction:
    """Exact value of the sum over divisors d of n of (1 + 2(-1)^d) / d."""
    total = Fraction(0)
    for d in divisors(n):
        total += Fraction(3 if d % 2 == 0 else -1, d)
    return total


def binomial(n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


@dataclass(frozen=True)
class TripRepTable:
    """Counts ``t_r(m)`` for ``1 <= r <= max_r`` and ``0 <= m <= max_n``.

    ``counts[r - 1][m]`` holds ``t_r(m)``; use :meth:`t` rather than indexing
    directly.
    """

    max_n: int
    max_r: int
    counts: Tuple[Tuple[int, ...], ...]

    def t(self, r: int, m: int) -> int:
        if not (1 <= r <= self.max_r and 0 <= m <= self.max_n):
            raise InsufficientTable(
                f"t_{r}({m}) outside table (max_r={self.max_r}, max_n={self.max_n})"
            )
        return self.counts[r - 1][m]

    def row(self, r: int) -> Tuple[int, ...]:
        if not 1 <= r <= self.max_r:
            raise InsufficientTable(f"row r={r} outside table (max_r={self.max_r})")
        return self.counts[r - 1]

    def require(self, n: int, r: int) -> None:
        if n > self.max_n or r > self.max_r:
            raise InsufficientTable(
                f"need max_n >= {n} and max_r >= {r}, "
                f"table has max_n={self.max_n}, max_r={self.max_r}"
            )

    def with_entry(self, r: int, m: int, value: int) -> "TripRepTable":
        """Copy of the table with one entry replaced (fault injection)."""
        self.t(r, m)
        rows = [list(row) for row in self.counts]
        rows[r - 1][m] = value
        return TripRepTable(self.max_n, self.max_r, tuple(tuple(row) for row in rows))


def trep_table(max_n: int, max_r: int) -> TripRepTable:
    if max_n < 0 or max_r < 1:
        raise ValueError("trep_table needs max_n >= 0 and max_r >= 1")
    tri = triangular_numbers(max_n)
    first = [0] * (max_n + 1)
    for t in tri:
        first[t] = 1
    rows = [tuple(first)]
    prev = first
    for _ in range(2, max_r + 1):
        cur = [0] * (max_n + 1)
        # t_r(m) = sum over triangular t <= m of t_{r-1}(m - t)
        for t in tri:
            cur[t:] = map(add, cur[t:], prev[: max_n + 1 - t])
        rows.append(tuple(cur))
        prev = cur
    return TripRepTable(max_n, max_r, tuple(rows))


def trep_oracle(n: int, r: int) -> int:
    """Count ordered r-tuples of triangular numbers summing to n by enumeration."""
    if n < 0:
        return 0

    @functools.lru_cache(maxsize=None)
    def count(remaining: int, slots: int) -> int:
        if slots == 0:
            return 1 if remaining == 0 else 0
        total = 0
        k = 0
        while k * (k + 1) // 2 <= remaining:
            total += count(remaining - k * (k + 1) // 2, slots - 1)
            k += 1
        return total

    return count(n, r)


def theorem_rhs(n: int, table: TripRepTable) -> Fraction:
    """Sum over 1 <= r <= n of (-1)^r / r * C(n, r) * t_r(n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    table.require(n, n)
    total = Fraction(0)
    for r in range(1, n + 1):
        term = Fraction(binomial(n, r) * table.t(r, n), r)
        total += -term if r % 2 else term
    return total


def binomial_sum(n: int, r: int) -> Tuple[Fraction, Fraction]:
    """Both sides of sum_{k=r}^{n} C(k, r)/k = C(n, r)/r."""
    lhs = sum((Fraction(binomial(k, r), k) for k in range(r, n + 1)), Fraction(0))
    return lhs, Fraction(binomial(n, r), r)


def binomial_identity_check(n: int, r: int) -> bool:
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got n={n}, r={r}")
    lhs, rhs = binomial_sum(n, r)
    return lhs == rhs


def pascal_sides(k: int, r: int) -> Tuple[int, int]:
    """Both sides of C(k, r-1) = C(k+1, r) - C(k, r)."""
    return binomial(k, r - 1), binomial(k + 1, r) - binomial(k, r)
