"""Exact truncated power series in q with big-integer coefficients.

A series of order N keeps the coefficients of q^0 .. q^N.  Binary operations
on series of different orders work modulo q^(min order + 1).  Multiplication
is schoolbook convolution that walks only the nonzero terms of the sparser
operand, which is what keeps the long products over j cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import add, sub
from typing import Iterable, List, Tuple

from .errors import NonUnitConstantTerm
from .numtheory import is_triangular


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> "TruncatedSeries":
        """Build a series of the given order, zero-padding or truncating ``coeffs``."""
        values = list(coeffs)[: order + 1]
        values.extend([0] * (order + 1 - len(values)))
        return cls(order, tuple(values))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        values = [0] * (order + 1)
        if power <= order:
            values[power] = coeff
        return cls(order, tuple(values))

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def nonzero_terms(self) -> List[Tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add_series(self, other)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add_series(self, -other)

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, r):
        return power(self, r)


@dataclass(frozen=True)
class RationalSeries:
    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)


def add_series(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    return TruncatedSeries(order, tuple(map(add, a.coeffs[: order + 1], b.coeffs[: order + 1])))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    xs = a.coeffs[: order + 1]
    ys = b.coeffs[: order + 1]
    xs_nz = [(i, c) for i, c in enumerate(xs) if c]
    ys_nz = [(i, c) for i, c in enumerate(ys) if c]
    if len(ys_nz) < len(xs_nz):
        sparse, dense = ys_nz, xs
    else:
        sparse, dense = xs_nz, ys
    out = [0] * (order + 1)
    for i, c in sparse:
        seg = dense[: order + 1 - i]
        if c == 1:
            out[i:] = map(add, out[i:], seg)
        elif c == -1:
            out[i:] = map(sub, out[i:], seg)
        else:
            out[i:] = [o + c * y for o, y in zip(out[i:], seg)]
    return TruncatedSeries(order, tuple(out))


def power(a: TruncatedSeries, r: int) -> TruncatedSeries:
    if r < 0:
        raise ValueError(f"exponent must be nonnegative, got {r}")
    result = TruncatedSeries.one(a.order)
    base = a
    while r:
        if r & 1:
            result = mul(result, base)
        r >>= 1
        if r:
            base = mul(base, base)
    return result


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstantTerm(
            f"constant term {a0} has no inverse over the integers"
        )
    terms = [(k, c) for k, c in a.nonzero_terms() if k > 0]
    out = [0] * (a.order + 1)
    out[0] = a0
    for n in range(1, a.order + 1):
        s = 0
        for k, c in terms:
            if k > n:
                break
            s += c * out[n - k]
        # 1/a0 == a0 for a0 in {1, -1}
        out[n] = -a0 * s
    return TruncatedSeries(a.order, tuple(out))


def psi_series(order: int) -> TruncatedSeries:
    """1 + q + q^3 + q^6 + ...: coefficient 1 at every triangular exponent."""
    return TruncatedSeries(order, tuple(int(is_triangular(i)) for i in range(order + 1)))


def product_form_A(order: int) -> TruncatedSeries:
    """Product over 1 <= j <= order of (1 + q^j)^2 (1 - q^j)."""
    one = TruncatedSeries.one(order)
    acc = one
    for j in range(1, order + 1):
        qj = TruncatedSeries.monomial(j, order)
        plus = one + qj
        acc = acc * plus * plus * (one - qj)
    return acc


def product_form_B(order: int) -> TruncatedSeries:
    """Product over 1 <= j <= order of (1 - q^(2j))^2 / (1 - q^j)."""
    one = TruncatedSeries.one(order)
    acc = one
    for j in range(1, order + 1):
        num = one - TruncatedSeries.monomial(2 * j, order)
        den = invert(one - TruncatedSeries.monomial(j, order))
        acc = acc * (num * num * den)
    return acc


def formal_log(a: TruncatedSeries) -> RationalSeries:
    """Formal logarithm of a series with constant term 1.

    Solves a * L' = a' coefficientwise.  Writing m[k] = k * L[k], the
    recurrence n * a[n] = sum_{k=1}^{n} m[k] * a[n-k] stays in the integers,
    so the only divisions happen when the m[k] are turned into L[k].
    """
    if a.coeffs[0] != 1:
        raise NonUnitConstantTerm(f"formal_log needs constant term 1, got {a.coeffs[0]}")
    terms = [(j, c) for j, c in a.nonzero_terms() if j > 0]
    m = [0] * (a.order + 1)
    for n in range(1, a.order + 1):
        s = n * a.coeffs[n]
        for j, c in terms:
            if j >= n:
                break
            s -= m[n - j] * c
        m[n] = s
    coeffs = [Fraction(0)] + [Fraction(m[k], k) for k in range(1, a.order + 1)]
    return RationalSeries(a.order, tuple(coeffs))


def log_recurrence_holds(a: TruncatedSeries, log: RationalSeries) -> bool:
    """Check n * a[n] == sum_{k=1}^{n} k * L[k] * a[n-k] for all 1 <= n <= order."""
    order = min(a.order, log.order)
    for n in range(1, order + 1):
        rhs = sum((k * log[k] * a[n - k] for k in range(1, n + 1)), Fraction(0))
        if rhs != n * a[n]:
            return False
    return log[0] == 0
