"""Deliberately naive reference computations used only by the tests."""

import itertools
import math
from fractions import Fraction


def poly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= order:
                out[i + j] += x * y
    return out


def poly_expand(factors, order):
    acc = [1] + [0] * order
    for f in factors:
        acc = poly_mul(acc, f, order)
    return acc


def triangulars_upto(n):
    return [k * (k + 1) // 2 for k in range(n + 2) if k * (k + 1) // 2 <= n]


def brute_trep(n, r):
    """Count ordered r-tuples from itertools.product over the triangulars <= n."""
    tri = triangulars_upto(n)
    return sum(1 for combo in itertools.product(tri, repeat=r) if sum(combo) == n)


def brute_divisor_sum(n):
    return sum(
        (Fraction(1 + 2 * (-1) ** d, d) for d in range(1, n + 1) if n % d == 0),
        Fraction(0),
    )


def mercator(order):
    return [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)]


def factorial_ratio(n, k):
    return math.factorial(n) // math.factorial(k)
