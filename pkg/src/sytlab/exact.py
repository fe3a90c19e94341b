"""Exact rational helpers: determinants, factorial reciprocals, named sequences."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence


class IntegralityError(ArithmeticError):
    """A closed form that must be an integer evaluated to a non-integer."""


def inv_fact(k: int) -> Fraction:
    """1/k!, with 1/k! = 0 for negative k."""
    return Fraction(0) if k < 0 else Fraction(1, factorial(k))


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    return comb(n, k) if 0 <= k <= n else 0


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / p
                row_r, row_c = a[r], a[col]
                for c in range(col, n):
                    row_r[c] -= f * row_c[c]
    return sign * result


def as_int(x) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(f"expected an integer, got {x}")
    return x.numerator


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    """M_n by the recursion M_n = M_{n-1} + sum_k M_k M_{n-2-k}."""
    if n < 2:
        return 1
    return motzkin(n - 1) + sum(motzkin(k) * motzkin(n - 2 - k) for k in range(n - 1))


def pell(n: int) -> int:
    """P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def superfactorial(m: int) -> int:
    """F_m = 0! 1! ... (m-1)!."""
    out = 1
    for i in range(m):
        out *= factorial(i)
    return out


def involutions(n: int) -> int:
    return sum(comb(n, 2 * k) * double_factorial(2 * k - 1) for k in range(n // 2 + 1))
