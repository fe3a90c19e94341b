"""Truncated power series with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence


class SeriesQ:
    """sum_{i <= order} c_i x^i, exact up to x^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        c = [Fraction(x) for x in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i <= self.order else Fraction(0)

    def __repr__(self) -> str:
        return f"SeriesQ({[str(c) for c in self.coeffs]}, order={self.order})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SeriesQ) and self.coeffs == other.coeffs

    def _lift(self, other) -> "SeriesQ":
        if isinstance(other, SeriesQ):
            return other
        return SeriesQ([other], self.order)

    def __add__(self, other) -> "SeriesQ":
        other = self._lift(other)
        n = min(self.order, other.order)
        return SeriesQ([self[i] + other[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "SeriesQ":
        return SeriesQ([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "SeriesQ":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "SeriesQ":
        return self._lift(other) - self

    def __mul__(self, other) -> "SeriesQ":
        if not isinstance(other, SeriesQ):
            return SeriesQ([c * Fraction(other) for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if self[i]:
                for j in range(n + 1 - i):
                    out[i + j] += self[i] * other[j]
        return SeriesQ(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "SeriesQ":
        if self[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / self[0]
        for k in range(1, self.order + 1):
            s = sum(self[i] * out[k - i] for i in range(1, k + 1))
            out[k] = -s / self[0]
        return SeriesQ(out, self.order)

    def __truediv__(self, other) -> "SeriesQ":
        if not isinstance(other, SeriesQ):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other) -> "SeriesQ":
        return self._lift(other) * self.inverse()

    def shift(self, k: int) -> "SeriesQ":
        """Multiply by x^k."""
        return SeriesQ([0] * k + self.coeffs, self.order)


def from_function(f, order: int) -> SeriesQ:
    return SeriesQ([f(i) for i in range(order + 1)], order)


def sin_series(order: int) -> SeriesQ:
    return from_function(lambda i: Fraction((-1) ** (i // 2), factorial(i)) if i % 2 else 0, order)


def cos_series(order: int) -> SeriesQ:
    return from_function(lambda i: 0 if i % 2 else Fraction((-1) ** (i // 2), factorial(i)), order)


def sec_plus_tan(order: int) -> SeriesQ:
    c = cos_series(order)
    return (1 + sin_series(order)) / c


def x_over_sin(order: int) -> SeriesQ:
    """x / sin x, via (sin x / x)^{-1}."""
    s = from_function(lambda i: 0 if i % 2 else Fraction((-1) ** (i // 2), factorial(i + 1)), order)
    return s.inverse()


def coefficients(s: SeriesQ) -> Sequence[Fraction]:
    return list(s.coeffs)
