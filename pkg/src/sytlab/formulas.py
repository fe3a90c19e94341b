"""Closed-form counts for ordinary, skew, shifted, thin and zigzag shapes."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Sequence

from .exact import as_int, binom, catalan, det, inv_fact, involutions, motzkin, pell, superfactorial
from .shapes import contains, hook_lengths, partition, shifted_hook_lengths, strict_partition, zigzag_composition

METHODS = ("product", "hook", "det")


def f_ordinary(lam: Sequence[int], method: str = "hook") -> int:
    lam = partition(lam)
    n, t = sum(lam), len(lam)
    if method == "product":
        ell = [lam[i] + t - (i + 1) for i in range(t)]
        num = factorial(n) * prod(ell[i] - ell[j] for i in range(t) for j in range(i + 1, t))
        return as_int(Fraction(num, prod(factorial(x) for x in ell)))
    if method == "hook":
        return as_int(Fraction(factorial(n), prod(h for row in hook_lengths(lam) for h in row)))
    if method == "det":
        m = [[inv_fact(lam[i] - (i + 1) + (j + 1)) for j in range(t)] for i in range(t)]
        return as_int(factorial(n) * det(m))
    raise ValueError(f"unknown method {method!r}")


def f_skew_det(lam: Sequence[int], mu: Sequence[int]) -> int:
    """|lam/mu|! det[1/(lam_i - mu_j - i + j)!] over the rows of lam."""
    lam, mu = partition(lam), partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    t = len(lam)
    mu_ = list(mu) + [0] * (t - len(mu))
    n = sum(lam) - sum(mu)
    m = [[inv_fact(lam[i] - mu_[j] - i + j) for j in range(t)] for i in range(t)]
    return as_int(factorial(n) * det(m))


def g_shifted(lam: Sequence[int], method: str = "product") -> int:
    lam = strict_partition(lam)
    n, t = sum(lam), len(lam)
    pairs = [(i, j) for i in range(t) for j in range(i + 1, t)]
    if method == "product":
        val = Fraction(factorial(n), prod(factorial(x) for x in lam))
        for i, j in pairs:
            val *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
        return as_int(val)
    if method == "hook":
        return as_int(Fraction(factorial(n), prod(h for row in shifted_hook_lengths(lam) for h in row)))
    if method == "det":
        m = [[inv_fact(lam[i] - t + (j + 1)) for j in range(t)] for i in range(t)]
        return as_int(Fraction(factorial(n), prod(lam[i] + lam[j] for i, j in pairs)) * det(m))
    raise ValueError(f"unknown method {method!r}")


# -- thin shapes and totals ----------------------------------------------------

def _total_h5(n: int) -> int:
    s = sum(
        Fraction(comb(n, 2 * k) * catalan(k) * factorial(2 * k + 2), factorial(k + 2) * factorial(k + 3))
        for k in range(n // 2 + 1)
    )
    return as_int(6 * s)


THIN_FAMILIES = ("hook", "two_row", "total_h2", "total_h3", "total_h4", "total_h5", "total_hooks", "total_zigzag")


def thin_counts(family: str, *params: int) -> int:
    """hook(n,k) = f^{(n-k,1^k)}; two_row(n,k) = f^{(n-k,k)}; totals over size n."""
    if family == "hook":
        n, k = params
        if not 0 <= k < n:
            raise ValueError("hook(n,k) needs 0 <= k < n")
        return comb(n - 1, k)
    if family == "two_row":
        n, k = params
        if not 0 <= 2 * k <= n:
            raise ValueError("two_row(n,k) needs 0 <= 2k <= n")
        return binom(n, k) - binom(n, k - 1)
    (n,) = params
    if n < 0:
        raise ValueError("n must be nonnegative")
    if family == "total_h2":
        return comb(n, n // 2)
    if family == "total_h3":
        return motzkin(n)
    if family == "total_h4":
        return catalan((n + 1) // 2) * catalan((n + 2) // 2)
    if family == "total_h5":
        return _total_h5(n)
    if family == "total_hooks":
        return 2 ** (n - 1) if n else 1
    if family == "total_zigzag":
        return factorial(n)
    raise ValueError(f"unknown family {family!r}")


def motzkin_sum(n: int) -> int:
    """sum_k C(n,2k) C_k, the height <= 3 total as a sum."""
    return sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


# -- zigzags and Andre numbers ---------------------------------------------------

def zigzag_det(n: int, S: Iterable[int], variant: int = 1) -> int:
    """f of zigzag_n(S) by one of the three determinants (s_0 = 0, s_{k+1} = n)."""
    s = [0] + sorted(set(S)) + [n]
    zigzag_composition(n, s[1:-1])  # validates S
    k = len(s) - 2
    idx = range(k + 1)
    if variant == 1:
        m = [[inv_fact(s[j + 1] - s[i]) for j in idx] for i in idx]
        return as_int(factorial(n) * det(m))
    if variant == 2:
        m = [[binom(n - s[i], s[j + 1] - s[i]) for j in idx] for i in idx]
        return as_int(det(m))
    if variant == 3:
        m = [[binom(s[j + 1], s[j + 1] - s[i]) for j in idx] for i in idx]
        return as_int(det(m))
    raise ValueError("variant must be 1, 2 or 3")


@lru_cache(maxsize=None)
def _andre(n: int) -> int:
    if n <= 1:
        return 1
    m = n - 1
    total = sum(comb(m, k) * _andre(k) * _andre(m - k) for k in range(m + 1))
    return total // 2


def andre_numbers(N: int) -> list[int]:
    """A_0..A_N from 2A_{n+1} = sum_k C(n,k) A_k A_{n-k}, A_0 = A_1 = 1."""
    return [_andre(i) for i in range(N + 1)]


def andre(n: int) -> int:
    return _andre(n)


def tangent(n: int) -> int:
    """T_n = A_{2n-1}, n >= 1."""
    if n < 1:
        raise ValueError("tangent numbers start at n = 1")
    return _andre(2 * n - 1)


def secant(n2: int) -> int:
    """Signed secant number E_{n2}: E_{2m} = (-1)^m A_{2m}, zero for odd n2."""
    if n2 % 2:
        return 0
    return (-1) ** (n2 // 2) * _andre(n2)


def up_down_zigzag(n: int) -> frozenset[int]:
    """S for D_n, the zigzag whose SYT are counted by A_n."""
    return frozenset(range(2, n, 2))


SEQUENCES = ("catalan", "motzkin", "pell", "superfactorial_F", "tangent", "secant")


def special_sequences(kind: str, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "catalan":
        return catalan(n)
    if kind == "motzkin":
        return motzkin(n)
    if kind == "pell":
        return pell(n)
    if kind == "superfactorial_F":
        return superfactorial(n)
    if kind == "tangent":
        return tangent(n)
    if kind == "secant":
        return secant(n)
    raise ValueError(f"unknown sequence {kind!r}")


def f_rectangle(m: int, n: int) -> int:
    """f^{(n^m)} = (mn)! F_m F_n / F_{m+n}."""
    return as_int(Fraction(factorial(m * n) * superfactorial(m) * superfactorial(n), superfactorial(m + n)))


def staircase_shifted_count(n: int) -> int:
    """g^{delta_n} = N! prod_{i<n} i!/(2i+1)!."""
    N = n * (n + 1) // 2
    val = Fraction(factorial(N))
    for i in range(n):
        val *= Fraction(factorial(i), factorial(2 * i + 1))
    return as_int(val)


def involution_count(n: int) -> int:
    return involutions(n)
