"""r-rim hook tableaux: direct peeling, the core/quotient route, the r-hook formula."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from .formulas import f_ordinary
from .oracle import multinomial
from .shapes import Diagram, Partition, hook_lengths, partition, partitions, r_core, r_quotient
from .exact import double_factorial

METHODS = ("direct", "quotient", "hook")


def r_diagram(parts: Sequence[Sequence[int]]) -> Diagram:
    """Components laid out as one skew drawing: the first NE-most, the last SW-most."""
    parts = [partition(p) for p in parts]
    cells = []
    row = 0
    col = sum(p[0] for p in parts if p)
    for lam in parts:
        if not lam:
            continue
        col -= lam[0]
        cells += [(row + i + 1, col + j + 1) for i, l in enumerate(lam) for j in range(l)]
        row += len(lam)
    return Diagram(frozenset(cells))


def f_rpartition(parts: Sequence[Sequence[int]]) -> int:
    """multinomial(n; |lam^i|) prod f^{lam^i}: components are independent."""
    parts = [partition(p) for p in parts]
    return multinomial([sum(p) for p in parts]) * prod(f_ordinary(p) for p in parts if p)


def _rim_hooks(lam: Partition, r: int) -> list[Partition]:
    """Partitions left after removing each r-rim hook of lam.

    Rim cells have distinct contents j - i, so a rim hook is a run of r
    consecutive contents; keep those whose removal leaves a partition."""
    rim = {}
    for i, l in enumerate(lam, 1):
        nxt = lam[i] if i < len(lam) else 0
        for j in range(max(nxt, 1), l + 1):
            rim[j - i] = (i, j)
    out = []
    for c in range(min(rim), max(rim) - r + 2):
        seg = [rim[c + t] for t in range(r)]
        rows = list(lam)
        for i, _ in seg:
            rows[i - 1] -= 1
        rest = tuple(x for x in rows if x)
        if all(a >= b for a, b in zip(rows, rows[1:])) and _is_prefix_cut(lam, seg):
            out.append(rest)
    return out


def _is_prefix_cut(lam: Partition, seg: list) -> bool:
    # every removed cell must be at the end of its row after the cut
    cells = set(seg)
    for i, j in seg:
        if j < lam[i - 1] and (i, j + 1) not in cells:
            return False
    return True


def count_rimhook_direct(lam: Sequence[int], r: int) -> int:
    """f_r^lam by peeling the highest-labelled rim hook, memoized per call."""
    lam = partition(lam)
    if r < 1:
        raise ValueError("r must be positive")
    if sum(lam) % r:
        return 0

    @lru_cache(maxsize=None)
    def f(mu: Partition) -> int:
        if not mu:
            return 1
        return sum(f(nu) for nu in _rim_hooks(mu, r))

    return f(lam)


def count_rimhook_via_quotient(lam: Sequence[int], r: int) -> int:
    lam = partition(lam)
    if r_core(lam, r):
        return 0
    return f_rpartition(r_quotient(lam, r))


def count_rimhook_hook_formula(lam: Sequence[int], r: int) -> int:
    """(|lam|/r)! / prod_{r | h_c} (h_c / r); requires an empty r-core."""
    lam = partition(lam)
    if r_core(lam, r):
        raise ValueError(f"{lam} has a nonempty {r}-core, so f_r is 0 and the formula does not apply")
    hs = [h // r for row in hook_lengths(lam) for h in row if h % r == 0]
    num = factorial(sum(lam) // r)
    if num % prod(hs):
        raise ArithmeticError("non-integral r-hook formula")
    return num // prod(hs)


def count_rimhook(lam: Sequence[int], r: int, method: str = "direct") -> int:
    if method == "direct":
        return count_rimhook_direct(lam, r)
    if method == "quotient":
        return count_rimhook_via_quotient(lam, r)
    if method == "hook":
        return count_rimhook_hook_formula(lam, r)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")


def divisible_hooks(lam: Sequence[int], r: int) -> int:
    return sum(1 for row in hook_lengths(partition(lam)) for h in row if h % r == 0)


def rimhook_sum_identities(n: int, r: int) -> dict:
    """Squares sum to r^n n!; plain sum is sum_k C(n,2k)(2k-1)!! r^(n-k)."""
    vals = [count_rimhook_direct(lam, r) for lam in partitions(r * n)]
    sq, plain = sum(v * v for v in vals), sum(vals)
    sq_rhs = r**n * factorial(n)
    plain_rhs = sum(comb(n, 2 * k) * double_factorial(2 * k - 1) * r ** (n - k) for k in range(n // 2 + 1))
    return {
        "squares": (sq, sq_rhs, sq == sq_rhs),
        "plain": (plain, plain_rhs, plain == plain_rhs),
        "ok": sq == sq_rhs and plain == plain_rhs,
    }


def fomin_lulov_bound(lam: Sequence[int], r: int) -> bool:
    """f_r <= r^n n! (f/(rn)!)^(1/r), compared exactly after raising to the r-th power."""
    lam = partition(lam)
    N = sum(lam)
    if N % r:
        raise ValueError("r must divide |lam|")
    n = N // r
    return count_rimhook_direct(lam, r) ** r * factorial(N) <= (r**n * factorial(n)) ** r * f_ordinary(lam)
