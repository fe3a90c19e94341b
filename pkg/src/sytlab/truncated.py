"""Product formulas for truncated shapes, and the diagrams they count."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .exact import as_int, catalan, pell, superfactorial as F
from .formulas import f_rectangle, g_shifted, staircase_shifted_count
from .shapes import Diagram, General, TruncatedOrdinary, TruncatedShifted, staircase

KINDS = (
    "tr_staircase_cell",
    "stair_minus_square",
    "rect_minus_square",
    "rect_corner",
    "sun_nn2",
    "snow",
    "pell_strip",
    "panova",
    "sun_middle",
)

# kind -> parameter names, in order
PARAMS = {
    "tr_staircase_cell": ("n",),
    "stair_minus_square": ("m", "k"),
    "rect_minus_square": ("m", "n", "k"),
    "rect_corner": ("m", "n"),
    "sun_nn2": ("n",),
    "snow": ("n", "k"),
    "pell_strip": ("n",),
    "panova": ("m", "n", "k"),
    "sun_middle": ("m",),
}


def _check(kind: str, params: tuple[int, ...]) -> None:
    if kind not in PARAMS:
        raise ValueError(f"unknown truncated kind {kind!r}")
    if len(params) != len(PARAMS[kind]):
        raise ValueError(f"{kind} takes parameters {PARAMS[kind]}")
    ok = {
        "tr_staircase_cell": lambda n: n >= 3,
        "stair_minus_square": lambda m, k: m >= 0 and k >= 1,
        "rect_minus_square": lambda m, n, k: m >= 1 and n >= 1 and k >= 1,
        "rect_corner": lambda m, n: m >= 1 and n >= 1,
        "sun_nn2": lambda n: n >= 2,
        "snow": lambda n, k: n >= 2 and k >= 0,
        "pell_strip": lambda n: n >= 1,
        "panova": lambda m, n, k: m >= n > k >= 1,
        "sun_middle": lambda m: m >= 0,
    }[kind]
    if not ok(*params):
        raise ValueError(f"{kind}{params} is out of range")


def _stair_square_parts(m: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    top = tuple(range(m + k + 1, m + 2, -1))
    return top + tuple(range(m + 1, 0, -1)), top + (m + 1,)


def _E(r: int, p: int, s: int) -> Fraction:
    if r % 2:
        h = (r - 1) // 2
        return Fraction(factorial(h + s), factorial(p - h + s)) * _E(r - 1, p, s)
    out = Fraction(1)
    for l in range(r + 1, 2 * p - r + 2):
        out /= (l + 2 * s) ** (r // 2)
    for l in range(2, r + 1):
        out /= ((l + 2 * s) * (2 * p - l + 2 * s + 2)) ** (l // 2)
    return out


def truncated_count(kind: str, *params: int) -> int:
    """Evaluate the closed form for one truncated family, exactly."""
    _check(kind, params)
    fac = factorial
    if kind == "tr_staircase_cell":
        (n,) = params
        v = staircase_shifted_count(n) * Fraction(catalan(n) * catalan(n - 2), 2 * catalan(2 * n - 3))
    elif kind == "stair_minus_square":
        m, k = params
        a, b = _stair_square_parts(m, k)
        N = comb(m + 2 * k + 1, 2) - (k - 1) ** 2
        M = k * (2 * m + k + 3) // 2 - 1
        v = g_shifted(a) * g_shifted(b) * Fraction(fac(N) * fac(M), fac(N - M - 1) * fac(2 * M + 1))
    elif kind == "rect_minus_square":
        m, n, k = params
        N = (n + k - 1) * (m + k - 1) - (k - 1) ** 2
        v = Fraction(
            fac(N) * fac(m * k - 1) * fac(n * k - 1) * fac(m + n - 1) * k, fac(m * k + n * k - 1)
        ) * Fraction(F(m - 1) * F(n - 1) * F(k - 1), F(m + n + k - 1))
    elif kind == "rect_corner":
        # the k = 2 case of rect_minus_square
        m, n = params
        N = (m + 1) * (n + 1) - 1
        v = Fraction(
            fac(N) * fac(2 * m - 1) * fac(2 * n - 1) * fac(m + n - 1) * 2, fac(2 * m + 2 * n - 1)
        ) * Fraction(F(m - 1) * F(n - 1), F(m + n + 1))
    elif kind == "sun_nn2":
        (n,) = params
        v = Fraction(
            fac(n * n - 2) * fac(3 * n - 4) ** 2 * 6, fac(6 * n - 8) * fac(2 * n - 2) * fac(n - 2) ** 2
        ) * Fraction(F(n - 2) ** 2, F(2 * n - 4))
    elif kind == "snow":
        n, k = params
        v = Fraction(fac(k * n - k) * fac(k * n + n), fac(k * n + n - k)) * Fraction(F(k) * F(n), F(n + k))
    elif kind == "pell_strip":
        (n,) = params
        v = pell(2 * n - 1)
    elif kind == "panova":
        m, n, k = params
        N = m * n - comb(k + 1, 2)
        v = (
            comb(N, m * (n - k - 1))
            * f_rectangle(m, n - k - 1)
            * g_shifted(tuple(range(m, m - k - 1, -1)))
            * (_E(k + 1, m, n - k - 1) / _E(k + 1, m, 0))
        )
    else:  # sun_middle
        (m,) = params
        v = Fraction(m + 5, 10) * comb(m + 2, 2) * comb(m + 9, 2)
    return as_int(v)


def truncated_diagram(kind: str, *params: int) -> Diagram:
    """The diagram each closed form counts."""
    _check(kind, params)
    if kind == "tr_staircase_cell":
        (n,) = params
        return TruncatedShifted(staircase(n), (1,)).diagram()
    if kind == "stair_minus_square":
        m, k = params
        return TruncatedShifted(staircase(m + 2 * k), (k - 1,) * (k - 1)).diagram()
    if kind == "rect_minus_square":
        m, n, k = params
        return TruncatedOrdinary((n + k - 1,) * (m + k - 1), (k - 1,) * (k - 1)).diagram()
    if kind == "rect_corner":
        m, n = params
        return TruncatedOrdinary((n + 1,) * (m + 1), (1,)).diagram()
    if kind == "sun_nn2":
        (n,) = params
        return TruncatedOrdinary((n,) * n, (2,)).diagram()
    if kind == "snow":
        n, k = params
        return TruncatedOrdinary((n,) * (k + 1), (n - 2,)).diagram()
    if kind == "pell_strip":
        (n,) = params
        return TruncatedShifted(tuple(range(n + 3, 3, -1)), tuple(range(n - 1, 0, -1))).diagram()
    if kind == "panova":
        m, n, k = params
        return TruncatedOrdinary((n,) * m, staircase(k)).diagram()
    (m,) = params
    cells = [(1, j) for j in range(1, m + 4)] + [(2, 1), (2, 3)] + [(3, j) for j in range(1, 4)]
    return General(cells).diagram()
