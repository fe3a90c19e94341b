"""q-enumeration: generating functions of des, maj, inv and winv over SYT.

Closed forms are built from q-integers in exact integer polynomial
arithmetic and compared against brute-force sums over ``enumerate_syt``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

from .oracle import enumerate_syt
from .perms import contains_pattern, descent_set, inverse, inversions, is_involution, maj as perm_maj
from .shapes import (
    Ordinary,
    Shifted,
    Zigzag,
    conjugate,
    hook_lengths,
    partition,
    partitions,
    strict_partition,
)
from .tableau import des_set, inv, winv


class QPoly:
    """Polynomial in q with integer coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "QPoly":
        return cls([0] * k + [a])

    @staticmethod
    def _lift(x) -> "QPoly":
        return x if isinstance(x, QPoly) else QPoly([x])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __getitem__(self, k: int) -> int:
        return self.c[k] if 0 <= k < len(self.c) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, QPoly)):
            return self.c == self._lift(other).c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.c)

    def __add__(self, other) -> "QPoly":
        o = self._lift(other)
        n = max(len(self.c), len(o.c))
        return QPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-x for x in self.c)

    def __sub__(self, other) -> "QPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "QPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "QPoly":
        o = self._lift(other)
        if not self.c or not o.c:
            return QPoly()
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        out = QPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other) -> tuple["QPoly", "QPoly"]:
        d = self._lift(other)
        if not d.c:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.c)
        lead = d.c[-1]
        quot = [0] * max(len(rem) - len(d.c) + 1, 0)
        for i in range(len(quot) - 1, -1, -1):
            a = rem[i + len(d.c) - 1]
            if a % lead:
                raise ArithmeticError("quotient leaves the integers")
            a //= lead
            quot[i] = a
            if a:
                for j, b in enumerate(d.c):
                    rem[i + j] -= a * b
        return QPoly(quot), QPoly(rem)

    def __floordiv__(self, other) -> "QPoly":
        """Exact division; a nonzero remainder raises."""
        q, r = self.divmod(other)
        if r.c:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def at(self, x):
        out = 0
        for a in reversed(self.c):
            out = out * x + a
        return out

    def shift(self, k: int) -> "QPoly":
        return QPoly([0] * k + list(self.c))

    def reverse(self) -> "QPoly":
        lo = next((i for i, a in enumerate(self.c) if a), 0)
        return QPoly(reversed(self.c[lo:]))

    def format(self, var: str = "q") -> str:
        terms = []
        for k, a in enumerate(self.c):
            if not a:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            coef = str(abs(a)) if (abs(a) != 1 or not mono) else ""
            terms.append(("-" if a < 0 else "+", coef + mono))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for s, t in terms[1:]:
            out += f" {s} {t}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"QPoly({list(self.c)})"


ONE = QPoly([1])

# t-degree -> QPoly, for the joint (des, maj) statistic
Bivariate = list


# -- q-numbers ---------------------------------------------------------------

def q_int(n: int) -> QPoly:
    if n < 0:
        raise ValueError("[n]_q needs n >= 0")
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("[n]_q! needs n >= 0")
    return ONE if n == 0 else q_factorial(n - 1) * q_int(n)


def q_binomial(n: int, k: int) -> QPoly:
    if n < 0:
        raise ValueError("[n choose k]_q needs n >= 0")
    if k < 0 or k > n:
        return QPoly()
    return q_factorial(n) // (q_factorial(k) * q_factorial(n - k))


def q_multinomial(parts: Sequence[int]) -> QPoly:
    if any(p < 0 for p in parts):
        raise ValueError(f"invalid composition {tuple(parts)}")
    den = ONE
    for p in parts:
        den = den * q_factorial(p)
    return q_factorial(sum(parts)) // den


def q_basics(kind: str, *params: int) -> QPoly:
    """[n]_q, [n]_q!, [n choose k]_q or the q-multinomial of a composition."""
    if kind == "int":
        return q_int(*params)
    if kind == "factorial":
        return q_factorial(*params)
    if kind == "binomial":
        return q_binomial(*params)
    if kind == "multinomial":
        return q_multinomial(params)
    raise ValueError(f"unknown kind {kind!r}")


# -- brute-force generating functions ------------------------------------------

STATS = ("maj", "des", "inv", "winv", "maj_des_joint", "stembridge")


def _stat(T, stat: str) -> int:
    if stat == "maj":
        return sum(des_set(T))
    if stat == "des":
        return len(des_set(T))
    if stat == "inv":
        return inv(T)
    if stat == "winv":
        return winv(T)
    if stat == "stembridge":
        d = des_set(T)
        return T.n * len(d) - sum(d)
    raise ValueError(f"unknown statistic {stat!r}")


def stat_gf(shape, stat: str = "maj"):
    """sum_T q^{stat(T)} over SYT of ``shape``; the joint form returns t-indexed QPolys.

    ``stembridge`` is n des - maj, the exponent of the shifted q-formula."""
    if stat not in STATS:
        raise ValueError(f"unknown statistic {stat!r}; choose from {STATS}")
    coeffs: dict = {}
    for T in enumerate_syt(shape):
        if stat == "maj_des_joint":
            d = des_set(T)
            key = (len(d), sum(d))
        else:
            key = _stat(T, stat)
        coeffs[key] = coeffs.get(key, 0) + 1
    if stat != "maj_des_joint":
        top = max(coeffs, default=-1)
        return QPoly(coeffs.get(k, 0) for k in range(top + 1))
    out: Bivariate = []
    for (t, m), a in coeffs.items():
        while len(out) <= t:
            out.append(QPoly())
        out[t] = out[t] + QPoly.monomial(m, a)
    return out


def hook_joint_closed(n: int) -> Bivariate:
    """prod_{i=1}^{n-1} (1 + t q^i), as t-indexed coefficients."""
    out: Bivariate = [ONE]
    for i in range(1, n):
        nxt = out + [QPoly()]
        for t in range(len(out)):
            nxt[t + 1] = nxt[t + 1] + out[t].shift(i)
        out = nxt
    return out


def hook_joint_brute(n: int) -> Bivariate:
    total: Bivariate = []
    for k in range(n):
        for t, p in enumerate(stat_gf(Ordinary((n - k,) + (1,) * k), "maj_des_joint")):
            while len(total) <= t:
                total.append(QPoly())
            total[t] = total[t] + p
    return total


# -- closed forms ----------------------------------------------------------------

def q_hook_maj(lam: Sequence[int]) -> QPoly:
    """q^{sum C(lam'_j, 2)} [n]_q! / prod [h_c]_q."""
    lam = partition(lam)
    den = ONE
    for row in hook_lengths(lam):
        for h in row:
            den = den * q_int(h)
    e = sum(comb(c, 2) for c in conjugate(lam))
    return (q_factorial(sum(lam)) // den).shift(e)


def _composition_of(n: int, S: Iterable[int]) -> list[int]:
    pts = [0] + sorted(set(S)) + [n]
    if any(not 0 < s < n for s in pts[1:-1]):
        raise ValueError(f"S must be a subset of [1, {n - 1}]")
    return [b - a for a, b in zip(pts, pts[1:])]


def _descent_det(n: int, S: Iterable[int]) -> QPoly:
    """[n]_q! det(1/[s_{j+1} - s_i]_q!), i, j = 0..k, with 1/[m]! = 0 for m < 0.

    Expanded row by row; after placing rows 0..i-1 in the column set C
    the partial sum m of row lengths is fixed by C, and [m]_q! times the
    partial expansion stays a polynomial, so each step multiplies by a
    q-binomial."""
    s = [0] + sorted(set(S)) + [n]
    _composition_of(n, S)
    k1 = len(s) - 1
    layer = {0: ONE}
    for i in range(k1):
        nxt: dict[int, QPoly] = {}
        for C, P in layer.items():
            m = sum(s[j + 1] for j in range(k1) if C >> j & 1) - sum(s[:i])
            for j in range(k1):
                if C >> j & 1:
                    continue
                a = s[j + 1] - s[i]
                if a < 0:
                    continue
                sign = -1 if bin(C >> j).count("1") % 2 else 1
                term = P * q_binomial(m + a, a) * sign
                nxt[C | 1 << j] = nxt.get(C | 1 << j, QPoly()) + term
        layer = nxt
    return layer.get((1 << k1) - 1, QPoly())


def descent_class_gf(n: int, S: Iterable[int], mode: str = "subset_maj") -> QPoly:
    """Closed forms over the descent class of S.

    ``subset_maj`` and ``subset_inv`` give the q-multinomial for
    {pi : Des(pi^-1) subset of S}; ``exact_det`` the determinant for
    Des(pi^-1) = S."""
    S = set(S)
    if mode in ("subset_maj", "subset_inv"):
        return q_multinomial(_composition_of(n, S))
    if mode == "exact_det":
        return _descent_det(n, S)
    raise ValueError(f"unknown mode {mode!r}")


def descent_class_brute(n: int, S: Iterable[int], stat: str = "maj", exact: bool = False) -> QPoly:
    """sum q^{stat(pi)} over pi in S_n with Des(pi^-1) inside (or equal to) S."""
    S = frozenset(S)
    f = {"maj": perm_maj, "inv": inversions}[stat]
    acc: dict[int, int] = {}
    for p in permutations(range(1, n + 1)):
        d = descent_set(inverse(p))
        if (d == S) if exact else (d <= S):
            e = f(p)
            acc[e] = acc.get(e, 0) + 1
    return QPoly(acc.get(k, 0) for k in range(max(acc, default=-1) + 1))


def q_catalan(kind: str, n: int) -> QPoly:
    """F-H: [2n choose n]_q / [n+1]_q.  C-R: C_{n+1} = sum q^k C_k C_{n-k}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "furlinger_hofbauer":
        return q_binomial(2 * n, n) // q_int(n + 1)
    if kind == "carlitz_riordan":
        C = [ONE]
        for m in range(n):
            C.append(sum((C[k] * C[m - k]).shift(k) for k in range(m + 1)))
        return C[n]
    raise ValueError(f"unknown q-Catalan {kind!r}")


def q_motzkin(n: int) -> QPoly:
    return sum(
        (q_binomial(n, 2 * k) * q_catalan("furlinger_hofbauer", k)).shift(k) for k in range(n // 2 + 1)
    )


def barahovski(m: int, k: int) -> QPoly:
    """sum_d (m-k+1)/k C(k,d) C(m,d-1) t^d, as a polynomial in t."""
    if not m >= k >= 1:
        raise ValueError("needs m >= k >= 1")
    coeffs = [0] * (k + 1)
    for d in range(1, k + 1):
        num = (m - k + 1) * comb(k, d) * comb(m, d - 1)
        if num % k:
            raise ArithmeticError("non-integral coefficient")
        coeffs[d] = num // k
    return QPoly(coeffs)


def stembridge_gf(lam: Sequence[int]) -> QPoly:
    """[n]_q!/prod [lam_i]_q! * prod_{i<j} (q^{lam_j} - q^{lam_i})/(1 - q^{lam_i + lam_j})."""
    lam = strict_partition(lam)
    num, den = q_factorial(sum(lam)), ONE
    for p in lam:
        den = den * q_factorial(p)
    for i, j in combinations(range(len(lam)), 2):
        num = num * (QPoly.monomial(lam[j]) - QPoly.monomial(lam[i]))
        den = den * (ONE - QPoly.monomial(lam[i] + lam[j]))
    return num // den


def sign_sum(n: int) -> int:
    """sum over lam |- n and T in SYT(lam) of (-1)^{inv(T)}."""
    return sum((-1) ** inv(T) for lam in partitions(n) for T in enumerate_syt(Ordinary(lam)))


def r_tableau_q_hook(parts: Sequence[Sequence[int]]) -> QPoly:
    """q^{sum C(col, 2)} [n]_q! / prod [h_c]_q over the components of an r-partition.

    Column lengths and hooks are taken within each component."""
    parts = [partition(p) for p in parts]
    den = ONE
    e = 0
    for lam in parts:
        for row in hook_lengths(lam):
            for h in row:
                den = den * q_int(h)
        e += sum(comb(c, 2) for c in conjugate(lam))
    return (q_factorial(sum(map(sum, parts))) // den).shift(e)


def r_tableau_maj_brute(parts: Sequence[Sequence[int]]) -> QPoly:
    from .rimhook import r_diagram

    return stat_gf(r_diagram(parts), "maj")


# -- descents ----------------------------------------------------------------------

def one_descent_stats(lam: Sequence[int], k: int):
    """(#{T : k in Des(T)}, expected des) from the closed forms, exactly."""
    from fractions import Fraction

    from .formulas import f_ordinary

    lam = partition(lam)
    n = sum(lam)
    if not 1 <= k <= n - 1:
        raise ValueError("k must lie in [1, n-1]")
    gap = sum(comb(l, 2) for l in lam) - sum(comb(c, 2) for c in conjugate(lam))
    count = (Fraction(1, 2) - Fraction(gap, n * (n - 1))) * f_ordinary(lam)
    if count.denominator != 1:
        raise ArithmeticError("non-integral descent count")
    return int(count), Fraction(n - 1, 2) - Fraction(gap, n)


def one_descent_brute(lam: Sequence[int], k: int):
    from fractions import Fraction

    sets = [des_set(T) for T in enumerate_syt(Ordinary(partition(lam)))]
    return sum(k in d for d in sets), Fraction(sum(map(len, sets)), len(sets))


def _S_of(mu: Sequence[int]) -> frozenset[int]:
    out, acc = set(), 0
    for p in mu[:-1]:
        acc += p
        out.add(acc)
    return frozenset(out)


def des_distribution(shape, remove: frozenset[int] = frozenset()) -> dict[frozenset[int], int]:
    """Map from Des(T) minus ``remove`` to the number of T with that set."""
    out: dict[frozenset[int], int] = {}
    for T in enumerate_syt(shape):
        key = des_set(T) - remove
        out[key] = out.get(key, 0) + 1
    return out


def window_distribution(lam: Sequence[int], mu: Sequence[int]) -> dict[tuple, int]:
    """Distribution of Des(T) minus S_mu, split into the windows of the parts of mu.

    Each window records descents relative to its own start, and windows
    are listed by (part size, position), so compositions with the same
    parts produce comparable keys."""
    starts = [sum(mu[:i]) for i in range(len(mu))]
    order = sorted(range(len(mu)), key=lambda i: (mu[i], i))
    out: dict[tuple, int] = {}
    for T in enumerate_syt(Ordinary(partition(lam))):
        d = des_set(T)
        key = tuple(
            frozenset(x - starts[i] for x in d if starts[i] < x < starts[i] + mu[i]) for i in order
        )
        out[key] = out.get(key, 0) + 1
    return out


def descent_window_invariance(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> bool:
    """Des(T) minus S_mu and minus S_nu have the same law, windows matched part to part."""
    lam = partition(lam)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n or sorted(mu) != sorted(nu) or min(list(mu) + list(nu)) < 1:
        raise ValueError("mu and nu must be compositions of |lam| with the same parts")
    return window_distribution(lam, mu) == window_distribution(lam, nu)


def avoidance_des_check(n: int, k: int) -> bool:
    """Des over SYT of height < k equals Des over involutions avoiding k...21."""
    left: dict = {}
    for lam in partitions(n):
        if len(lam) < k:
            for key, v in des_distribution(Ordinary(lam)).items():
                left[key] = left.get(key, 0) + v
    sigma = tuple(range(k, 0, -1))
    right: dict = {}
    for p in permutations(range(1, n + 1)):
        if is_involution(p) and not contains_pattern(p, sigma):
            key = descent_set(p)
            right[key] = right.get(key, 0) + 1
    return left == right


# -- thin-shape identities ------------------------------------------------------------

def thin_q_identities(n: int) -> dict[str, bool]:
    """Each thin-shape q-identity at size n, checked against brute force."""
    maj = {lam: stat_gf(Ordinary(lam), "maj") for lam in partitions(n) if len(lam) <= 3}
    out = {}
    out["two_row_maj"] = all(
        maj[(n - k, k) if k else (n,)] == q_binomial(n, k) - q_binomial(n, k - 1) for k in range(n // 2 + 1)
    )
    if n % 2 == 0:
        m = n // 2
        out["square_maj_catalan"] = maj[(m, m)] == q_catalan("furlinger_hofbauer", m).shift(m)
    out["height2_total"] = sum((p for lam, p in maj.items() if len(lam) <= 2), QPoly()) == q_binomial(n, n // 2)
    out["q_motzkin"] = sum(maj.values(), QPoly()) == q_motzkin(n)
    out["hook_maj"] = all(
        stat_gf(Ordinary((n - k,) + (1,) * k), "maj") == q_binomial(n - 1, k).shift(comb(k + 1, 2))
        for k in range(n)
    )
    out["hook_joint"] = hook_joint_brute(n) == hook_joint_closed(n)
    G = [stat_gf(Ordinary((n - k, k) if k else (n,)), "inv") for k in range(n // 2 + 1)]
    out["shynar_square"] = sum(
        ((G[k] * G[k]).shift(comb(n - 2 * k, 2)) for k in range(n // 2 + 1)), QPoly()
    ) == q_catalan("carlitz_riordan", n)
    if n % 2 == 0:
        out["shynar_inv"] = G[n // 2] == q_catalan("carlitz_riordan", n // 2)
    out["barahovski"] = all(
        stat_gf(Ordinary((n - k, k)), "des") == barahovski(n - k, k) for k in range(1, n // 2 + 1)
    )
    return out


def zigzag_q_check(n: int, S: Iterable[int]) -> bool:
    """maj and winv over SYT of the zigzag both equal the descent-class determinant."""
    S = frozenset(S)
    z = Zigzag(n, S)
    det = descent_class_gf(n, S, "exact_det")
    return stat_gf(z, "maj") == det == stat_gf(z, "winv")


def stembridge_brute(lam: Sequence[int]) -> QPoly:
    return stat_gf(Shifted(strict_partition(lam)), "stembridge")

