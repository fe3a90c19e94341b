"""Brute-force oracle: SYT enumeration and linear-extension counting.

Every order ideal of a diagram meets each row in a prefix of that row's
cells (sorted by column), so an ideal is a tuple of per-row prefix lengths.
Counting is a memoized DP over these tuples. Large diagrams use the same DP
swept layer by layer with numpy, carrying counts modulo a few primes and
recombining them by CRT.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator

import numpy as np

from .shapes import Diagram, ShapeSpec, partitions
from .tableau import Tableau

DEFAULT_LIMIT = 20


class SizeLimitError(ValueError):
    pass


class _RowPoset:
    def __init__(self, D: Diagram):
        rows = D.rows()
        self.row_ids = sorted(rows)
        self.cols = [rows[r] for r in self.row_ids]
        self.lengths = tuple(len(c) for c in self.cols)
        # need[a][k]: (b, m) pairs, rows b < a, meaning the ideal must hold
        # at least m cells of row b before cell k of row a can enter
        self.need = []
        for a, cols_a in enumerate(self.cols):
            per_cell = []
            for col in cols_a:
                reqs = []
                for b in range(a):
                    m = sum(1 for x in self.cols[b] if x <= col)
                    if m:
                        reqs.append((b, m))
                per_cell.append(tuple(reqs))
            self.need.append(per_cell)
        self.need = [[self._reduce(a, reqs) for reqs in cells] for a, cells in enumerate(self.need)]

    def _reduce(self, a: int, reqs):
        # (b, m) is implied when another requirement (b2, m2) forces cell m2-1
        # of row b2 in, and that cell already needs m cells of row b
        keep = []
        for b, m in reqs:
            implied = any(
                b3 == b and m3 >= m
                for b2, m2 in reqs
                if b2 != b
                for b3, m3 in self.need[b2][m2 - 1]
            )
            if not implied:
                keep.append((b, m))
        return tuple(keep)

    def addable(self, state: tuple[int, ...]) -> Iterator[int]:
        for a, k in enumerate(state):
            if k < self.lengths[a] and all(state[b] >= m for b, m in self.need[a][k]):
                yield a


def _as_diagram(D) -> Diagram:
    if isinstance(D, Diagram):
        return D
    return D.diagram()


# largest primes below 2^59: sums of up to 31 residues fit in uint64
_PRIMES = (
    576460752303423433, 576460752303423389, 576460752303423263, 576460752303423061,
    576460752303422971, 576460752303422881, 576460752303422839, 576460752303422801,
)
_LAYERED_THRESHOLD = 200_000


def count_linear_extensions(D: Diagram | ShapeSpec) -> int:
    """f^D, exactly, by DP over order ideals."""
    D = _as_diagram(D)
    P = _RowPoset(D)
    if _layered_ok(P) and prod(x + 1 for x in P.lengths) > _LAYERED_THRESHOLD:
        return _count_layered(P)
    return _count_memo(P)


def _layered_ok(P: _RowPoset) -> bool:
    n = sum(P.lengths)
    return (
        len(P.lengths) <= 31
        and prod(x + 1 for x in P.lengths) < 2**62
        and factorial(n) < prod(_PRIMES)
    )


def _count_layered(P: _RowPoset) -> int:
    """Same DP as _count_memo, one ideal size at a time, counts mod primes."""
    L = P.lengths
    R = len(L)
    n = sum(L)
    k, bound = 0, 1
    while bound <= factorial(n):
        bound *= _PRIMES[k]
        k += 1
    primes = np.array(_PRIMES[:k], dtype=np.uint64)[:, None]
    radix = [prod(x + 1 for x in L[:a]) for a in range(R)]
    checks = []
    for a in range(R):
        rows = sorted({b for reqs in P.need[a] for b, _ in reqs})
        tables = []
        for b in rows:
            t = [dict(reqs).get(b, 0) for reqs in P.need[a]] + [0]
            tables.append((b, np.array(t, dtype=np.int64)))
        checks.append(tables)

    S = np.zeros(1, dtype=np.int64)
    C = np.ones((k, 1), dtype=np.uint64)
    for _ in range(n):
        parts_s, parts_c = [], []
        for a in range(R):
            d = (S // radix[a]) % (L[a] + 1)
            mask = d < L[a]
            for b, table in checks[a]:
                mask &= (S // radix[b]) % (L[b] + 1) >= table[d]
            idx = np.nonzero(mask)[0]
            if idx.size:
                parts_s.append(S[idx] + radix[a])
                parts_c.append(C[:, idx])
        S2 = np.concatenate(parts_s)
        C2 = np.concatenate(parts_c, axis=1)
        order = np.argsort(S2, kind="stable")
        S2, C2 = S2[order], C2[:, order]
        S, start = np.unique(S2, return_index=True)
        C = np.add.reduceat(C2, start, axis=1) % primes

    # CRT
    x, M = 0, 1
    for r, p in zip(C[:, 0].tolist(), _PRIMES[:k]):
        t = ((r - x) * pow(M, -1, p)) % p
        x += M * t
        M *= p
    return x


def _count_memo(P: _RowPoset) -> int:
    full = P.lengths

    @lru_cache(maxsize=None)
    def ways(state: tuple[int, ...]) -> int:
        if state == full:
            return 1
        total = 0
        for a in P.addable(state):
            nxt = state[:a] + (state[a] + 1,) + state[a + 1:]
            total += ways(nxt)
        return total

    return ways(tuple(0 for _ in full))


def enumerate_syt(D: Diagram | ShapeSpec, limit: int = DEFAULT_LIMIT) -> Iterator[Tableau]:
    """Every SYT of D once, in lexicographic order of row words."""
    D = _as_diagram(D)
    if len(D) > limit:
        raise SizeLimitError(f"diagram has {len(D)} cells; enumeration limit is {limit}")
    P = _RowPoset(D)
    n = len(D)
    state = [0] * len(P.lengths)
    placed: dict = {}

    def rec(k: int) -> Iterator[Tableau]:
        if k > n:
            yield Tableau(dict(placed), normalize=False)
            return
        for a in list(P.addable(tuple(state))):
            cell = (P.row_ids[a], P.cols[a][state[a]])
            placed[cell] = k
            state[a] += 1
            yield from rec(k + 1)
            state[a] -= 1
            del placed[cell]

    return rec(1)


def f_oracle(lam) -> int:
    from .shapes import Ordinary

    return count_linear_extensions(Ordinary(tuple(lam)))


def total_syt(n: int) -> int:
    """Sum of f^lam over lam |- n, each counted by the DP."""
    return sum(f_oracle(lam) for lam in partitions(n))


def _odd_parts(lam) -> int:
    return sum(1 for x in lam if x % 2)


def total_syt_odd_rows(n: int, k: int) -> int:
    """SYT of size n whose shape has exactly n - 2k rows of odd length."""
    if not 0 <= 2 * k <= n:
        raise ValueError("need 0 <= 2k <= n")
    return sum(f_oracle(lam) for lam in partitions(n) if _odd_parts(lam) == n - 2 * k)


def total_syt_even_rows(size: int) -> int:
    """SYT of the given size all of whose rows have even length."""
    return sum(f_oracle(lam) for lam in partitions(size) if _odd_parts(lam) == 0)


def multinomial(parts) -> int:
    out, acc = 1, 0
    for p in parts:
        acc += p
        out *= comb(acc, p)
    return out


def component_product(D: Diagram) -> int:
    """f^D via the order-connected component factorization."""
    from .shapes import components

    comps = components(D, "order")
    return multinomial([len(c) for c in comps]) * prod(count_linear_extensions(c) for c in comps)
