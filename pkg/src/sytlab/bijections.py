"""The hook-walk sampler and the FZ and NPS hook-length bijections.

Sampler randomness comes from ``random.Random`` (Mersenne Twister). Each
step draws the starting cell first, then one draw per walk step, so a
seed fixes the whole trace.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .shapes import Cell, hook_lengths, ordinary_cells, partition
from .tableau import Tableau, TableauError, is_standard


# -- hook walk ------------------------------------------------------------------

def _hook(cells: set[Cell], c: Cell) -> list[Cell]:
    # rows and columns of an ordinary shape are intervals
    i, j = c
    out = []
    y = j + 1
    while (i, y) in cells:
        out.append((i, y))
        y += 1
    x = i + 1
    while (x, j) in cells:
        out.append((x, j))
        x += 1
    return out


def _as_rng(rng) -> random.Random:
    return rng if isinstance(rng, random.Random) else random.Random(rng)


def gnw_sample(lam: Sequence[int], rng=None) -> Tableau:
    """A uniform SYT of shape lam by repeated hook walks.

    ``rng`` is a ``random.Random`` or a seed for one."""
    lam = partition(lam)
    if not lam:
        raise ValueError("shape must be nonempty")
    rng = _as_rng(rng)
    cells = set(ordinary_cells(lam))
    out = {}
    for k in range(len(cells), 0, -1):
        c = rng.choice(sorted(cells))
        while True:
            h = _hook(cells, c)
            if not h:
                break
            c = rng.choice(h)
        out[c] = k
        cells.remove(c)
    return Tableau(out)


def corner_probabilities(lam: Sequence[int]) -> dict[Cell, Fraction]:
    """Exact law of the corner one hook walk ends in, by summing over walks."""
    lam = partition(lam)
    cells = frozenset(ordinary_cells(lam))

    @lru_cache(maxsize=None)
    def ends(c: Cell) -> tuple[tuple[Cell, Fraction], ...]:
        h = _hook(set(cells), c)
        if not h:
            return ((c, Fraction(1)),)
        acc: dict[Cell, Fraction] = {}
        for c2 in h:
            for corner, p in ends(c2):
                acc[corner] = acc.get(corner, 0) + p / len(h)
        return tuple(acc.items())

    total: dict[Cell, Fraction] = {}
    for c in cells:
        for corner, p in ends(c):
            total[corner] = total.get(corner, 0) + p / len(cells)
    return total


def corner_probability_formula(lam: Sequence[int], corner: Cell) -> Fraction:
    """(1/n) prod_{i<a} h_{ib}/(h_{ib}-1) prod_{j<b} h_{aj}/(h_{aj}-1)."""
    lam = partition(lam)
    H = hook_lengths(lam)
    a, b = corner
    p = Fraction(1, sum(lam))
    for i in range(1, a):
        h = H[i - 1][b - 1]
        p *= Fraction(h, h - 1)
    for j in range(1, b):
        h = H[a - 1][j - 1]
        p *= Fraction(h, h - 1)
    return p


def syt_probability(lam: Sequence[int]) -> Fraction:
    """prod h_c / n!, the chance of each SYT under the sampler."""
    lam = partition(lam)
    return Fraction(prod(h for row in hook_lengths(lam) for h in row), factorial(sum(lam)))


def chi_square(lam: Sequence[int], samples: int, seed: int = 0) -> tuple[float, float, int]:
    """Goodness of fit of ``samples`` draws against the uniform law.

    Returns (statistic, p-value, number of SYT)."""
    from scipy.stats import chisquare

    from .oracle import enumerate_syt
    from .shapes import Ordinary

    rng = random.Random(seed)
    support = list(enumerate_syt(Ordinary(partition(lam))))
    seen = Counter(gnw_sample(lam, rng) for _ in range(samples))
    if set(seen) - set(support):
        raise AssertionError("sampler produced a non-standard tableau")
    observed = [seen.get(T, 0) for T in support]
    stat, p = chisquare(observed)
    return float(stat), float(p), len(support)


# -- pointer tableaux -------------------------------------------------------------

def _rows_of(R: Tableau) -> list[list[int]]:
    rows = R.rows()
    shape = tuple(len(r) for r in rows)
    if R.shape.cells != frozenset(ordinary_cells(shape)) or list(shape) != sorted(shape, reverse=True):
        raise TableauError("input must fill an ordinary shape")
    return rows


def pointer_ok(P: Sequence[Sequence[int]]) -> bool:
    """Every pointer names a cell of its hook: -leg <= p <= arm."""
    lam = [len(r) for r in P]
    for i, row in enumerate(P):
        for j, p in enumerate(row):
            arm = lam[i] - j - 1
            leg = sum(1 for k in range(i + 1, len(lam)) if lam[k] > j)
            if not -leg <= p <= arm:
                return False
    return True


def format_pointers(P: Sequence[Sequence[int]]) -> str:
    return "/".join(",".join(str(p) for p in row) for row in P)


# -- Franzblau-Zeilberger -----------------------------------------------------------

def insert_column(T: list[list[int]], P: list[list[int]], c: Sequence[int]):
    """Attach column c in front of (T, P), then sort; returns new (T, P).

    T's rows must be increasing; len(c) must be at least the number of rows."""
    m = len(c)
    if m < len(T):
        raise ValueError("column shorter than the tableau")
    T = [list(r) for r in T] + [[] for _ in range(m - len(T))]
    d = [0] * (m + 1)  # 1-based
    for i, v in enumerate(c, 1):
        T[i - 1] = sorted(T[i - 1] + [v])
        d[i] = T[i - 1].index(v)

    def out_of_order():
        best = None
        for i in range(1, m):
            for j, v in enumerate(T[i]):
                if j < len(T[i - 1]) and T[i - 1][j] > v and (best is None or v < best[0]):
                    best = (v, i + 1, j + 1)
        return best

    while (hit := out_of_order()) is not None:
        _, k, x = hit
        y = d[k - 1] + 1
        a, b = T[k - 1][x - 1], T[k - 2][y - 1]
        T[k - 1][x - 1], T[k - 2][y - 1] = b, a
        T[k - 1].sort()
        T[k - 2].sort()
        y2 = T[k - 1].index(b) + 1
        v = d[k]
        if v >= 0 and v != x - 1:
            d[k - 1] = v
        elif v == x - 1:
            d[k - 1] = -1
        else:
            d[k - 1] = v - 1
        d[k] = y2 - 1

    P = [[d[i]] + (list(P[i - 1]) if i - 1 < len(P) else []) for i in range(1, m + 1)]
    return T, P


def fz_sort(R: Tableau) -> tuple[Tableau, list[list[int]]]:
    """Sort R column by column, right to left, recording pointers."""
    rows = _rows_of(R)
    T: list[list[int]] = []
    P: list[list[int]] = []
    for j in range(len(rows[0]) - 1, -1, -1):
        col = [r[j] for r in rows if len(r) > j]
        T, P = insert_column(T, P, col)
    return Tableau.from_rows(T), P


# -- Novelli-Pak-Stoyanovskii -------------------------------------------------------

def nps_order(lam: Sequence[int]) -> list[Cell]:
    """Cells by the total order: rightmost column first, bottom to top."""
    cells = ordinary_cells(partition(lam))
    return sorted(cells, key=lambda c: (-c[1], -c[0]))


def nps_sort(R: Tableau, trace: list | None = None) -> tuple[Tableau, list[list[int]]]:
    """Unscramble R by modified slides; ``trace`` collects (T, P) after each slide."""
    rows = _rows_of(R)
    lam = [len(r) for r in rows]
    T = R.as_dict()
    P = {c: 0 for c in T}
    done: set[Cell] = set()
    for c in nps_order(lam):
        v = T[c]
        cur = c
        while True:
            i, j = cur
            below = (i + 1, j) if (i + 1, j) in done else None
            right = (i, j + 1) if (i, j + 1) in done else None
            opts = [x for x in (below, right) if x is not None]
            if not opts:
                break
            nxt = min(opts, key=lambda x: T[x])
            if T[nxt] > v:
                break
            T[cur] = T[nxt]
            cur = nxt
        T[cur] = v
        done.add(c)
        if cur != c:
            (i0, j0), (i1, j1) = c, cur
            for i in range(i0, i1):
                P[(i, j0)] = P[(i + 1, j0)] - 1
            P[(i1, j0)] = j1 - j0
            if trace is not None:
                trace.append((Tableau(T), _pointer_rows(P, lam)))
    return Tableau(T), _pointer_rows(P, lam)


def _pointer_rows(P: dict, lam: Sequence[int]) -> list[list[int]]:
    return [[P[(i + 1, j + 1)] for j in range(l)] for i, l in enumerate(lam)]


def hook_bijection_image(lam: Sequence[int], method: str = "nps") -> tuple[int, int, bool]:
    """Run a bijection on every filling of lam: (#fillings, #distinct images, all valid)."""
    from itertools import permutations

    lam = partition(lam)
    n = sum(lam)
    sort = {"nps": nps_sort, "fz": fz_sort}[method]
    images = set()
    valid = True
    count = 0
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for l in lam:
            rows.append(perm[k:k + l])
            k += l
        T, P = sort(Tableau.from_rows(rows))
        valid = valid and is_standard(T) and pointer_ok(P)
        images.add((T, tuple(map(tuple, P))))
        count += 1
    return count, len(images), valid
