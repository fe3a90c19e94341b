"""Reduced words in types A and B and their bijections with SYT.

Convention: a word (i_1, ..., i_t) is evaluated right to left, starting
from the identity, each letter i swapping the entries in positions i and
i + 1 of the current one-line word. Letter 0 in type B negates position 1.
With this convention s_i pi (the left weak order cover) swaps positions
i and i + 1 of pi.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .formulas import f_ordinary, g_shifted
from .perms import Perm, contains_pattern, descent_set, inverse, inversions, is_perm
from .shapes import partition, partitions, staircase, strict_partition, strict_partitions
from .tableau import Tableau, is_standard

LIMITS = {"A": 9, "B": 6}


class WordLimitError(ValueError):
    pass


def apply_word(word: Sequence[int], n: int, signed: bool = False) -> Perm:
    p = list(range(1, n + 1))
    for i in reversed(word):
        if i == 0:
            if not signed:
                raise ValueError("letter 0 exists only in type B")
            p[0] = -p[0]
        elif 1 <= i < n:
            p[i - 1], p[i] = p[i], p[i - 1]
        else:
            raise ValueError(f"letter {i} out of range for n = {n}")
    return tuple(p)


def is_signed_perm(w: Sequence[int]) -> bool:
    return is_perm([abs(x) for x in w])


def length_B(w: Sequence[int]) -> int:
    """inv plus the negative sum, the Coxeter length in B_n."""
    n = len(w)
    nsp = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
    return inversions(w) + nsp + sum(1 for x in w if x < 0)


def _right_descents(w: Perm, signed: bool) -> list[int]:
    out = [0] if signed and w[0] < 0 else []
    return out + [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def _times(w: Perm, i: int) -> Perm:
    w = list(w)
    if i == 0:
        w[0] = -w[0]
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def reduced_word_count(w: Sequence[int], type_: str = "A") -> int:
    """Number of reduced words, by recursion over right descents."""
    w = tuple(w)
    signed = type_ == "B"
    if type_ not in LIMITS:
        raise ValueError(f"unknown type {type_!r}")
    if not (is_signed_perm(w) if signed else is_perm(w)):
        raise ValueError(f"{w} is not a {'signed ' if signed else ''}permutation")
    if len(w) > LIMITS[type_]:
        raise WordLimitError(f"type {type_} is limited to n <= {LIMITS[type_]}")

    @lru_cache(maxsize=None)
    def count(v: Perm) -> int:
        d = _right_descents(v, signed)
        return 1 if not d else sum(count(_times(v, i)) for i in d)

    return count(w)


def reduced_words(w: Sequence[int], type_: str = "A") -> list[tuple[int, ...]]:
    """All reduced words of w; the first letter is applied last, so it is a right descent."""
    signed = type_ == "B"

    @lru_cache(maxsize=None)
    def words(v: Perm) -> tuple[tuple[int, ...], ...]:
        d = _right_descents(v, signed)
        if not d:
            return ((),)
        return tuple((i,) + x for i in d for x in words(_times(v, i)))

    return list(words(tuple(w)))


def longest(n: int, type_: str = "A") -> Perm:
    return tuple(-i for i in range(1, n + 1)) if type_ == "B" else tuple(range(n, 0, -1))


# -- ordinary shapes and shuffles ---------------------------------------------------

def shuffle_of_shape(lam: Sequence[int]) -> Perm:
    """Walk the SE boundary bottom to top; rows are 1..k upward, columns k+1.. rightward."""
    lam = partition(lam)
    if not lam:
        raise ValueError("shape must be nonempty")
    k = len(lam)
    out = []
    col = 0
    for r in range(k, 0, -1):  # r counts rows from the top
        for c in range(col, lam[r - 1]):
            out.append(k + c + 1)
        col = lam[r - 1]
        out.append(k - r + 1)
    return tuple(out)


def word_of_tableau(T: Tableau) -> tuple[int, ...]:
    """Letter j from the right is s_i, where j sits on the i-th diagonal from the left."""
    if not is_standard(T):
        raise ValueError("tableau must be standard")
    height = max(r for r, _ in T.as_dict())
    word = [0] * T.n
    for (r, c), v in T.items():
        word[T.n - v] = c - r + height
    return tuple(word)


def word_of_shifted_tableau(T: Tableau) -> tuple[int, ...]:
    """The same reading on a shifted tableau, diagonals counted from the main one."""
    if not is_standard(T):
        raise ValueError("tableau must be standard")
    word = [0] * T.n
    for (r, c), v in T.items():
        word[T.n - v] = c - r + 1
    return tuple(word)


def staircase_chain_counts(n: int) -> dict:
    """Maximal chains in weak order on S_n, #RW(w0) and f^{delta_{n-1}}, computed separately."""
    if n > 6:
        raise WordLimitError("n <= 6")
    ident = tuple(range(1, n + 1))
    layer = {ident: 1}
    for _ in range(comb(n, 2)):
        nxt: dict = {}
        for p, c in layer.items():
            for i in range(1, n):
                if p[i - 1] < p[i]:
                    q = _times(p, i)
                    nxt[q] = nxt.get(q, 0) + c
        layer = nxt
    chains = layer.get(longest(n), 1 if n <= 1 else 0)
    rw = reduced_word_count(longest(n))
    f = f_ordinary(staircase(n - 1)) if n > 1 else 1
    return {"chains": chains, "reduced_words": rw, "f_staircase": f, "ok": chains == rw == f}


def vexillary_check(pi: Sequence[int]) -> dict:
    """For 2143-avoiding pi, find lam |- inv(pi) with f^lam = #RW(pi)."""
    pi = tuple(pi)
    if len(pi) > 7:
        raise WordLimitError("n <= 7")
    count = reduced_word_count(pi)
    avoids = not contains_pattern(pi, (2, 1, 4, 3))
    matches = [lam for lam in partitions(inversions(pi)) if f_ordinary(lam) == count] if avoids else []
    return {"avoids_2143": avoids, "count": count, "matches": matches, "ok": (not avoids) or bool(matches)}


def reiner_expectation(n: int) -> Fraction:
    """Average number of factors s_i s_{i+1} s_i or s_{i+1} s_i s_{i+1} in a reduced word of w0."""
    ws = reduced_words(longest(n))
    total = 0
    for w in ws:
        total += sum(1 for a, b, c in zip(w, w[1:], w[2:]) if a == c and abs(a - b) == 1)
    return Fraction(total, len(ws))


# -- shifted shapes ---------------------------------------------------------------

def edelman_modified_chains(n: int) -> int:
    """Maximal chains id -> w0 where each cover moves a letter left past a smaller one
    and the moved letter exceeds every letter before it."""
    if n > 6:
        raise WordLimitError("n <= 6")
    layer = {tuple(range(1, n + 1)): 1}
    for _ in range(comb(n, 2)):
        nxt: dict = {}
        for p, c in layer.items():
            for i in range(1, n):
                if p[i - 1] < p[i] and all(x < p[i] for x in p[: i - 1]):
                    q = _times(p, i)
                    nxt[q] = nxt.get(q, 0) + c
        layer = nxt
    return layer.get(longest(n), 1 if n <= 1 else 0)


def is_unimodal(p: Sequence[int]) -> bool:
    d = descent_set(inverse(p))
    return d == frozenset(range(1, len(d) + 1))


def unimodal_of_shape(lam: Sequence[int], n: int) -> Perm:
    """Rows 1.. top to bottom, columns 2.. left to right; walk the SE boundary
    bottom to top, then append the unused values in increasing order."""
    lam = strict_partition(lam)
    if any(l > n - i for i, l in enumerate(lam, 1)):
        raise ValueError(f"{lam} is not inside the shifted staircase of size {n - 1}")
    out = []
    ell = len(lam)
    col = ell  # columns are 1-based; the walk starts left of column ell
    for r in range(ell, 0, -1):
        end = r + lam[r - 1] - 1
        for c in range(col, end + 1):
            out.append(c + 1)
        col = end + 1
        out.append(r)
    used = set(out)
    return tuple(out) + tuple(v for v in range(1, n + 1) if v not in used)


def unimodal_interval_chains(lam: Sequence[int], n: int) -> int:
    """Maximal chains in [id, pi_lam] inside U_n, covers being s_i steps between unimodal permutations."""
    if n > 7:
        raise WordLimitError("n <= 7")
    target = unimodal_of_shape(lam, n)
    layer = {tuple(range(1, n + 1)): 1}
    for _ in range(inversions(target)):
        nxt: dict = {}
        for p, c in layer.items():
            for i in range(1, n):
                if p[i - 1] < p[i]:
                    q = _times(p, i)
                    if is_unimodal(q):
                        nxt[q] = nxt.get(q, 0) + c
        layer = nxt
    return layer.get(target, 0)


def words_verify(max_n: int = 5) -> dict[str, bool]:
    """Every reduced-word identity up to the given size."""
    from .oracle import enumerate_syt
    from .shapes import Ordinary, Shifted

    out = {}
    out["staircase"] = all(staircase_chain_counts(n)["ok"] for n in range(2, min(max_n, 6) + 1))
    out["shuffle"] = all(
        reduced_word_count(shuffle_of_shape(lam)) == f_ordinary(lam)
        for m in range(1, min(max_n + 2, 7) + 1)
        for lam in partitions(m)
    )
    ok = True
    for m in range(1, min(max_n, 6) + 1):
        for lam in partitions(m):
            pi = shuffle_of_shape(lam)
            img = {word_of_tableau(T) for T in enumerate_syt(Ordinary(lam))}
            ok &= img == set(reduced_words(pi)) and all(apply_word(w, len(pi)) == pi for w in img)
    out["word_of_tableau"] = ok
    out["type_B_square"] = all(
        reduced_word_count(longest(n, "B"), "B") == f_ordinary((n,) * n) for n in range(1, min(max_n, 4) + 1)
    )
    out["edelman"] = all(
        edelman_modified_chains(n) == g_shifted(staircase(n - 1)) for n in range(2, min(max_n, 6) + 1)
    )
    ok = True
    for n in range(2, min(max_n, 6) + 1):
        for m in range(comb(n, 2) + 1):
            for lam in strict_partitions(m, n - 1):
                if all(l <= n - i for i, l in enumerate(lam, 1)):
                    ok &= unimodal_interval_chains(lam, n) == (g_shifted(lam) if lam else 1)
                    if lam:
                        pi = unimodal_of_shape(lam, n)
                        ws = {word_of_shifted_tableau(T) for T in enumerate_syt(Shifted(lam))}
                        ok &= all(apply_word(w, n) == pi for w in ws)
    out["unimodal"] = ok
    out["reiner"] = all(reiner_expectation(n) == 1 for n in range(3, min(max_n, 5) + 1))
    return out
