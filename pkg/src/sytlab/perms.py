"""Permutations in one-line notation, 1-based: ``p[i-1]`` is pi(i)."""

from __future__ import annotations

from itertools import permutations as _perms
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def all_perms(n: int) -> Iterator[Perm]:
    return _perms(range(1, n + 1))


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def parse_perm(text: str) -> Perm:
    """``2413`` or ``2,4,1,3``."""
    text = text.strip()
    p = tuple(int(x) for x in text.split(",")) if "," in text else tuple(int(ch) for ch in text)
    if not is_perm(p):
        raise ValueError(f"not a permutation: {text!r}")
    return p


def format_perm(p: Sequence[int]) -> str:
    return ("," if len(p) >= 10 else "").join(str(x) for x in p)


def inverse(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """(p q)(i) = p(q(i))."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def descent_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def maj(p: Sequence[int]) -> int:
    return sum(descent_set(p))


def inversions(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def is_involution(p: Sequence[int]) -> bool:
    return all(p[p[i] - 1] == i + 1 for i in range(len(p)))


def fixed_points(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, 1) if i == v)


def lis_length(p: Sequence[int]) -> int:
    """Longest increasing subsequence by the quadratic DP."""
    best = [1] * len(p)
    for j in range(len(p)):
        for i in range(j):
            if p[i] < p[j] and best[i] + 1 > best[j]:
                best[j] = best[i] + 1
    return max(best, default=0)


def lds_length(p: Sequence[int]) -> int:
    return lis_length([-x for x in p])


def standardize(seq: Sequence[int]) -> Perm:
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    out = [0] * len(seq)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if some subsequence of p is order-isomorphic to pattern."""
    k = len(pattern)
    pattern = tuple(pattern)

    def extend(start: int, chosen: list[int]) -> bool:
        if len(chosen) == k:
            return standardize(chosen) == pattern
        # prune: the partial choice must already be order-isomorphic
        if chosen and standardize(chosen) != standardize(pattern[: len(chosen)]):
            return False
        for i in range(start, len(p)):
            chosen.append(p[i])
            if extend(i + 1, chosen):
                return True
            chosen.pop()
        return False

    return extend(0, [])
