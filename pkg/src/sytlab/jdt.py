"""Jeu de taquin and the Robinson-Schensted correspondence built on it."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .perms import Perm, inverse, is_perm, lds_length, lis_length
from .shapes import Cell
from .tableau import Tableau, TableauError, is_standard

POLICIES = ("nw", "se", "random")


@dataclass(frozen=True)
class SlideTrace:
    start: Cell
    path: tuple[Cell, ...]  # cells the hole passed through, start excluded
    vacated: Cell


def _dominated_holes(cells) -> set[Cell]:
    """Cells of the (1,1) quadrant outside D lying weakly NW of some cell of D."""
    out = set()
    far = 0
    for r in range(max((r for r, _ in cells), default=0), 0, -1):
        far = max([far] + [c for rr, c in cells if rr == r])
        out.update((r, c) for c in range(1, far + 1) if (r, c) not in cells)
    return out


def inner_corners(T: Tableau | dict) -> list[Cell]:
    """Cells c with D + {c} again a skew shape, sorted lexicographically."""
    cells = set(T.as_dict() if isinstance(T, Tableau) else T)
    M = _dominated_holes(cells)
    return sorted((i, j) for i, j in M if (i + 1, j) not in M and (i, j + 1) not in M)


def _slide(T: dict, c: Cell) -> tuple[dict, SlideTrace]:
    T = dict(T)
    start, path = c, []
    while True:
        i, j = c
        c1, c2 = (i + 1, j), (i, j + 1)
        if c1 in T and (c2 not in T or T[c1] < T[c2]):
            nxt = c1
        elif c2 in T:
            nxt = c2
        else:
            break
        T[c] = T.pop(nxt)
        c = nxt
        path.append(c)
    return T, SlideTrace(start, tuple(path), c)


def forward_slide(T: Tableau, c: Cell) -> tuple[Tableau, SlideTrace]:
    """Slide into the inner corner c; the hole exits at trace.vacated."""
    if tuple(c) not in inner_corners(T):
        raise TableauError(f"{c} is not an inner corner of the tableau's shape")
    out, trace = _slide(T.as_dict(), tuple(c))
    return Tableau(out, normalize=False), trace


def rectify(T: Tableau, policy: str = "nw", seed: int | None = None) -> Tableau:
    """JdT: slide into inner corners until (1,1) is occupied.

    ``policy`` picks the corner: lexicographically first ("nw"), last
    ("se"), or uniformly at random from ``random.Random(seed)``."""
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    rng = random.Random(seed)
    cur = T.as_dict()
    while cur and (1, 1) not in cur:
        corners = inner_corners(cur)
        if policy == "nw":
            c = corners[0]
        elif policy == "se":
            c = corners[-1]
        else:
            c = rng.choice(corners)
        cur, _ = _slide(cur, c)
    return Tableau(cur, normalize=False)


def antidiagonal_of(pi: Sequence[int]) -> Tableau:
    """T_pi: column i holds pi(i), in row n + 1 - i."""
    if not is_perm(pi):
        raise ValueError(f"{pi} is not a permutation")
    n = len(pi)
    return Tableau({(n - i, i + 1): v for i, v in enumerate(pi)}, normalize=False)


def rs_pair(pi: Sequence[int]) -> tuple[Tableau, Tableau]:
    """(P, Q) with P = JdT(T_pi) and Q = JdT(T_{pi^-1})."""
    return rectify(antidiagonal_of(pi)), rectify(antidiagonal_of(inverse(pi)))


def rs_inverse(P: Tableau, Q: Tableau) -> Perm:
    """Reverse row insertion: remove n, n-1, ... from Q and bump out of P."""
    if P.shape != Q.shape:
        raise ValueError("P and Q must have the same shape")
    if not (is_standard(P) and is_standard(Q)):
        raise TableauError("P and Q must be standard")
    rows = [list(r) for r in P.rows()]
    n = P.n
    out = [0] * n
    for k in range(n, 0, -1):
        r = Q.row_of(k) - 1
        x = rows[r].pop()
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            # largest entry smaller than x is bumped up
            pos = max(i for i, y in enumerate(row) if y < x)
            row[pos], x = x, row[pos]
        out[k - 1] = x
        if not rows[r]:
            rows.pop(r)
    return tuple(out)


def rs_insert(pi: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Classical row insertion, used as an independent check on rs_pair."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for k, x in enumerate(pi, 1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([k])
                break
            row = P[r]
            pos = next((i for i, y in enumerate(row) if y > x), None)
            if pos is None:
                row.append(x)
                Q[r].append(k)
                break
            row[pos], x = x, row[pos]
            r += 1
    return Tableau.from_rows(P), Tableau.from_rows(Q)


def schensted_report(pi: Sequence[int]) -> dict:
    P, _ = rs_pair(pi)
    shape = tuple(len(r) for r in P.rows())
    lis, lds = lis_length(pi), lds_length(pi)
    return {
        "shape": shape,
        "width": shape[0] if shape else 0,
        "height": len(shape),
        "lis": lis,
        "lds": lds,
        "ok": (shape[0] if shape else 0) == lis and len(shape) == lds,
    }
