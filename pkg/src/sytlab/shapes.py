"""Partitions, diagrams and shape expressions.

Cells are ``(row, col)`` pairs in English convention (rows grow downward),
1-based after normalization.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

Cell = tuple[int, int]
Partition = tuple[int, ...]


class ShapeError(ValueError):
    """A shape spec that violates its variant's invariants."""


class ShapeSyntaxError(ValueError):
    """A malformed shape expression; ``pos`` is the offending character index."""

    def __init__(self, message: str, expr: str, pos: int):
        super().__init__(f"{message} at position {pos} in {expr!r}")
        self.expr = expr
        self.pos = pos


# -- partitions -------------------------------------------------------------

def partition(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing sequence and strip trailing zeros."""
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    if any(x <= 0 for x in p):
        raise ShapeError(f"parts must be positive: {tuple(p)}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ShapeError(f"parts must be weakly decreasing: {tuple(p)}")
    return tuple(p)


def strict_partition(parts: Iterable[int]) -> Partition:
    lam = partition(parts)
    if any(lam[i] == lam[i + 1] for i in range(len(lam) - 1)):
        raise ShapeError(f"parts must be strictly decreasing: {lam}")
    return lam


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            yield (first,) + rest


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def staircase(n: int) -> Partition:
    """delta_n = (n, n-1, ..., 1)."""
    return tuple(range(n, 0, -1))


# -- diagrams ---------------------------------------------------------------

def _normalize(cells: Iterable[Cell]) -> frozenset[Cell]:
    cells = list(cells)
    if not cells:
        return frozenset()
    r0 = min(c[0] for c in cells)
    c0 = min(c[1] for c in cells)
    return frozenset((r - r0 + 1, c - c0 + 1) for r, c in cells)


@dataclass(frozen=True)
class Diagram:
    """A finite set of lattice cells, translated so min row = min col = 1."""

    cells: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "cells", _normalize(self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    @property
    def size(self) -> int:
        return len(self.cells)

    def rows(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for r, c in sorted(self.cells):
            out.setdefault(r, []).append(c)
        return out

    def row_lengths(self) -> tuple[int, ...]:
        rows = self.rows()
        if not rows:
            return ()
        return tuple(len(rows.get(r, [])) for r in range(1, max(rows) + 1))

    def transpose(self) -> "Diagram":
        return Diagram(frozenset((c, r) for r, c in self.cells))

    def antitranspose(self) -> "Diagram":
        return Diagram(frozenset((-c, -r) for r, c in self.cells))

    def rotate180(self) -> "Diagram":
        return Diagram(frozenset((-r, -c) for r, c in self.cells))

    def rotate90(self) -> "Diagram":
        return Diagram(frozenset((-c, r) for r, c in self.cells))

    def render(self, mark: str = "#", hole: str = ".") -> str:
        rows = self.rows()
        if not rows:
            return ""
        width = max(c for _, c in self.cells)
        lines = []
        for r in range(1, max(rows) + 1):
            cols = set(rows.get(r, []))
            lines.append("".join(mark if c in cols else hole for c in range(1, width + 1)).rstrip(hole))
        return "\n".join(lines)


def ordinary_cells(lam: Sequence[int]) -> set[Cell]:
    return {(i, j) for i, li in enumerate(lam, 1) for j in range(1, li + 1)}


def shifted_cells(lam: Sequence[int]) -> set[Cell]:
    return {(i, j) for i, li in enumerate(lam, 1) for j in range(i, i + li)}


def zigzag_cells(n: int, S: Iterable[int]) -> list[Cell]:
    """Cells of zigzag_n(S) in growth order: cell i+1 sits above cell i iff i in S."""
    S = set(S)
    if n == 0:
        return []
    r, c = 0, 0
    cells = [(r, c)]
    for i in range(1, n):
        if i in S:
            r -= 1
        else:
            c += 1
        cells.append((r, c))
    r0 = min(x[0] for x in cells)
    return [(a - r0 + 1, b + 1) for a, b in cells]


# -- shape specs ------------------------------------------------------------

@dataclass(frozen=True)
class Ordinary:
    lam: Partition

    def diagram(self) -> Diagram:
        return Diagram(frozenset(ordinary_cells(partition(self.lam))))


@dataclass(frozen=True)
class Skew:
    lam: Partition
    mu: Partition

    def diagram(self) -> Diagram:
        lam, mu = partition(self.lam), partition(self.mu)
        if not contains(lam, mu):
            raise ShapeError(f"{mu} is not contained in {lam}")
        return Diagram(frozenset(ordinary_cells(lam) - ordinary_cells(mu)))


@dataclass(frozen=True)
class Shifted:
    lam: Partition

    def diagram(self) -> Diagram:
        return Diagram(frozenset(shifted_cells(strict_partition(self.lam))))


@dataclass(frozen=True)
class Zigzag:
    n: int
    S: frozenset[int]

    def __init__(self, n: int, S: Iterable[int] = ()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "S", frozenset(S))

    def diagram(self) -> Diagram:
        if self.n < 0 or any(not 1 <= s < self.n for s in self.S):
            raise ShapeError(f"S must be a subset of [1, {self.n - 1}]")
        return Diagram(frozenset(zigzag_cells(self.n, self.S)))


def _truncate(rows: list[tuple[int, int, int]], kappa: Partition) -> set[Cell]:
    # rows: (row, first col, length), top to bottom
    if len(kappa) > len(rows):
        raise ShapeError("truncation has more rows than the base shape")
    cells = set()
    for idx, (r, first, length) in enumerate(rows):
        k = kappa[idx] if idx < len(kappa) else 0
        if k > length:
            raise ShapeError(f"cannot remove {k} cells from row {r} of length {length}")
        cells.update((r, j) for j in range(first, first + length - k))
    return cells


@dataclass(frozen=True)
class TruncatedOrdinary:
    lam: Partition
    kappa: Partition

    def diagram(self) -> Diagram:
        lam, kappa = partition(self.lam), partition(self.kappa)
        cells = _truncate([(i, 1, l) for i, l in enumerate(lam, 1)], kappa)
        D = Diagram(frozenset(cells))
        if not classify(D)["line_convex"]:
            raise ShapeError("truncation is not line-convex; use a general cell list")
        return D


@dataclass(frozen=True)
class TruncatedShifted:
    lam: Partition
    kappa: Partition

    def diagram(self) -> Diagram:
        lam, kappa = strict_partition(self.lam), partition(self.kappa)
        cells = _truncate([(i, i, l) for i, l in enumerate(lam, 1)], kappa)
        D = Diagram(frozenset(cells))
        if not classify(D)["line_convex"]:
            raise ShapeError("truncation is not line-convex; use a general cell list")
        return D


@dataclass(frozen=True)
class General:
    cells: tuple[Cell, ...]

    def __init__(self, cells: Iterable[Cell]):
        object.__setattr__(self, "cells", tuple(sorted(set(cells))))

    def diagram(self) -> Diagram:
        return Diagram(frozenset(self.cells))


ShapeSpec = Union[Ordinary, Skew, Shifted, Zigzag, TruncatedOrdinary, TruncatedShifted, General]


def materialize(spec: ShapeSpec) -> Diagram:
    return spec.diagram()


# -- grammar ----------------------------------------------------------------

_INT_LIST = re.compile(r"\d+(,\d+)*")


def _parse_parts(expr: str, text: str, start: int) -> Partition:
    if text == "":
        return ()
    if not _INT_LIST.fullmatch(text):
        bad = next((i for i, ch in enumerate(text) if not (ch.isdigit() or ch == ",")), None)
        if bad is None:
            bad = text.find(",,") + 1 if ",," in text else (0 if text.startswith(",") else len(text) - 1)
        raise ShapeSyntaxError("expected comma-separated integers", expr, start + bad)
    try:
        return partition(int(x) for x in text.split(","))
    except ShapeError as exc:
        raise ShapeSyntaxError(str(exc), expr, start) from None


def parse_shape(expr: str) -> ShapeSpec:
    """Parse a shape expression such as ``4,3,1``, ``6,4,3,1/4,2,1``, ``4,3,1*``,
    ``zz:9:1,3,5,6``, ``4,4,2,1\\1``, ``4,3,2,1*\\1,1`` or ``cells:(1,1)(2,1)``."""
    s = expr.strip()
    offset = len(expr) - len(expr.lstrip())
    if s.startswith("cells:"):
        body = s[6:]
        cells = []
        for m in re.finditer(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)|\S", body):
            if m.group(1) is None:
                raise ShapeSyntaxError("expected a cell '(row,col)'", expr, offset + 6 + m.start())
            cells.append((int(m.group(1)), int(m.group(2))))
        return General(cells)
    if s.startswith("zz:"):
        parts = s[3:].split(":")
        if len(parts) > 2 or not parts[0].isdigit():
            raise ShapeSyntaxError("expected 'zz:<n>:<set>'", expr, offset + 3)
        n = int(parts[0])
        S: tuple[int, ...] = ()
        if len(parts) == 2 and parts[1]:
            start = offset + 4 + len(parts[0])
            if not _INT_LIST.fullmatch(parts[1]):
                raise ShapeSyntaxError("expected comma-separated integers", expr, start)
            S = tuple(int(x) for x in parts[1].split(","))
            for x in S:
                if not 1 <= x < n:
                    raise ShapeSyntaxError(f"descent {x} outside [1,{n - 1}]", expr, start)
        return Zigzag(n, S)
    if "\\" in s:
        base, _, kap = s.partition("\\")
        kappa = _parse_parts(expr, kap, offset + len(base) + 1)
        if base.endswith("*"):
            return TruncatedShifted(_strict(expr, base[:-1], offset), kappa)
        return TruncatedOrdinary(_parse_parts(expr, base, offset), kappa)
    if "/" in s:
        outer, _, inner = s.partition("/")
        lam = _parse_parts(expr, outer, offset)
        mu = _parse_parts(expr, inner, offset + len(outer) + 1)
        if not contains(lam, mu):
            raise ShapeSyntaxError(f"{mu} is not contained in {lam}", expr, offset + len(outer) + 1)
        return Skew(lam, mu)
    if s.endswith("*"):
        return Shifted(_strict(expr, s[:-1], offset))
    return Ordinary(_parse_parts(expr, s, offset))


def _strict(expr: str, text: str, start: int) -> Partition:
    lam = _parse_parts(expr, text, start)
    if any(lam[i] == lam[i + 1] for i in range(len(lam) - 1)):
        raise ShapeSyntaxError("shifted shapes need strictly decreasing parts", expr, start)
    return lam


def _join(parts: Sequence[int]) -> str:
    return ",".join(str(x) for x in parts)


def format_shape(spec: ShapeSpec) -> str:
    if isinstance(spec, Ordinary):
        return _join(spec.lam)
    if isinstance(spec, Skew):
        return f"{_join(spec.lam)}/{_join(spec.mu)}"
    if isinstance(spec, Shifted):
        return f"{_join(spec.lam)}*"
    if isinstance(spec, Zigzag):
        return f"zz:{spec.n}:{_join(sorted(spec.S))}"
    if isinstance(spec, TruncatedOrdinary):
        return f"{_join(spec.lam)}\\{_join(spec.kappa)}"
    if isinstance(spec, TruncatedShifted):
        return f"{_join(spec.lam)}*\\{_join(spec.kappa)}"
    if isinstance(spec, General):
        return "cells:" + "".join(f"({r},{c})" for r, c in spec.cells)
    raise TypeError(f"not a shape spec: {spec!r}")


# -- geometry ---------------------------------------------------------------

def _bfs_components(cells: frozenset[Cell], linked) -> list[Diagram]:
    seen: set[Cell] = set()
    out = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            a = queue.popleft()
            for b in cells:
                if b not in seen and linked(a, b):
                    seen.add(b)
                    comp.add(b)
                    queue.append(b)
        out.append(Diagram(frozenset(comp)))
    return out


def _adjacent(a: Cell, b: Cell) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def _comparable(a: Cell, b: Cell) -> bool:
    return (a[0] <= b[0] and a[1] <= b[1]) or (b[0] <= a[0] and b[1] <= a[1])


def components(D: Diagram, kind: str = "path") -> list[Diagram]:
    """Path-connected (edge adjacency) or order-connected components."""
    if kind == "path":
        return _bfs_components(D.cells, _adjacent)
    if kind == "order":
        return _bfs_components(D.cells, _comparable)
    raise ValueError(f"unknown component kind {kind!r}")


def _is_interval(values: list[int]) -> bool:
    return max(values) - min(values) + 1 == len(values)


def classify(D: Diagram) -> dict[str, bool]:
    cells = D.cells
    rows: dict[int, list[int]] = {}
    cols: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
        cols.setdefault(c, []).append(r)
    line_convex = all(_is_interval(v) for v in rows.values()) and all(_is_interval(v) for v in cols.values())
    order_convex = True
    for a in cells:
        for b in cells:
            if a[0] <= b[0] and a[1] <= b[1]:
                if any((i, j) not in cells for i in range(a[0], b[0] + 1) for j in range(a[1], b[1] + 1)):
                    order_convex = False
                    break
        if not order_convex:
            break
    return {
        "path_connected": len(components(D, "path")) <= 1,
        "order_connected": len(components(D, "order")) <= 1,
        "line_convex": line_convex,
        "order_convex": order_convex,
    }


def skew_of(D: Diagram) -> tuple[Partition, Partition] | None:
    """Return (lam, mu) with D equal to [lam/mu] up to translation, or None."""
    if not D.cells:
        return (), ()
    rows = D.rows()
    nrows = max(rows)
    width = max(c for _, c in D.cells)
    # shift right if needed so that mu stays weakly decreasing; try each shift
    for shift in range(0, width + nrows + 1):
        lam: list[int] = []
        mu: list[int] = []
        for r in range(1, nrows + 1):
            if r in rows:
                lam.append(max(rows[r]) + shift)
                mu.append(min(rows[r]) - 1 + shift)
            else:
                lam.append(-1)
                mu.append(-1)
        # fill empty rows with the value of the next nonempty row's lam
        for r in range(nrows - 1, -1, -1):
            if lam[r] < 0:
                below = lam[r + 1] if r + 1 < nrows else 0
                lam[r] = mu[r] = below
        try:
            cand = (partition(lam), partition(mu))
        except ShapeError:
            continue
        if not contains(*cand):
            continue
        if Skew(*cand).diagram() == D:
            return cand
    return None


def hook_lengths(lam: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """h(i,j) = lam_i + lam'_j - i - j + 1, row by row."""
    conj = conjugate(lam)
    return tuple(
        tuple(lam[i - 1] + conj[j - 1] - i - j + 1 for j in range(1, lam[i - 1] + 1))
        for i in range(1, len(lam) + 1)
    )


def shifted_hook_set(lam: Sequence[int], cell: Cell) -> set[Cell]:
    """The cell, its arm, its leg, and (for j < t) row j+1 of the shifted diagram."""
    i, j = cell
    cells = shifted_cells(lam)
    hook = {(i, j)}
    hook |= {c for c in cells if c[0] == i and c[1] > j}
    hook |= {c for c in cells if c[1] == j and c[0] > i}
    hook |= {c for c in cells if c[0] == j + 1 and c[1] >= j + 1}
    return hook


def shifted_hook_lengths(lam: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Shifted hook lengths, rows of the shifted diagram top to bottom.

    For j < t the hook turns at the diagonal and h = lam_i + lam_{j+1};
    otherwise it is the arm plus the column below the cell."""
    lam = strict_partition(lam)
    t = len(lam)
    out = []
    for i in range(1, t + 1):
        row = []
        for j in range(i, i + lam[i - 1]):
            if j < t:
                row.append(lam[i - 1] + lam[j])
            else:
                arm = lam[i - 1] + i - 1 - j
                col = sum(1 for k in range(i, t + 1) if lam[k - 1] + k >= j + 1)
                row.append(arm + col)
        out.append(tuple(row))
    return tuple(out)


# -- zigzag compositions ----------------------------------------------------

def zigzag_composition(n: int, S: Iterable[int]) -> tuple[int, ...]:
    s = sorted(set(S))
    if any(not 1 <= x < n for x in s):
        raise ShapeError(f"S must be a subset of [1, {n - 1}]")
    if n == 0:
        return ()
    pts = [0] + s + [n]
    return tuple(pts[k + 1] - pts[k] for k in range(len(pts) - 1))


def set_of_composition(comp: Sequence[int]) -> tuple[int, frozenset[int]]:
    if any(x <= 0 for x in comp):
        raise ShapeError(f"composition parts must be positive: {tuple(comp)}")
    acc = 0
    S = []
    for x in comp[:-1]:
        acc += x
        S.append(acc)
    return sum(comp), frozenset(S)


# -- boundary sequences and r-cores -----------------------------------------

@dataclass(frozen=True)
class BoundarySeq:
    """Finite core of the doubly infinite boundary word 0...0 bits 1...1.

    ``offset`` is the natural index of ``bits[0]``; consecutive bits have
    consecutive indices."""

    bits: tuple[int, ...]
    offset: int = 0

    def bit(self, index: int) -> int:
        k = index - self.offset
        if k < 0:
            return 0
        if k >= len(self.bits):
            return 1
        return self.bits[k]

    @property
    def last(self) -> int:
        return self.offset + len(self.bits) - 1


def boundary_encode(lam: Sequence[int]) -> BoundarySeq:
    """East steps are 1, north steps 0, walking the rim from SW to NE."""
    lam = partition(lam)
    bits: list[int] = []
    for i in range(len(lam) - 1, -1, -1):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        bits.extend([1] * (lam[i] - below))
        bits.append(0)
    # first stored bit is a 1 with t zeros to its right
    return BoundarySeq(tuple(bits), 1 - len(lam))


def boundary_decode(seq: BoundarySeq | Sequence[int]) -> Partition:
    bits = list(seq.bits if isinstance(seq, BoundarySeq) else seq)
    while bits and bits[0] == 0:
        bits.pop(0)
    while bits and bits[-1] == 1:
        bits.pop()
    rows = []
    ones = 0
    for b in bits:
        if b:
            ones += 1
        else:
            rows.append(ones)
    return tuple(reversed(rows))


def natural_indices(seq: BoundarySeq) -> list[int]:
    """Natural index of each stored bit, computed from the definition."""
    out = []
    bits = seq.bits
    for k in range(len(bits)):
        ones_left = sum(bits[: k + 1])
        zeros_right = sum(1 for b in bits[k + 1:] if b == 0)
        out.append(ones_left - zeros_right)
    return out


def r_core(lam: Sequence[int], r: int, scan: str = "ascending") -> Partition:
    """Swap a 1 at position i with a 0 at position i+r until no move applies."""
    if r < 1:
        raise ValueError("r must be positive")
    bits = list(boundary_encode(lam).bits)
    order = range(len(bits) - r) if scan == "ascending" else range(len(bits) - r - 1, -1, -1)
    moved = True
    while moved:
        moved = False
        for i in order:
            if bits[i] == 1 and bits[i + r] == 0:
                bits[i], bits[i + r] = 0, 1
                moved = True
                break
    return boundary_decode(bits)


def r_quotient(lam: Sequence[int], r: int) -> tuple[Partition, ...]:
    if r < 1:
        raise ValueError("r must be positive")
    seq = boundary_encode(lam)
    out = []
    for res in range(r):
        sub = [seq.bit(p) for p in range(seq.offset - r, seq.last + r + 1) if p % r == res]
        out.append(boundary_decode(sub))
    return tuple(out)


def r_core_quotient(lam: Sequence[int], r: int) -> tuple[Partition, tuple[Partition, ...]]:
    return r_core(lam, r), r_quotient(lam, r)


def from_core_quotient(core: Sequence[int], quotient: Sequence[Sequence[int]], r: int) -> Partition:
    """Inverse of r_core_quotient: rebuild lam from its r-core and r-quotient."""
    if len(quotient) != r:
        raise ValueError("quotient must have r components")
    cseq = boundary_encode(core)
    placed: dict[int, int] = {}
    lo, hi = cseq.offset, cseq.last
    for res in range(r):
        # first class position holding a 1 in the core's class word
        m = (cseq.offset - res) // r - 1
        while cseq.bit(res + r * m) == 0:
            m += 1
        a = m
        qseq = boundary_encode(quotient[res])
        qlo, qhi = qseq.offset - 1, qseq.last + 1
        for q in range(qlo, qhi + 1):
            p = res + r * (q + a - 1)
            placed[p] = qseq.bit(q)
            lo, hi = min(lo, p), max(hi, p)
    word = []
    for p in range(lo - r, hi + r + 1):
        if p in placed:
            word.append(placed[p])
        else:
            res = p % r
            # outside a class's stored window the class word is constant
            same = [q for q in placed if q % r == res]
            word.append(0 if p < min(same) else 1)
    return boundary_decode(word)
