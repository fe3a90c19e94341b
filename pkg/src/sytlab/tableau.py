"""Tableaux on arbitrary diagrams, their statistics and reading maps."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence

from .perms import Perm, descent_set
from .shapes import Cell, Diagram, conjugate


class TableauError(ValueError):
    pass


class Tableau:
    """A bijective filling of a diagram by 1..n.

    Standardness is a predicate (``is_standard``), not an invariant, so
    unsorted Young tableaux are representable too.
    """

    __slots__ = ("_map", "_inv", "_key")

    def __init__(self, entries: Mapping[Cell, int] | Iterable[tuple[Cell, int]], normalize: bool = True):
        items = dict(entries)
        if normalize and items:
            r0 = min(r for r, _ in items)
            c0 = min(c for _, c in items)
            items = {(r - r0 + 1, c - c0 + 1): v for (r, c), v in items.items()}
        if sorted(items.values()) != list(range(1, len(items) + 1)):
            raise TableauError("entries must be a bijection onto 1..n")
        self._map = items
        self._inv = {v: c for c, v in items.items()}
        self._key = tuple(sorted(items.items()))

    # mapping-ish access
    def __getitem__(self, cell: Cell) -> int:
        return self._map[cell]

    def __contains__(self, cell) -> bool:
        return cell in self._map

    def __len__(self) -> int:
        return len(self._map)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Tableau({self.to_text()!r})"

    @property
    def n(self) -> int:
        return len(self._map)

    @property
    def shape(self) -> Diagram:
        return Diagram(frozenset(self._map))

    def items(self):
        return self._map.items()

    def cells(self) -> list[Cell]:
        return sorted(self._map)

    def cell_of(self, k: int) -> Cell:
        return self._inv[k]

    def row_of(self, k: int) -> int:
        return self._inv[k][0]

    def as_dict(self) -> dict[Cell, int]:
        return dict(self._map)

    def rows(self) -> list[list[int]]:
        """Entries of each row, left to right, top row first."""
        if not self._map:
            return []
        out: list[list[int]] = [[] for _ in range(max(r for r, _ in self._map))]
        for (r, c), v in sorted(self._map.items()):
            out[r - 1].append(v)
        return out

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], starts: Sequence[int] | None = None) -> "Tableau":
        """Build from row lists; ``starts[i]`` is the first column of row i+1."""
        entries = {}
        for i, row in enumerate(rows):
            s = 1 if starts is None else starts[i]
            for k, v in enumerate(row):
                entries[(i + 1, s + k)] = v
        return cls(entries)

    @classmethod
    def from_text(cls, text: str) -> "Tableau":
        """Rows joined by '/'; '.' marks a hole; commas separate entries when present."""
        entries = {}
        for i, row in enumerate(text.strip().split("/"), 1):
            tokens = row.split(",") if "," in row else list(row)
            for j, tok in enumerate(tokens, 1):
                tok = tok.strip()
                if tok in (".", ""):
                    continue
                entries[(i, j)] = int(tok)
        return cls(entries)

    def to_text(self) -> str:
        if not self._map:
            return ""
        wide = self.n >= 10
        nrows = max(r for r, _ in self._map)
        lines = []
        for r in range(1, nrows + 1):
            cols = [c for (rr, c) in self._map if rr == r]
            if not cols:
                lines.append("")
                continue
            toks = ["." if (r, c) not in self._map else str(self._map[(r, c)]) for c in range(1, max(cols) + 1)]
            lines.append(("," if wide else "").join(toks))
        return "/".join(lines)

    def render(self) -> str:
        """Multi-line aligned picture."""
        if not self._map:
            return ""
        w = len(str(self.n))
        nrows = max(r for r, _ in self._map)
        ncols = max(c for _, c in self._map)
        lines = []
        for r in range(1, nrows + 1):
            toks = [str(self._map[(r, c)]).rjust(w) if (r, c) in self._map else " " * w for c in range(1, ncols + 1)]
            lines.append(" ".join(toks).rstrip())
        return "\n".join(lines)


def is_standard(T: Tableau) -> bool:
    """Entries increase along the component-wise order restricted to the shape."""
    cells = list(T.items())
    for (a, va) in cells:
        for (b, vb) in cells:
            if a != b and a[0] <= b[0] and a[1] <= b[1] and va > vb:
                return False
    return True


@dataclass(frozen=True)
class StatRecord:
    des_set: frozenset[int]
    des: int
    maj: int
    inv: int
    winv: int
    sign: int


def des_set(T: Tableau) -> frozenset[int]:
    return frozenset(i for i in range(1, T.n) if T.row_of(i) < T.row_of(i + 1))


def inv(T: Tableau) -> int:
    """Pairs i < j with j strictly south and strictly west of i."""
    count = 0
    for i in range(1, T.n + 1):
        ri, ci = T.cell_of(i)
        for j in range(i + 1, T.n + 1):
            rj, cj = T.cell_of(j)
            if rj > ri and cj < ci:
                count += 1
    return count


def winv(T: Tableau) -> int:
    """Pairs i < j with j strictly south and weakly west of i."""
    count = 0
    for i in range(1, T.n + 1):
        ri, ci = T.cell_of(i)
        for j in range(i + 1, T.n + 1):
            rj, cj = T.cell_of(j)
            if rj > ri and cj <= ci:
                count += 1
    return count


def statistics(T: Tableau) -> StatRecord:
    if not is_standard(T):
        raise TableauError("statistics are defined for standard tableaux")
    d = des_set(T)
    k = inv(T)
    return StatRecord(d, len(d), sum(d), k, winv(T), -1 if k % 2 else 1)


def column_pairs(lam: Sequence[int]) -> int:
    """sum_j C(lam'_j, 2), the gap winv - inv on ordinary shapes."""
    return sum(comb(c, 2) for c in conjugate(lam))


# -- ballot sequences ---------------------------------------------------------

def to_ballot(T: Tableau) -> tuple[int, ...]:
    return tuple(T.row_of(i) for i in range(1, T.n + 1))


def is_ballot(b: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for x in b:
        if x < 1:
            return False
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def from_ballot(b: Sequence[int]) -> Tableau:
    if not is_ballot(b):
        raise TableauError(f"not a ballot sequence: {tuple(b)}")
    fill: dict[int, int] = {}
    entries = {}
    for k, r in enumerate(b, 1):
        fill[r] = fill.get(r, 0) + 1
        entries[(r, fill[r])] = k
    return Tableau(entries, normalize=False)


# -- zigzag reading -----------------------------------------------------------

def zigzag_order(D: Diagram) -> tuple[list[Cell], frozenset[int]] | None:
    """Cells of a zigzag in growth order (SW corner first) and its set S, or None."""
    if not D.cells:
        return [], frozenset()
    bottom = max(r for r, _ in D.cells)
    start = (bottom, min(c for r, c in D.cells if r == bottom))
    order = [start]
    S = set()
    cur = start
    while True:
        up = (cur[0] - 1, cur[1])
        right = (cur[0], cur[1] + 1)
        if up in D.cells and right in D.cells:
            return None
        if up in D.cells:
            S.add(len(order))
            cur = up
        elif right in D.cells:
            cur = right
        else:
            break
        order.append(cur)
    if len(order) != len(D.cells):
        return None
    return order, frozenset(S)


def zigzag_read(T: Tableau) -> Perm:
    """Entries listed along the zigzag starting from its SW corner."""
    z = zigzag_order(T.shape)
    if z is None:
        raise TableauError("shape is not a zigzag")
    return tuple(T[c] for c in z[0])


def zigzag_unread(sigma: Sequence[int], S: Iterable[int]) -> Tableau:
    from .shapes import zigzag_cells

    cells = zigzag_cells(len(sigma), S)
    return Tableau({c: v for c, v in zip(cells, sigma)})


def zigzag_read_descents(T: Tableau) -> frozenset[int]:
    return descent_set(zigzag_read(T))
