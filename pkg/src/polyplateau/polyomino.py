"""Directed column-convex polyominoes.

A polyomino of width ``k`` whose columns are contiguous vertical segments is
stored as a tuple of :class:`ColumnSegment`.  Two independent views are kept
side by side:

* a fast constructive generator (:func:`enumerate_dccp`) working on the
  segment representation, and
* definition-level checkers (:func:`is_column_convex`, :func:`is_directed`)
  that operate on raw cell sets, together with an exhaustive generator of all
  fixed polyominoes (:func:`fixed_polyominoes`) used as an oracle.

Cell sets are plain ``frozenset`` objects of ``(column, row)`` pairs.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Tuple

from .errors import DomainError

Cell2D = Tuple[int, int]
CellSet2D = FrozenSet[Cell2D]


@lru_cache(maxsize=None)
def binomial(top: int, bottom: int) -> int:
    """Binomial coefficient with ``C(n, k) = 0`` for ``k < 0`` or ``k > n``.

    The top argument must be non-negative.
    """
    if top < 0:
        raise DomainError(f"binomial top argument must be >= 0, got {top}")
    if bottom < 0 or bottom > top:
        return 0
    return math.comb(top, bottom)


@dataclass(frozen=True, order=True)
class ColumnSegment:
    bottom: int
    height: int

    def __post_init__(self):
        if self.height < 1:
            raise ValueError(f"column height must be >= 1, got {self.height}")

    @property
    def top(self) -> int:
        return self.bottom + self.height - 1


@dataclass(frozen=True)
class ColumnConvexPolyomino:
    """Column-convex polyomino in canonical position.

    Column ``i`` (1-based) covers rows ``bottom .. bottom + height - 1``.  The
    first column has bottom 0.
    """

    columns: Tuple[ColumnSegment, ...]

    def __post_init__(self):
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        if not cols:
            raise ValueError("a polyomino needs at least one column")
        if cols[0].bottom != 0:
            raise ValueError("first column must have bottom 0 (canonical translation)")
        for left, right in zip(cols, cols[1:]):
            if right.bottom > left.top or left.bottom > right.top:
                raise ValueError("consecutive columns must share an edge")

    @classmethod
    def from_sequences(cls, heights, bottoms) -> "ColumnConvexPolyomino":
        if len(heights) != len(bottoms):
            raise ValueError("heights and bottoms differ in length")
        return cls(tuple(ColumnSegment(b, h) for h, b in zip(heights, bottoms)))

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def heights(self) -> Tuple[int, ...]:
        return tuple(c.height for c in self.columns)

    @property
    def bottoms(self) -> Tuple[int, ...]:
        return tuple(c.bottom for c in self.columns)

    @property
    def area(self) -> int:
        return sum(self.heights)

    def sort_key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return self.heights, self.bottoms

    def has_directed_shape(self) -> bool:
        """Segment-level directedness test.

        Bottoms must be non-decreasing and each column must start no higher
        than the top of its left neighbour.
        """
        return all(
            left.bottom <= right.bottom <= left.top
            for left, right in zip(self.columns, self.columns[1:])
        )


def _check_width(k: int) -> None:
    if k < 1:
        raise DomainError(f"width must be >= 1, got {k}")


def count_dccp(k: int, n: int) -> int:
    """Number of directed column-convex polyominoes with ``k`` columns and area ``n``."""
    _check_width(k)
    if n < 1:
        raise DomainError(f"area must be >= 1, got {n}")
    return binomial(n + k - 2, n - k)


def compositions(total: int, parts: int, minimum: int = 1) -> Iterator[Tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` parts each ``>= minimum``, in lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def _directed_bottoms(heights: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    bottoms = [0] * len(heights)

    def place(i: int):
        if i == len(heights):
            yield tuple(bottoms)
            return
        prev_bottom, prev_height = bottoms[i - 1], heights[i - 1]
        for b in range(prev_bottom, prev_bottom + prev_height):
            bottoms[i] = b
            yield from place(i + 1)

    yield from place(1)


def enumerate_dccp(k: int, n: int) -> List[ColumnConvexPolyomino]:
    """All directed column-convex polyominoes of width ``k`` and area ``n``.

    Ordered lexicographically by (heights, bottoms).
    """
    _check_width(k)
    out = []
    if n < k:
        return out
    for heights in compositions(n, k):
        for bottoms in _directed_bottoms(heights):
            out.append(ColumnConvexPolyomino.from_sequences(heights, bottoms))
    return out


def rasterize(p: ColumnConvexPolyomino) -> CellSet2D:
    return frozenset(
        (i, y)
        for i, col in enumerate(p.columns, start=1)
        for y in range(col.bottom, col.top + 1)
    )


def canonicalize(cells) -> CellSet2D:
    """Translate so the leftmost column is 1 and its lowest cell sits in row 0."""
    cells = list(cells)
    left = min(c for c, _ in cells)
    base = min(r for c, r in cells if c == left)
    return frozenset((c - left + 1, r - base) for c, r in cells)


def from_cells(cells) -> ColumnConvexPolyomino:
    """Inverse of :func:`rasterize` for column-convex cell sets (any translation)."""
    cells = canonicalize(cells)
    if not is_column_convex(cells):
        raise ValueError("cell set is not column-convex")
    by_col: dict = {}
    for c, r in cells:
        by_col.setdefault(c, []).append(r)
    width = max(by_col)
    if sorted(by_col) != list(range(1, width + 1)):
        raise ValueError("occupied columns are not contiguous")
    return ColumnConvexPolyomino(
        tuple(ColumnSegment(min(by_col[c]), len(by_col[c])) for c in range(1, width + 1))
    )


def width_of(cells) -> int:
    cols = {c for c, _ in cells}
    return max(cols) - min(cols) + 1


def is_column_convex(cells) -> bool:
    rows: dict = {}
    for c, r in cells:
        rows.setdefault(c, []).append(r)
    return all(max(rs) - min(rs) + 1 == len(rs) for rs in rows.values())


def is_directed(cells) -> bool:
    """True when every cell is reachable from a single root by North/East steps.

    The root must be the unique cell with neither a South nor a West
    neighbour in the set.
    """
    cells = frozenset(cells)
    roots = [
        (c, r) for c, r in cells if (c, r - 1) not in cells and (c - 1, r) not in cells
    ]
    if len(roots) != 1:
        return False
    seen = {roots[0]}
    queue = deque(seen)
    while queue:
        c, r = queue.popleft()
        for nxt in ((c + 1, r), (c, r + 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(cells)


def is_connected(cells) -> bool:
    cells = frozenset(cells)
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    queue = deque(seen)
    while queue:
        c, r = queue.popleft()
        for nxt in ((c + 1, r), (c - 1, r), (c, r + 1), (c, r - 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(cells)


def fixed_polyominoes(n: int) -> Iterator[CellSet2D]:
    """Every edge-connected ``n``-cell set up to translation (Redelmeier's method).

    Each translation class is produced exactly once, already canonicalized.
    """
    if n < 1:
        return

    def allowed(cell):
        c, r = cell
        return r > 0 or (r == 0 and c >= 0)

    poly: List[Cell2D] = []
    seen = {(0, 0)}

    def grow(untried: List[Cell2D]):
        untried = list(untried)
        while untried:
            cell = untried.pop()
            poly.append(cell)
            if len(poly) == n:
                yield canonicalize(poly)
            else:
                c, r = cell
                fresh = [
                    nb
                    for nb in ((c + 1, r), (c - 1, r), (c, r + 1), (c, r - 1))
                    if allowed(nb) and nb not in seen
                ]
                seen.update(fresh)
                yield from grow(untried + fresh)
                seen.difference_update(fresh)
            poly.pop()

    yield from grow([(0, 0)])


def brute_force_dccp(n: int) -> dict:
    """Directed column-convex polyominoes of area ``n`` grouped by width.

    Built by filtering :func:`fixed_polyominoes` with the generic checkers.
    """
    groups: dict = {}
    for cells in fixed_polyominoes(n):
        if is_column_convex(cells) and is_directed(cells):
            groups.setdefault(width_of(cells), set()).add(cells)
    return groups


def cells_to_json(cells) -> str:
    return json.dumps(sorted([list(c) for c in cells]))
