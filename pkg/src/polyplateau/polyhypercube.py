"""Directed plateau polyhypercubes in dimension ``d >= 3``.

Axis 1 indexes strata; axes ``2..d`` are the lateral axes.  A structured
object is a sequence of boxes (:class:`Plateau`), one per stratum.  Lateral
axis ``l`` is stored at position ``l - 2`` of ``extents``/``offsets``.

Raw cell sets (``frozenset`` of ``d``-tuples) feed the definition-level
checker :func:`generic_is_valid_dpp` and the exhaustive oracle
:func:`oracle_enumerate_dpp`, which never look at per-axis traces.
"""
from __future__ import annotations

import itertools
import json
import math
import os
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from . import polyomino
from .errors import BudgetExceeded, DomainError
from .polyomino import ColumnConvexPolyomino, ColumnSegment

CellD = Tuple[int, ...]
CellSetD = FrozenSet[CellD]

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "POLYPLATEAU_BUDGET"


def default_budget() -> int:
    """Node budget for exhaustive searches, overridable through ``POLYPLATEAU_BUDGET``."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def check_params(d: int, k: int) -> None:
    if d < 3:
        raise DomainError(f"dimension must be >= 3, got {d}")
    if k < 1:
        raise DomainError(f"width must be >= 1, got {k}")


@dataclass(frozen=True)
class Plateau:
    extents: Tuple[int, ...]
    offsets: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "extents", tuple(self.extents))
        object.__setattr__(self, "offsets", tuple(self.offsets))
        if len(self.extents) != len(self.offsets):
            raise ValueError("extents and offsets differ in length")
        if any(e < 1 for e in self.extents):
            raise ValueError(f"plateau extents must be >= 1, got {self.extents}")

    @property
    def volume(self) -> int:
        return math.prod(self.extents)


@dataclass(frozen=True)
class DirectedPlateauPolyhypercube:
    dimension: int
    strata: Tuple[Plateau, ...]

    def __post_init__(self):
        object.__setattr__(self, "strata", tuple(self.strata))
        check_params(self.dimension, len(self.strata))
        for s in self.strata:
            if len(s.extents) != self.dimension - 1:
                raise ValueError(
                    f"each plateau needs {self.dimension - 1} lateral extents, got {len(s.extents)}"
                )
        if any(o != 0 for o in self.strata[0].offsets):
            raise ValueError("first stratum offsets must all be 0 (canonical translation)")
        # Directedness, axis by axis: the next box starts inside the previous one.
        for lower, upper in zip(self.strata, self.strata[1:]):
            for o0, e0, o1 in zip(lower.offsets, lower.extents, upper.offsets):
                if not o0 <= o1 <= o0 + e0 - 1:
                    raise ValueError("strata do not form a directed plateau polyhypercube")

    @property
    def width(self) -> int:
        return len(self.strata)

    @property
    def volume(self) -> int:
        return sum(s.volume for s in self.strata)

    @classmethod
    def from_projections(cls, projections) -> "DirectedPlateauPolyhypercube":
        """Assemble from one directed polyomino per lateral axis (axes 2..d in order)."""
        projections = list(projections)
        widths = {p.width for p in projections}
        if len(widths) != 1:
            raise ValueError("projections must share one width")
        k = widths.pop()
        strata = tuple(
            Plateau(
                tuple(p.columns[s].height for p in projections),
                tuple(p.columns[s].bottom for p in projections),
            )
            for s in range(k)
        )
        return cls(len(projections) + 1, strata)

    def to_dict(self) -> dict:
        return {
            "d": self.dimension,
            "strata": [
                {"extents": list(s.extents), "offsets": list(s.offsets)} for s in self.strata
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DirectedPlateauPolyhypercube":
        return cls(
            data["d"],
            tuple(Plateau(tuple(s["extents"]), tuple(s["offsets"])) for s in data["strata"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _check_axis(d: int, axis: int) -> None:
    if not 2 <= axis <= d:
        raise DomainError(f"lateral axis must lie in 2..{d}, got {axis}")


def project(P: DirectedPlateauPolyhypercube, axis: int) -> ColumnConvexPolyomino:
    """Projection onto the plane spanned by axis 1 and lateral ``axis``."""
    _check_axis(P.dimension, axis)
    i = axis - 2
    base = P.strata[0].offsets[i]
    return ColumnConvexPolyomino(
        tuple(ColumnSegment(s.offsets[i] - base, s.extents[i]) for s in P.strata)
    )


def projections(P: DirectedPlateauPolyhypercube) -> Tuple[ColumnConvexPolyomino, ...]:
    return tuple(project(P, axis) for axis in range(2, P.dimension + 1))


def lateral_area(P: DirectedPlateauPolyhypercube) -> int:
    return sum(sum(s.extents) for s in P.strata)


def enumerate_dpp(d: int, k: int, n: int) -> List[DirectedPlateauPolyhypercube]:
    """Every directed plateau polyhypercube of width ``k`` and lateral area ``n``.

    Ordered lexicographically on the tuple of projections (axes 2..d), each
    projection keyed by (heights, bottoms).
    """
    check_params(d, k)
    found = []
    for areas in polyomino.compositions(n, d - 1, minimum=k):
        per_axis = [polyomino.enumerate_dccp(k, j) for j in areas]
        for combo in itertools.product(*per_axis):
            found.append((tuple(p.sort_key() for p in combo), combo))
    found.sort(key=lambda item: item[0])
    return [DirectedPlateauPolyhypercube.from_projections(combo) for _, combo in found]


def rasterize_dpp(P: DirectedPlateauPolyhypercube) -> CellSetD:
    cells = set()
    for s, plateau in enumerate(P.strata, start=1):
        ranges = [range(o, o + e) for o, e in zip(plateau.offsets, plateau.extents)]
        cells.update((s,) + lat for lat in itertools.product(*ranges))
    return frozenset(cells)


# ---------------------------------------------------------------------------
# Definition-level view on raw cell sets


def _unit_steps(d: int) -> List[CellD]:
    return [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]


def _add(a: CellD, b: CellD) -> CellD:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: CellD, b: CellD) -> CellD:
    return tuple(x - y for x, y in zip(a, b))


def is_face_connected(cells) -> bool:
    cells = frozenset(cells)
    if not cells:
        return False
    steps = _unit_steps(len(next(iter(cells))))
    steps += [tuple(-x for x in s) for s in steps]
    start = next(iter(cells))
    seen = {start}
    queue = deque(seen)
    while queue:
        cur = queue.popleft()
        for st in steps:
            nxt = _add(cur, st)
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(cells)


def is_directed_cells(cells) -> bool:
    """Reachability of all cells from the unique minimal cell by positive unit steps."""
    cells = frozenset(cells)
    if not cells:
        return False
    steps = _unit_steps(len(next(iter(cells))))
    roots = [c for c in cells if all(_sub(c, st) not in cells for st in steps)]
    if len(roots) != 1:
        return False
    seen = {roots[0]}
    queue = deque(seen)
    while queue:
        cur = queue.popleft()
        for st in steps:
            nxt = _add(cur, st)
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(cells)


def _slabs(cells) -> Dict[int, List[CellD]]:
    slabs: Dict[int, List[CellD]] = {}
    for c in cells:
        slabs.setdefault(c[0], []).append(c[1:])
    return slabs


def _is_box(points: List[CellD]) -> bool:
    lo = [min(p[i] for p in points) for i in range(len(points[0]))]
    hi = [max(p[i] for p in points) for i in range(len(points[0]))]
    return len(set(points)) == math.prod(h - l + 1 for l, h in zip(lo, hi))


def generic_is_valid_dpp(cells) -> bool:
    """Check the directed plateau definition directly on a cell set.

    Face-connected, every stratum a full box, strata contiguous along axis 1,
    and directed from the minimal cell.
    """
    cells = frozenset(cells)
    if not cells:
        return False
    if len(next(iter(cells))) < 2:
        return False
    if not is_face_connected(cells):
        return False
    slabs = _slabs(cells)
    if sorted(slabs) != list(range(min(slabs), max(slabs) + 1)):
        return False
    if not all(_is_box(pts) for pts in slabs.values()):
        return False
    return is_directed_cells(cells)


def canonicalize_cells(cells) -> CellSetD:
    """Translate so the first stratum is at axis-1 coordinate 1 and starts at 0 laterally."""
    cells = list(cells)
    first = min(c[0] for c in cells)
    lead = [c for c in cells if c[0] == first]
    shift = (first - 1,) + tuple(min(c[i] for c in lead) for i in range(1, len(cells[0])))
    return frozenset(_sub(c, shift) for c in cells)


def project_cells(cells, axis: int) -> polyomino.CellSet2D:
    """Projection of a raw cell set onto the plane (axis 1, ``axis``), canonicalized."""
    cells = list(cells)
    _check_axis(len(cells[0]), axis)
    return polyomino.canonicalize({(c[0], c[axis - 1]) for c in cells})


def cells_lateral_area(cells) -> int:
    cells = list(cells)
    d = len(cells[0])
    return sum(len({(c[0], c[axis - 1]) for c in cells}) for axis in range(2, d + 1))


def cells_width(cells) -> int:
    xs = {c[0] for c in cells}
    return max(xs) - min(xs) + 1


def cells_to_dict(cells) -> dict:
    cells = sorted(cells)
    return {"d": len(cells[0]), "cells": [list(c) for c in cells]}


def cells_from_dict(data: dict) -> CellSetD:
    cells = frozenset(tuple(c) for c in data["cells"])
    if any(len(c) != data["d"] for c in cells):
        raise ValueError("cell length does not match d")
    return cells


# ---------------------------------------------------------------------------
# Exhaustive oracle


def oracle_enumerate_dpp(
    d: int, k: int, n_max: int, budget: Optional[int] = None, window: Optional[int] = None
) -> Dict[int, set]:
    """Search all box sequences and keep those passing :func:`generic_is_valid_dpp`.

    Returns canonical cell sets grouped by lateral area ``<= n_max``.  Box
    offsets range over ``[-window, window]`` (default ``n_max``) on each
    lateral axis, with the first box pinned at the origin; consecutive boxes
    must overlap laterally or the cell set could not be connected.
    Raises :class:`BudgetExceeded` once more than ``budget`` nodes are visited.
    """
    check_params(d, k)
    if n_max < 0:
        raise DomainError(f"lateral area must be >= 0, got {n_max}")
    budget = default_budget() if budget is None else budget
    window = n_max if window is None else window
    lat = d - 1
    nodes = 0
    found: Dict[int, set] = {}
    boxes: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget, "oracle search")

    def extents_within(limit: int):
        for total in range(lat, limit + 1):
            yield from polyomino.compositions(total, lat)

    def offsets_after(prev, ext):
        # Cells in adjacent strata touch only where the two boxes overlap laterally.
        p_ext, p_off = prev
        return [
            range(max(-window, o0 - e + 1), min(window, o0 + e0 - 1) + 1)
            for e0, o0, e in zip(p_ext, p_off, ext)
        ]

    def extend(used: int):
        s = len(boxes)
        if s == k:
            tick()
            cells = set()
            for x1, (ext, off) in enumerate(boxes, start=1):
                cells.update(
                    (x1,) + p
                    for p in itertools.product(*(range(o, o + e) for o, e in zip(off, ext)))
                )
            if generic_is_valid_dpp(cells):
                area = cells_lateral_area(cells)
                if area <= n_max:
                    found.setdefault(area, set()).add(canonicalize_cells(cells))
            return
        room = n_max - used - lat * (k - s - 1)
        for ext in extents_within(room):
            if s == 0:
                offset_choices = [(0,) * lat]
            else:
                offset_choices = itertools.product(*offsets_after(boxes[-1], ext))
            for off in offset_choices:
                tick()
                boxes.append((ext, off))
                extend(used + sum(ext))
                boxes.pop()

    extend(0)
    return found


def oracle_count_dpp(d: int, k: int, n: int, budget: Optional[int] = None) -> int:
    """Exhaustive count of directed plateau polyhypercubes, for small inputs only."""
    check_params(d, k)
    if n < 0:
        raise DomainError(f"lateral area must be >= 0, got {n}")
    return len(oracle_enumerate_dpp(d, k, n, budget=budget).get(n, ()))
