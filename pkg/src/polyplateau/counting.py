"""Exact counts of directed plateau polyhypercubes by width and lateral area."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import List

from .errors import DomainError
from .polyhypercube import check_params
from .polyomino import binomial, count_dccp


def _check(d: int, k: int, n: int) -> None:
    check_params(d, k)
    if n < 0:
        raise DomainError(f"lateral area must be >= 0, got {n}")


def convolve(a: List[int], b: List[int], length: int) -> List[int]:
    """Cauchy product of two sequences, truncated to ``length`` terms."""
    out = [0] * length
    for i, x in enumerate(a[:length]):
        if x:
            for j, y in enumerate(b[: length - i]):
                out[i + j] += x * y
    return out


def count_dpp_convolution(d: int, k: int, n: int) -> int:
    """Sum over compositions of ``n`` of products of per-axis polyomino counts.

    Computed as the ``(d-1)``-fold self-convolution of ``j -> count_dccp(k, j)``.
    """
    _check(d, k, n)
    kernel = [0] + [count_dccp(k, j) for j in range(1, n + 1)]
    acc = kernel
    for _ in range(d - 2):
        acc = convolve(acc, kernel, n + 1)
    return acc[n]


def count_dpp_closed(d: int, k: int, n: int) -> int:
    """``C(n + (d-1)k - d, n - (d-1)k)``, zero below the minimal lateral area."""
    _check(d, k, n)
    if n < (d - 1) * k:
        return 0
    return binomial(n + (d - 1) * k - d, n - (d - 1) * k)


def vandermonde_lhs(x: int, y: int, n: int) -> int:
    """``sum_{i=0}^{n} C(x+i, i) * C(y+n-i, n-i)``; equals ``C(x+y+n+1, n)``."""
    if x < 0 or y < 0 or n < 0:
        raise DomainError(f"arguments must be non-negative, got x={x}, y={y}, n={n}")
    return sum(binomial(x + i, i) * binomial(y + n - i, n - i) for i in range(n + 1))


def induction_step(d: int, k: int, n: int) -> int:
    """Dimension ``d + 1`` count rebuilt from the dimension ``d`` closed form.

    Splits off the last lateral axis with area ``j`` and sums
    ``count_dccp(k, j) * count_dpp_closed(d, k, n - j)``.
    """
    _check(d, k, n)
    return sum(
        binomial(j + k - 2, j - k) * count_dpp_closed(d, k, n - j)
        for j in range(k, n - (d - 1) * k + 1)
    )


@dataclass
class CountTable:
    d: int
    rows: List[List[int]] = field(default_factory=list)

    @property
    def k_max(self) -> int:
        return len(self.rows)

    @property
    def n_max(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else -1

    def entry(self, k: int, n: int) -> int:
        return self.rows[k - 1][n]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(range(self.n_max + 1))
        writer.writerows(self.rows)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, d: int, text: str) -> "CountTable":
        lines = list(csv.reader(io.StringIO(text)))
        header = [int(x) for x in lines[0]]
        if header != list(range(len(header))):
            raise ValueError("CSV header must list n = 0, 1, 2, ...")
        return cls(d, [[int(x) for x in row] for row in lines[1:]])

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "rows": [
                {"k": k, "counts": [str(c) for c in row]}
                for k, row in enumerate(self.rows, start=1)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        data = json.loads(text)
        rows = sorted(data["rows"], key=lambda r: r["k"])
        if [r["k"] for r in rows] != list(range(1, len(rows) + 1)):
            raise ValueError("table rows must cover k = 1..k_max")
        return cls(data["d"], [[int(c) for c in r["counts"]] for r in rows])


def build_table(d: int, k_max: int, n_max: int) -> CountTable:
    _check(d, k_max, n_max)
    return CountTable(
        d, [[count_dpp_closed(d, k, n) for n in range(n_max + 1)] for k in range(1, k_max + 1)]
    )
