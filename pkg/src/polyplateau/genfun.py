"""Rational generating functions over the integers.

Polynomials in ``t`` are stored as coefficient tuples (index = power), with
no trailing zeros.  A :class:`RationalGF` is expanded into a power series by
long division, which stays exact whenever the denominator starts with ±1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .errors import DomainError
from .polyhypercube import check_params


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, -other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __pow__(self, m: int) -> "IntPolynomial":
        return poly_pow(self, m)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


ONE = IntPolynomial((1,))
T = IntPolynomial((0, 1))
ONE_MINUS_T = IntPolynomial((1, -1))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    size = max(len(a.coeffs), len(b.coeffs))
    return IntPolynomial(a[i] + b[i] for i in range(size))


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if not a.coeffs or not b.coeffs:
        return IntPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPolynomial(out)


def poly_pow(a: IntPolynomial, m: int) -> IntPolynomial:
    if m < 0:
        raise DomainError(f"exponent must be >= 0, got {m}")
    result, base = ONE, a
    while m:
        if m & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        m >>= 1
    return result


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise DomainError("denominator must have a nonzero constant term")

    def same_series(self, other: "RationalGF") -> bool:
        """Formal equality, by cross-multiplication."""
        return self.numerator * other.denominator == other.numerator * self.denominator


@dataclass(frozen=True)
class SeriesPrefix:
    coeffs: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_dict(self, d: Optional[int] = None, k: Optional[int] = None) -> dict:
        out: dict = {}
        if d is not None:
            out["d"] = d
        if k is not None:
            out["k"] = k
        out["order"] = self.order
        out["coeffs"] = [str(c) for c in self.coeffs]
        return out

    def to_json(self, d: Optional[int] = None, k: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(d, k))

    @classmethod
    def from_json(cls, text: str) -> "SeriesPrefix":
        data = json.loads(text)
        prefix = cls(tuple(int(c) for c in data["coeffs"]))
        if prefix.order != data["order"]:
            raise ValueError("order does not match the number of coefficients")
        return prefix

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


def series_expand(f: RationalGF, order: int) -> SeriesPrefix:
    """Coefficients ``c_0 .. c_order`` of ``numerator / denominator``."""
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    den = f.denominator
    lead = den[0]
    if lead == 0:
        raise DomainError("denominator must have a nonzero constant term")
    out: List[int] = []
    for i in range(order + 1):
        acc = f.numerator[i] - sum(den[j] * out[i - j] for j in range(1, min(i, den.degree) + 1))
        q, r = divmod(acc, lead)
        if r:
            raise DomainError(f"coefficient of t^{i} is not an integer")
        out.append(q)
    return SeriesPrefix(tuple(out))


def gf_fixed_width(d: int, k: int) -> RationalGF:
    """``t^(k(d-1)) / (1-t)^((2k-1)(d-1))``: lateral-area series at width ``k``."""
    check_params(d, k)
    return RationalGF(
        IntPolynomial.monomial(k * (d - 1)), poly_pow(ONE_MINUS_T, (2 * k - 1) * (d - 1))
    )


def bivariate_parts(d: int) -> Tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
    """Pieces ``(A, D, B)`` of the width/area series ``x A / (D - x B)``.

    ``A = t^(d-1) (1-t)^(d-1)``, ``D = (1-t)^(2(d-1))``, ``B = t^(d-1)``.
    """
    check_params(d, 1)
    tpow = IntPolynomial.monomial(d - 1)
    return tpow * poly_pow(ONE_MINUS_T, d - 1), poly_pow(ONE_MINUS_T, 2 * (d - 1)), tpow


def bivariate_width_slice(d: int, k: int) -> RationalGF:
    """Coefficient of ``x^k`` in ``x A / (D - x B)``, namely ``A B^(k-1) / D^k``."""
    check_params(d, k)
    a, den, b = bivariate_parts(d)
    return RationalGF(a * poly_pow(b, k - 1), poly_pow(den, k))


def gf_total(d: int) -> RationalGF:
    """Lateral-area series summed over all widths: the bivariate series at ``x = 1``."""
    a, den, b = bivariate_parts(d)
    return RationalGF(a, den - b)
