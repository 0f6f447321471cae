from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from polyplateau.counting import count_dpp_closed
from polyplateau.errors import DomainError
from polyplateau.genfun import (
    IntPolynomial,
    ONE,
    ONE_MINUS_T,
    RationalGF,
    SeriesPrefix,
    bivariate_width_slice,
    gf_fixed_width,
    gf_total,
    poly_add,
    poly_mul,
    poly_pow,
    series_expand,
)

P = IntPolynomial
polys = st.lists(st.integers(-50, 50), max_size=6).map(P)


def test_canonical_form():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).coeffs == ()
    assert P([0, 0]).degree == -1


def test_arithmetic_examples():
    assert poly_mul(P([1, -1]), P([1, 1])) == P([1, 0, -1])
    assert poly_pow(ONE_MINUS_T, 0) == ONE
    assert poly_pow(ONE_MINUS_T, 4) == P([1, -4, 6, -4, 1])
    assert poly_add(P([1, 2]), P([-1, -2])) == P()
    with pytest.raises(DomainError):
        poly_pow(ONE_MINUS_T, -1)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == P()


@given(polys, st.integers(0, 6))
def test_pow_is_repeated_product(a, m):
    expected = ONE
    for _ in range(m):
        expected = expected * a
    assert poly_pow(a, m) == expected


def test_series_examples():
    assert series_expand(RationalGF(ONE, ONE_MINUS_T), 3).coeffs == (1, 1, 1, 1)
    kernel = RationalGF(P.monomial(2), poly_pow(ONE_MINUS_T, 3))
    assert series_expand(kernel, 5).coeffs == (0, 0, 1, 3, 6, 10)
    assert series_expand(gf_total(3), 6).coeffs == (0, 0, 1, 2, 4, 10, 27)


def test_series_rejects_bad_denominator():
    with pytest.raises(DomainError):
        RationalGF(ONE, P([0, 1]))
    with pytest.raises(DomainError):
        series_expand(RationalGF(ONE, P([2, 1])), 3)
    with pytest.raises(DomainError):
        series_expand(RationalGF(ONE, ONE_MINUS_T), -1)


@given(polys, st.lists(st.integers(-9, 9), max_size=4), st.sampled_from([1, -1]), st.integers(0, 15))
def test_expansion_inverts_multiplication(num, tail, lead, order):
    den = P([lead] + tail)
    series = series_expand(RationalGF(num, den), order)
    product = den * P(series.coeffs)
    assert all(product[i] == num[i] for i in range(order + 1))


def test_kernel_coefficients():
    for k in range(1, 5):
        kernel = RationalGF(P.monomial(k), poly_pow(ONE_MINUS_T, 2 * k - 1))
        s = series_expand(kernel, 20)
        for n in range(21):
            expected = comb(n + k - 2, n - k) if n >= k else 0
            assert s[n] == expected


def test_fixed_width_examples():
    f = gf_fixed_width(3, 1)
    assert f == RationalGF(P.monomial(2), poly_pow(ONE_MINUS_T, 2))
    assert series_expand(f, 6).coeffs == (0, 0, 1, 2, 3, 4, 5)
    assert gf_fixed_width(4, 1) == RationalGF(P.monomial(3), poly_pow(ONE_MINUS_T, 3))
    g = gf_fixed_width(3, 2)
    assert g == RationalGF(P.monomial(4), poly_pow(ONE_MINUS_T, 6))
    assert series_expand(g, 5)[5] == 6
    with pytest.raises(DomainError):
        gf_fixed_width(2, 1)


def test_slice_examples():
    s = bivariate_width_slice(3, 1)
    assert s.numerator == P.monomial(2) * poly_pow(ONE_MINUS_T, 2)
    assert s.denominator == poly_pow(ONE_MINUS_T, 4)
    assert s.same_series(gf_fixed_width(3, 1))
    s2 = bivariate_width_slice(3, 2)
    assert s2.numerator == P.monomial(4) * poly_pow(ONE_MINUS_T, 2)
    assert s2.denominator == poly_pow(ONE_MINUS_T, 8)


def test_slice_identity_grid():
    for d in range(3, 6):
        for k in range(1, 5):
            assert bivariate_width_slice(d, k).same_series(gf_fixed_width(d, k))


def test_total_denominator_d3():
    assert gf_total(3).denominator == P([1, -4, 5, -4, 1])
    assert gf_total(3).numerator == P.monomial(2) * poly_pow(ONE_MINUS_T, 2)


def test_total_examples_d4():
    s = series_expand(gf_total(4), 6)
    assert s[3] == 1
    assert s[6] == count_dpp_closed(4, 1, 6) + count_dpp_closed(4, 2, 6)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_total_matches_sympy(d):
    t = sympy.symbols("t")
    expr = t ** (d - 1) * (1 - t) ** (d - 1) / ((1 - t) ** (2 * (d - 1)) - t ** (d - 1))
    poly = sympy.series(expr, t, 0, 16).removeO()
    expected = tuple(int(poly.coeff(t, n)) for n in range(16))
    assert series_expand(gf_total(d), 15).coeffs == expected


def test_series_json_and_text():
    s = series_expand(gf_total(3), 6)
    assert s.to_text() == "0 0 1 2 4 10 27"
    assert s.to_dict(d=3) == {"d": 3, "order": 6, "coeffs": ["0", "0", "1", "2", "4", "10", "27"]}
    assert "k" in s.to_dict(d=3, k=1)
    assert SeriesPrefix.from_json(s.to_json(d=3)) == s
