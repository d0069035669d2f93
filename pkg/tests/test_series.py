"""
Tests for Z[L] polynomials and truncated power series
"""

import logging
from pathlib import Path
import sys

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.series.lefschetz import LefschetzPoly, format_poly, poly_add, poly_eval_one, poly_mul
from src.series.truncated import (
    CoefficientRing,
    NonUnitConstantTermError,
    TruncatedSeries,
    series_add,
    series_inverse,
    series_map_coeffs,
    series_mul,
    series_pow,
    series_substitute_tk,
)


# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

L = LefschetzPoly.lefschetz()

polys = st.dictionaries(
    st.integers(min_value=0, max_value=4), st.integers(min_value=-5, max_value=5), max_size=5
).map(LefschetzPoly)


@st.composite
def unit_series(draw, max_precision=24, constants=(1, -1)):
    precision = draw(st.integers(min_value=0, max_value=max_precision))
    c0 = draw(st.sampled_from(constants))
    tail = draw(st.lists(st.integers(min_value=-5, max_value=5), min_size=precision, max_size=precision))
    return TruncatedSeries([c0] + tail, precision)


# Polynomials

def test_canonical_form_drops_zero_terms():
    """Test the canonical sparse form"""
    p = LefschetzPoly({0: 1, 1: 0, 3: 2})
    assert p.coeffs == {0: 1, 3: 2}
    assert LefschetzPoly({2: 0}).is_zero()
    assert LefschetzPoly({2: 0}) == LefschetzPoly.zero()
    assert LefschetzPoly.zero().degree == -1


def test_negative_exponent_rejected():
    """Test rejection of negative exponents"""
    with pytest.raises(ValueError):
        LefschetzPoly({-1: 1})


def test_named_classes():
    """Test the affine and projective space classes"""
    assert LefschetzPoly.affine(3) == L ** 3
    assert LefschetzPoly.projective(2) == 1 + L + L ** 2
    assert LefschetzPoly.projective(0) == 1


def test_poly_mul_examples():
    """Test polynomial products"""
    p1 = LefschetzPoly.projective(1)
    assert poly_mul(p1, p1) == LefschetzPoly({0: 1, 1: 2, 2: 1})
    assert poly_mul(L - 1, L + 1) == L ** 2 - 1
    assert poly_add(L, -L).is_zero()


def test_poly_pow():
    """Test small polynomial powers"""
    p1 = LefschetzPoly.projective(1)
    assert p1 ** 0 == 1
    assert p1 ** 1 == p1
    assert p1 ** 3 == LefschetzPoly({0: 1, 1: 3, 2: 3, 3: 1})
    assert (L ** 4096).degree == 4096


def test_format_poly():
    """Test canonical polynomial text"""
    assert format_poly(LefschetzPoly.projective(2)) == "L^2 + L + 1"
    assert format_poly(LefschetzPoly({3: -2, 1: 1})) == "-2*L^3 + L"
    assert format_poly(LefschetzPoly({3: 1, 1: -2})) == "L^3 - 2*L"
    assert format_poly(LefschetzPoly.zero()) == "0"
    assert format_poly(LefschetzPoly.constant(-7)) == "-7"


def test_eval_one():
    """Test evaluation at L = 1"""
    assert poly_eval_one(LefschetzPoly.projective(3)) == 4
    assert poly_eval_one(L ** 3 - L) == 0
    assert poly_eval_one(5) == 5


def test_constants_compare_and_hash_like_ints():
    """Test that constant polynomials behave like integers"""
    assert LefschetzPoly.constant(3) == 3
    assert hash(LefschetzPoly.constant(3)) == hash(3)
    assert L != 1


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    """Test the commutative ring axioms"""
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p + LefschetzPoly.zero() == p
    assert p * LefschetzPoly.one() == p
    assert (p - p).is_zero()


@given(polys, polys)
def test_eval_one_is_ring_homomorphism(p, q):
    """Test that evaluation at L = 1 respects sums and products"""
    assert poly_eval_one(p * q) == poly_eval_one(p) * poly_eval_one(q)
    assert poly_eval_one(p + q) == poly_eval_one(p) + poly_eval_one(q)


# Series construction and display

def test_padding_and_truncation():
    """Test zero padding and truncation"""
    f = TruncatedSeries([1, 2], 3)
    assert f.coeffs == (1, 2, 0, 0)
    assert len(f) == 4
    assert TruncatedSeries([1, 2, 3, 4], 1).coeffs == (1, 2)
    assert f.truncate(1) == TruncatedSeries([1, 2])
    with pytest.raises(ValueError):
        f.truncate(4)


def test_ring_inference():
    """Test coefficient ring inference"""
    assert TruncatedSeries([1, 2]).ring is CoefficientRing.INTEGER
    assert TruncatedSeries([1, L]).ring is CoefficientRing.LEFSCHETZ


def test_format_series():
    """Test canonical series text"""
    assert str(TruncatedSeries([1, 1, 1, 1], 3)) == "1 + t + t^2 + t^3 + O(t^4)"
    assert str(TruncatedSeries([1, -1, 0, 2])) == "1 - t + 2*t^3 + O(t^4)"
    assert str(TruncatedSeries.zero(2)) == "O(t^3)"
    assert str(TruncatedSeries.one(0)) == "1 + O(t)"
    assert str(TruncatedSeries([1, L], 1)) == "1 + L*t + O(t^2)"
    assert str(TruncatedSeries([1, -L, 2 * L ** 2], 2)) == "1 - L*t + 2*L^2*t^2 + O(t^3)"


def test_format_series_parenthesizes_multi_term_coefficients():
    """Test parentheses around multi-term coefficients"""
    f = TruncatedSeries([LefschetzPoly.one(), 1 + L, 1 + L + L ** 2], 2)
    assert str(f) == "1 + (L + 1)*t + (L^2 + L + 1)*t^2 + O(t^3)"


# Arithmetic

def test_min_precision():
    """Test that binary operations keep the smaller precision"""
    f = TruncatedSeries([1, 1, 1, 1], 3)
    g = TruncatedSeries([1, 2, 3, 4, 5, 6], 5)
    assert series_add(f, g).precision == 3
    assert series_mul(f, g).precision == 3
    assert (f * g).precision == 3


def test_geometric_series_inverse():
    """Test the inverse of 1 - t"""
    one_minus_t = TruncatedSeries([1, -1], 3)
    assert series_pow(one_minus_t, -1).coeffs == (1, 1, 1, 1)
    assert series_inverse(one_minus_t) == TruncatedSeries([1, 1, 1, 1])


def test_pow_examples():
    """Test series powers"""
    f = TruncatedSeries([1, 1, 2], 2)
    assert series_pow(f, 3).coeffs == (1, 3, 9)
    assert series_pow(f, 0) == TruncatedSeries.one(2)
    assert series_pow(f, 1) == f


def test_inverse_requires_unit_constant_term():
    """Test rejection of non-unit constant terms"""
    with pytest.raises(NonUnitConstantTermError):
        series_inverse(TruncatedSeries([2, 1], 3))
    with pytest.raises(NonUnitConstantTermError):
        series_pow(TruncatedSeries([0, 1], 3), -1)


def test_negative_unit_constant_term_inverts():
    """Test inversion with constant term -1"""
    f = TruncatedSeries([-1, 1, 3], 4)
    assert series_mul(f, series_inverse(f)) == TruncatedSeries.one(4)


def test_substitute_examples():
    """Test t -> t^k substitution"""
    assert series_substitute_tk(TruncatedSeries([1, 1, 1], 4), 2).coeffs == (1, 0, 1, 0, 1)
    f = TruncatedSeries([1, 5, 7], 2)
    assert series_substitute_tk(f, 1) == f
    assert series_substitute_tk(TruncatedSeries([1, 2], 5), 3).coeffs == (1, 0, 0, 2, 0, 0)
    with pytest.raises(ValueError):
        series_substitute_tk(f, 0)


def test_substitute_only_reads_needed_coefficients():
    """Test substitution from a shorter series"""
    short = TruncatedSeries([1, 3], 1)
    assert series_substitute_tk(short, 4, precision=7).coeffs == (1, 0, 0, 0, 3, 0, 0, 0)
    with pytest.raises(ValueError):
        series_substitute_tk(short, 2, precision=4)


def test_map_coeffs():
    """Test mapping coefficients into Z"""
    assert series_map_coeffs(TruncatedSeries([LefschetzPoly.one(), L])) == TruncatedSeries([1, 1])
    assert series_map_coeffs(TruncatedSeries.zero(3, CoefficientRing.LEFSCHETZ)) == TruncatedSeries.zero(3)
    f = TruncatedSeries([LefschetzPoly.one(), 1 + L, 1 + L + L ** 2])
    mapped = series_map_coeffs(f)
    assert mapped.coeffs == (1, 2, 3)
    assert mapped.ring is CoefficientRing.INTEGER


def test_alternate():
    """Test t -> -t"""
    assert TruncatedSeries([1, 1, 1, 1]).alternate().coeffs == (1, -1, 1, -1)


@st.composite
def sparse_series(draw, max_precision=16):
    precision = draw(st.integers(min_value=0, max_value=max_precision))
    coefficient = st.one_of(st.just(0), st.just(0), st.integers(min_value=-4, max_value=4), polys)
    coeffs = draw(st.lists(coefficient, min_size=precision + 1, max_size=precision + 1))
    return TruncatedSeries(coeffs, precision, CoefficientRing.LEFSCHETZ)


@given(sparse_series(), sparse_series())
def test_mul_matches_cauchy_product(f, g):
    """Test the product against the convolution formula"""
    precision = min(f.precision, g.precision)
    expected = [
        sum((LefschetzPoly.coerce(f[i]) * g[n - i] for i in range(n + 1)), LefschetzPoly.zero())
        for n in range(precision + 1)
    ]
    assert series_mul(f, g).coeffs == tuple(expected)


def test_mul_with_sparse_factor():
    """Test a product with a factor supported on multiples of k"""
    dense = TruncatedSeries([1, 2, 3, 4, 5, 6, 7], 6)
    spread = series_substitute_tk(TruncatedSeries([1, -1, 1], 2), 3, precision=6)
    assert series_mul(dense, spread).coeffs == (1, 2, 3, 3, 3, 3, 4)
    assert series_mul(spread, dense) == series_mul(dense, spread)
    assert series_mul(TruncatedSeries.zero(4), dense) == TruncatedSeries.zero(4)


@given(unit_series())
def test_inverse_is_exact(f):
    """Test f * f^-1 = 1 on random unit series"""
    assert series_mul(f, series_inverse(f)) == TruncatedSeries.one(f.precision)


@hypothesis_settings(max_examples=50)
@given(unit_series(max_precision=12, constants=(1,)),
       st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))
def test_pow_is_additive_in_the_exponent(f, a, b):
    """Test f^(a+b) = f^a * f^b"""
    assert series_pow(f, a + b) == series_mul(series_pow(f, a), series_pow(f, b))


@given(unit_series(max_precision=10), unit_series(max_precision=10), st.integers(min_value=1, max_value=4))
def test_substitution_commutes_with_products(f, g, k):
    """Test that t -> t^k is multiplicative"""
    lhs = series_substitute_tk(series_mul(f, g), k)
    rhs = series_mul(series_substitute_tk(f, k), series_substitute_tk(g, k))
    assert lhs == rhs


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
