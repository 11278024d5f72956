from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, strategies as hst

from duallie.linalg import Matrix
from duallie.poly import (
    Polynomial,
    char_poly,
    distinct_real_roots,
    factor_poly,
    interpolate,
    rational_roots,
    real_root_count,
    real_roots_rational,
    square_free_decomposition,
)

from conftest import small_rationals, square_matrices

t = Polynomial.x()


def P(*coeffs):
    return Polynomial.from_coeffs(coeffs)


def test_char_poly_examples():
    assert char_poly(Matrix.zeros(2, 2)) == t ** 2
    assert char_poly(Matrix.diag([1, 2])) == P(2, -3, 1)
    assert char_poly(Matrix.from_rows([[0, -1], [1, 0]])) == P(1, 0, 1)


def test_char_poly_nonsquare():
    with pytest.raises(ValueError):
        char_poly(Matrix.zeros(2, 3))


def test_factor_examples():
    assert factor_poly(P(-1, 0, 1)) == [(P(-1, 1), 1), (P(1, 1), 1)]
    assert factor_poly(P(1, 0, 1)) == [(P(1, 0, 1), 1)]
    # order: degree, then ascending coefficients lexicographically
    assert factor_poly(P(0, 0, -1, 1)) == [(P(-1, 1), 1), (t, 2)]


def test_factor_quartic_without_roots():
    # (t^2 + 1)(t^2 - 2) has no rational roots but splits over Q
    p = P(1, 0, 1) * P(-2, 0, 1)
    assert factor_poly(p) == [(P(-2, 0, 1), 1), (P(1, 0, 1), 1)]


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor_poly(Polynomial(()))


def test_real_root_count_examples():
    assert real_root_count(P(1, 0, 1)) == 0
    assert real_root_count(t ** 2) == 2
    assert real_root_count(P(1, 0, 1) * P(-3, 1)) == 1


def test_real_roots_rational():
    assert real_roots_rational(P(-1, 0, 1))
    assert not real_roots_rational(P(-2, 0, 1))
    assert real_roots_rational(P(1, 0, 1))


def test_rational_roots():
    assert rational_roots(P(-1, 0, 4)) == [Fraction(-1, 2), Fraction(1, 2)]


def test_interpolate():
    p = P(3, -1, 2)
    assert interpolate([(x, p(x)) for x in range(3)]) == p


@given(square_matrices(6))
def test_cayley_hamilton(m):
    assert char_poly(m).eval_matrix(m).is_zero()


@given(square_matrices(5))
def test_char_poly_matches_det(m):
    # det(-m) is the constant term
    assert char_poly(m)(0) == (-m).det()


linear = hst.builds(lambda r: P(-r, 1), small_rationals)
quad_irr = hst.builds(lambda a, b: P(a * a + b * b, -2 * a, 1), small_rationals, small_rationals.filter(bool))


@given(hst.lists(linear, max_size=3), hst.lists(quad_irr, max_size=2), small_rationals.filter(bool))
def test_factor_multiplies_back(lins, quads, lead):
    p = reduce(lambda a, b: a * b, lins + quads, Polynomial.constant(lead))
    facs = factor_poly(p)
    back = reduce(lambda a, fm: a * fm[0] ** fm[1], facs, Polynomial.constant(p.leading))
    assert back == p
    keys = [f.sort_key() for f, _ in facs]
    assert keys == sorted(keys)


@given(hst.lists(linear, max_size=3), hst.lists(quad_irr, max_size=2))
def test_real_roots_plus_complex_pairs(lins, quads):
    p = reduce(lambda a, b: a * b, lins + quads, Polynomial.constant(1))
    pairs = sum(m for f, m in factor_poly(p) if f.degree == 2 and distinct_real_roots(f) == 0) if p.degree > 0 else 0
    assert real_root_count(p) + 2 * pairs == p.degree


@given(hst.lists(linear, min_size=1, max_size=4))
def test_square_free_decomposition(lins):
    p = reduce(lambda a, b: a * b, lins)
    parts = square_free_decomposition(p)
    back = reduce(lambda a, sk: a * sk[0] ** sk[1], parts, Polynomial.constant(1))
    assert back == p.monic()
