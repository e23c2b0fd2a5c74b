import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from staircase.hyper import (
    PoleSide,
    hyp2f1_at1_regularized,
    hyp2f1_terminating,
    jacobi_at_minus1_closed,
    jacobi_parameters,
    jacobi_poly,
    prefactor_via_double_factorial,
    sst_ratio,
    staircase_prefactor,
)
from staircase.numerics import pochhammer
from staircase.shapes import staircase
from staircase.tableaux import count_sst

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=6)
EPS = sympy.Symbol("eps")


def _q(x: Fraction):
    return sympy.Rational(x.numerator, x.denominator)


def sympy_regularized(a, b, c0):
    """lim eps->0 of 2F1(a, b; c0+eps; 1), or None when it is infinite."""
    a, b = _q(Fraction(a)), _q(Fraction(b))
    c = c0 + EPS
    if (a.is_integer and a <= 0) or (b.is_integer and b <= 0):
        last = min(-int(v) for v in (a, b) if v.is_integer and v <= 0)
        expr = sympy.Add(*(sympy.rf(a, s) * sympy.rf(b, s) / (sympy.rf(c, s) * sympy.factorial(s)) for s in range(last + 1)))
    elif c0 - a - b <= 0:
        return None  # the series itself diverges at z = 1
    else:
        expr = sympy.gamma(c) * sympy.gamma(c - a - b) / (sympy.gamma(c - a) * sympy.gamma(c - b))
    lim = sympy.limit(sympy.simplify(expr), EPS, 0)
    return None if lim.is_infinite or lim is sympy.zoo or lim is sympy.nan else Fraction(int(lim.p), int(lim.q))


@pytest.mark.parametrize("k, a, b, z", [(4, Fraction(1, 2), Fraction(-11, 2), -1), (3, 0, -4, -1), (5, Fraction(2, 3), Fraction(-7, 4), Fraction(1, 3)), (0, 5, 5, 9)])
def test_jacobi_matches_sympy(k, a, b, z):
    # symbolic parameters first: sympy's numeric recurrence divides by zero when a + b is a small negative integer
    A, B = sympy.symbols("A B")
    expected = sympy.expand(sympy.jacobi(k, A, B, _q(Fraction(z)))).subs({A: _q(Fraction(a)), B: _q(Fraction(b))})
    assert jacobi_poly(k, a, b, z) == Fraction(int(expected.p), int(expected.q))


def test_jacobi_published_values():
    assert jacobi_poly(4, Fraction(1, 2), Fraction(-11, 2), -1) == Fraction(315, 128)
    assert jacobi_poly(3, 0, -4, -1) == 1


@given(st.integers(0, 7), rationals, rationals, rationals)
def test_jacobi_reflection_symmetry(k, a, b, z):
    assert jacobi_poly(k, a, b, -z) == (-1) ** k * jacobi_poly(k, b, a, z)


@given(st.integers(0, 7), rationals, rationals, rationals)
def test_jacobi_as_terminating_2f1(k, a, b, z):
    assume(all(a + 1 + j != 0 for j in range(k)))
    lhs = pochhammer(a + 1, k) / math.factorial(k) * hyp2f1_terminating(-k, k + a + b + 1, a + 1, (1 - z) / 2)
    assert jacobi_poly(k, a, b, z) == lhs


@given(st.integers(0, 8), rationals, rationals)
def test_chu_vandermonde(k, b, c):
    assume(all(c + j != 0 for j in range(k)))
    assert hyp2f1_terminating(-k, b, c, 1) == pochhammer(c - b, k) / pochhammer(c, k)


def test_terminating_errors():
    with pytest.raises(ValueError):
        hyp2f1_terminating(Fraction(1, 2), 1, 1, 1)
    with pytest.raises(ZeroDivisionError):
        hyp2f1_terminating(-3, 1, -1, 1)


@given(st.integers(0, 8), st.integers(1, 12))
def test_closed_form_at_minus_one(k, n):
    alpha, beta = jacobi_parameters(k, n)
    assert k + alpha + beta + 1 == 0
    assert jacobi_poly(k, alpha, beta, -1) == jacobi_at_minus1_closed(k, n)


@given(st.integers(0, 15))
def test_prefactor_identity(k):
    assert staircase_prefactor(k) == prefactor_via_double_factorial(k) if k else staircase_prefactor(0) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_sst_ratio_matches_counts(n):
    for k in range(1, n + 1):
        assert sst_ratio(k, n) == Fraction(count_sst(staircase(k + 1), n), count_sst(staircase(k), n))


def test_sst_ratio_published_values():
    assert sst_ratio(4, 6) == 9
    assert sst_ratio(3, 4) == Fraction(16, 5)
    with pytest.raises(ValueError):
        sst_ratio(3, 2)


REGULARIZATION_CASES = [
    (-2, 0, 0),
    (-1, -1, 0),
    (1, 1, 0),
    (1, -1, 0),
    (-1, -1, -2),
    (-3, -1, -2),
    (Fraction(1, 2), Fraction(-5, 2), -1),
    (Fraction(-1, 2), Fraction(-3, 2), -3),
    (-2, 3, -1),
    (-4, -2, -3),
    (Fraction(-7, 2), Fraction(1, 3), -1),
]


@pytest.mark.parametrize("a, b, c0", REGULARIZATION_CASES)
def test_regularization_against_sympy_limit(a, b, c0):
    report = hyp2f1_at1_regularized(a, b, c0)
    expected = sympy_regularized(a, b, c0)
    if report.pole_side is PoleSide.NUMERATOR or report.pole_side is PoleSide.DIVERGENT:
        assert expected is None
        assert not report.exists_nonzero
    else:
        assert report.value == expected
        assert report.exists_nonzero == (expected != 0)


def test_regularization_examples():
    r = hyp2f1_at1_regularized(-3, 0, 0)
    assert (r.exists_nonzero, r.value, r.pole_side) == (True, 1, PoleSide.CANCELLED)
    assert hyp2f1_at1_regularized(-1, -1, 0).pole_side is PoleSide.NUMERATOR
    assert hyp2f1_at1_regularized(1, 1, 0).pole_side is PoleSide.DIVERGENT


def test_textbook_conditions_are_not_sufficient():
    # both sufficient conditions hold, yet the limit is infinite
    r = hyp2f1_at1_regularized(1, -1, 0)
    assert r.condition_1 and r.condition_2
    assert not r.exists_nonzero and r.pole_side is PoleSide.NUMERATOR


def test_textbook_conditions_are_not_necessary():
    r = hyp2f1_at1_regularized(-1, -1, -2)
    assert not r.condition_2
    assert r.exists_nonzero and r.value == Fraction(1, 2)


@settings(deadline=None, max_examples=30)
@given(st.integers(-4, 0), st.integers(-4, 3), st.integers(-4, 0))
def test_regularization_property_against_sympy(a, b, c0):
    report = hyp2f1_at1_regularized(a, b, c0)
    expected = sympy_regularized(a, b, c0)
    if expected is None:
        assert not report.exists_nonzero and report.value is None
    else:
        assert report.value == expected


def test_regularization_rejects_positive_c0():
    with pytest.raises(ValueError):
        hyp2f1_at1_regularized(1, 1, 1)
