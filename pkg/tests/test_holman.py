from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from staircase.holman import (
    HolmanSpec,
    check_gauss_summation_corollary,
    check_holman_identity,
    holman_degree_bound,
    holman_f,
)
from staircase.shapes import Partition, partitions_of, staircase
from staircase.tableaux import count_sst, count_svt_formula, iter_svt


def _g_at_ones(lam, n, beta):
    """sum over SVT of beta^(|T|-|lam|), counted from the enumerator."""
    excess = Counter(t.total_entries - lam.size for t in iter_svt(lam, n))
    return sum(Fraction(beta) ** e * c for e, c in excess.items())


@pytest.mark.parametrize(
    "lam, n, expected",
    [(staircase(4), 6, Fraction(134865, 896)), (staircase(3), 4, Fraction(159, 20)), (staircase(4), 4, Fraction(729, 64))],
)
def test_published_values_at_minus_one(lam, n, expected):
    assert holman_f(lam, n, -1) == expected


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 5).flatmap(lambda m: st.sampled_from(list(partitions_of(m)))), st.integers(1, 4), st.fractions(-2, 2, max_denominator=3))
def test_identity_against_tableau_counts(lam, n, beta):
    if lam.length > n:
        return
    assert _g_at_ones(lam, n, beta) == count_sst(lam, n) * holman_f(lam, n, -beta)


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 6).flatmap(lambda m: st.sampled_from(list(partitions_of(m)))), st.integers(1, 5))
def test_value_at_one_and_minus_one(lam, n):
    if lam.length > n:
        return
    assert holman_f(lam, n, 1) == Fraction(1, count_sst(lam, n))
    assert holman_f(lam, n, -1) == Fraction(count_svt_formula(lam, n), count_sst(lam, n))
    assert holman_f(lam, n, 0) == 1


@pytest.mark.parametrize("lam, n", [(Partition((2, 1)), 3), (staircase(4), 4), (Partition((3, 1)), 2)])
def test_polynomial_identity_on_degree_bound_samples(lam, n):
    assert check_holman_identity(lam, n)
    assert holman_degree_bound(lam, n) >= max(t.total_entries - lam.size for t in iter_svt(lam, n))


@pytest.mark.parametrize("n", range(1, 7))
def test_gauss_summation_corollary(n):
    assert all(check_gauss_summation_corollary(k, n) for k in range(1, n + 1))


def test_spec_validation():
    spec = HolmanSpec(Partition((3, 1)), 3)
    assert spec.A(1, 2) == 3 and spec.A(1, 3) == 5 and spec.A(2, 3) == 2
    assert spec.upper(3) == -2
    with pytest.raises(ValueError):
        HolmanSpec(Partition((1, 1, 1)), 2)
    with pytest.raises(ValueError):
        check_gauss_summation_corollary(3, 2)
    with pytest.raises(TypeError):
        holman_f(Partition((1,)), 2, 0.5)
