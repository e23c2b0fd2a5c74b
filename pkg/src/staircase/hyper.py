"""Terminating and regularized Gauss 2F1, Jacobi polynomials, staircase ratios."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from staircase.numerics import (
    double_factorial_odd,
    generalized_binomial,
    is_integer,
    pochhammer,
    to_rational,
)

__all__ = [
    "PoleSide",
    "RegularizationReport",
    "hyp2f1_terminating",
    "hyp2f1_at1_regularized",
    "jacobi_poly",
    "jacobi_at_minus1_closed",
    "jacobi_parameters",
    "staircase_prefactor",
    "sst_ratio",
]

RationalLike = int | Fraction | str


def _nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def hyp2f1_terminating(a: RationalLike, b: RationalLike, c: RationalLike, z: RationalLike) -> Fraction:
    """Finite 2F1(a, b; c; z) when a or b is a non-positive integer."""
    a, b, c, z = (to_rational(v) for v in (a, b, c, z))
    stops = [-int(p) for p in (a, b) if _nonpositive_int(p)]
    if not stops:
        raise ValueError(f"2F1({a}, {b}; {c}; z) does not terminate: no upper parameter in Z<=0")
    last = min(stops)
    total = Fraction(0)
    term = Fraction(1)
    for s in range(last + 1):
        total += term
        if s == last:
            break
        if c + s == 0:
            raise ZeroDivisionError(f"(c)_{s + 1} vanishes for c={c} before the series terminates")
        term = term * (a + s) * (b + s) / ((c + s) * (s + 1)) * z
    return total


class PoleSide(str, enum.Enum):
    NUMERATOR = "numerator-dominated"
    CANCELLED = "cancelled"
    DENOMINATOR = "denominator-dominated"
    DIVERGENT = "divergent-series"


@dataclass(frozen=True)
class RegularizationReport:
    """Outcome of the epsilon-limit of 2F1(a, b; c0 + eps; 1).

    ``condition_1``/``condition_2`` record the textbook sufficient conditions
    (c0-a-b in Z>=0; exactly one of c0-a, c0-b in Z<=0). The verdict itself
    comes from counting gamma poles, which is exact.
    """

    exists_nonzero: bool
    value: Fraction | None
    pole_side: PoleSide
    condition_1: bool
    condition_2: bool


def _gamma_residue(x: Fraction) -> Fraction:
    """Leading coefficient of Gamma(x + eps) ~ (-1)^m / (m! eps) at x = -m."""
    m = -int(x)
    return Fraction((-1) ** m, math.factorial(m))


def _gamma_quotient(top: Fraction, bottom: Fraction) -> Fraction:
    """Gamma(top)/Gamma(bottom) for finite arguments differing by an integer."""
    d = top - bottom
    if not is_integer(d):
        raise ValueError(f"Gamma({top})/Gamma({bottom}): arguments differ by non-integer {d}")
    d = int(d)
    return pochhammer(bottom, d) if d >= 0 else 1 / pochhammer(top, -d)


def hyp2f1_at1_regularized(a: RationalLike, b: RationalLike, c0: int) -> RegularizationReport:
    """lim_{eps -> 0} 2F1(a, b; c0 + eps; 1) for c0 a non-positive integer.

    Uses Gauss summation Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)), valid
    when the series terminates or c0 - a - b > 0, and cancels the simple
    poles by their residues. Nothing is evaluated numerically.
    """
    a, b = to_rational(a), to_rational(b)
    c0 = to_rational(c0)
    if not _nonpositive_int(c0):
        raise ValueError(f"c0 must be a non-positive integer, got {c0}")

    s = c0 - a - b
    cond1 = is_integer(s) and s >= 0
    cond2 = sum(_nonpositive_int(x) for x in (c0 - a, c0 - b)) == 1

    terminating = _nonpositive_int(a) or _nonpositive_int(b)
    if not terminating and not s > 0:
        return RegularizationReport(False, None, PoleSide.DIVERGENT, cond1, cond2)

    top = [c0, s]
    bottom = [c0 - a, c0 - b]
    top_poles = [x for x in top if _nonpositive_int(x)]
    bottom_poles = [x for x in bottom if _nonpositive_int(x)]
    if len(top_poles) > len(bottom_poles):
        return RegularizationReport(False, None, PoleSide.NUMERATOR, cond1, cond2)
    if len(top_poles) < len(bottom_poles):
        return RegularizationReport(False, Fraction(0), PoleSide.DENOMINATOR, cond1, cond2)

    value = Fraction(1)
    for x in top_poles:
        value *= _gamma_residue(x)
    for x in bottom_poles:
        value /= _gamma_residue(x)
    top_finite = [x for x in top if not _nonpositive_int(x)]
    bottom_finite = [x for x in bottom if not _nonpositive_int(x)]
    # c0 is always a pole, so at most one finite argument remains on each side
    for t, u in zip(top_finite, bottom_finite):
        value *= _gamma_quotient(t, u)
    return RegularizationReport(value != 0, value, PoleSide.CANCELLED, cond1, cond2)


def jacobi_poly(k: int, alpha: RationalLike, beta: RationalLike, z: RationalLike) -> Fraction:
    """P_k^(alpha, beta)(z) from the finite binomial sum; any rational parameters."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    alpha, beta, z = (to_rational(v) for v in (alpha, beta, z))
    minus = (z - 1) / 2
    plus = (z + 1) / 2
    return sum(
        (
            generalized_binomial(k + alpha, k - r) * generalized_binomial(k + beta, r) * minus**r * plus ** (k - r)
            for r in range(k + 1)
        ),
        Fraction(0),
    )


def jacobi_parameters(k: int, n: int) -> tuple[Fraction, Fraction]:
    """(alpha, beta) = ((n-k-1)/2, (-n-k-1)/2)."""
    return Fraction(n - k - 1, 2), Fraction(-n - k - 1, 2)


def jacobi_at_minus1_closed(k: int, n: int) -> Fraction:
    """(alpha+1)_k / k! at alpha = (n-k-1)/2, where k + alpha + beta + 1 = 0."""
    if k < 0 or n < 1:
        raise ValueError(f"need k >= 0 and n >= 1, got k={k}, n={n}")
    return pochhammer(Fraction(n - k + 1, 2), k) / math.factorial(k)


def staircase_prefactor(k: int) -> Fraction:
    """2^{2k} (k!)^2 / (2k)!."""
    return Fraction(4**k * math.factorial(k) ** 2, math.factorial(2 * k))


def sst_ratio(k: int, n: int) -> Fraction:
    """Jacobi-side value of |SST(delta_{k+1}, n)| / |SST(delta_k, n)|."""
    if k < 1 or n < k:
        raise ValueError(f"sst_ratio needs 1 <= k <= n, got k={k}, n={n}")
    alpha, beta = jacobi_parameters(k, n)
    return staircase_prefactor(k) * jacobi_poly(k, alpha, beta, -1)


def prefactor_via_double_factorial(k: int) -> Fraction:
    return Fraction(2**k * math.factorial(k), double_factorial_odd(k))
