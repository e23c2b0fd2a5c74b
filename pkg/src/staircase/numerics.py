"""Integer and rational helpers shared by every other module.

Scalars are :class:`fractions.Fraction`, which is already canonical (reduced,
positive denominator) and arbitrary precision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = [
    "factorial",
    "double_factorial_odd",
    "pochhammer",
    "generalized_binomial",
    "to_rational",
    "format_rational",
    "is_integer",
    "valuation",
]


def to_rational(value: int | str | Rational) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-11/2"`` to a Fraction.

    Floats are rejected: a float has already lost exactness.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def format_rational(value: Fraction | int) -> str:
    """Render as ``p`` or ``p/q``; never scientific notation."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integer(value: Fraction | int) -> bool:
    return Fraction(value).denominator == 1


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError(f"factorial of negative integer {m}")
    return math.factorial(m)


def double_factorial_odd(k: int) -> int:
    """Return (2k-1)!! = 1*3*5*...*(2k-1)."""
    if k < 1:
        raise ValueError(f"double_factorial_odd needs k >= 1, got {k}")
    return math.prod(range(1, 2 * k, 2))


def pochhammer(a: int | Fraction, s: int) -> Fraction:
    """Rising factorial a(a+1)...(a+s-1); equal to 1 when s == 0."""
    if s < 0:
        raise ValueError(f"pochhammer length must be >= 0, got {s}")
    a = to_rational(a)
    result = Fraction(1)
    for i in range(s):
        result *= a + i
    return result


def generalized_binomial(a: int | Fraction, r: int) -> Fraction:
    """binom(a, r) = a(a-1)...(a-r+1)/r! for rational a and integer r >= 0."""
    if r < 0:
        raise ValueError(f"binomial lower index must be >= 0, got {r}")
    a = to_rational(a)
    return pochhammer(a - r + 1, r) / math.factorial(r)


def valuation(m: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if m == 0:
        raise ValueError("valuation of zero is infinite")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v
