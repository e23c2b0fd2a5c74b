"""Sparse polynomials in x_1..x_n and beta with integer coefficients.

A term key is ``(exponents, beta_degree)``. Schur, Grothendieck and GP
polynomials are built by folding monomials over enumerated tableaux.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from staircase.config import Caps, default_caps
from staircase.shapes import Partition, StrictPartition
from staircase.tableaux import iter_ssvt_p, iter_svt, weight_vector

__all__ = [
    "MultiPoly",
    "grothendieck_poly",
    "gp_poly",
    "schur_poly",
    "specialize",
    "format_poly",
]

Key = tuple[tuple[int, ...], int]


class MultiPoly:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, int] = defaultdict(int)
        for (exps, b), c in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has wrong length for n={n}")
            acc[(exps, b)] += c
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash: int | None = None

    # constructors

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "MultiPoly":
        return cls(n, {((0,) * n, 0): 1})

    @classmethod
    def constant(cls, n: int, c: int) -> "MultiPoly":
        return cls(n, {((0,) * n, 0): c})

    @classmethod
    def x(cls, n: int, i: int) -> "MultiPoly":
        """The variable x_i, 1-indexed."""
        if not 1 <= i <= n:
            raise ValueError(f"x_{i} out of range for n={n}")
        exps = tuple(1 if k == i - 1 else 0 for k in range(n))
        return cls(n, {(exps, 0): 1})

    @classmethod
    def beta(cls, n: int) -> "MultiPoly":
        return cls(n, {((0,) * n, 1): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], beta_degree: int = 0, coeff: int = 1) -> "MultiPoly":
        exps = tuple(exps)
        return cls(len(exps), {(exps, beta_degree): coeff})

    # access

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def coefficient(self, exps: Iterable[int], beta_degree: int = 0) -> int:
        return self._terms.get((tuple(exps), beta_degree), 0)

    def __iter__(self) -> Iterator[tuple[Key, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def beta_degrees(self) -> list[int]:
        return sorted({b for (_, b) in self._terms})

    def beta_part(self, b: int) -> "MultiPoly":
        """Coefficient of beta^b, as a beta-free polynomial."""
        return MultiPoly(self.n, {(e, 0): c for (e, bb), c in self._terms.items() if bb == b})

    def at_beta_zero(self) -> "MultiPoly":
        return self.beta_part(0)

    def is_symmetric(self) -> bool:
        """Coefficients are invariant under swapping any two adjacent x's."""
        for i in range(self.n - 1):
            for (e, b), c in self._terms.items():
                swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2 :]
                if self._terms.get((swapped, b), 0) != c:
                    return False
        return True

    # arithmetic

    def _check(self, other: "MultiPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other: object) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other: object) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return MultiPoly(self.n, acc)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: object) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Key, int] = defaultdict(int)
        for (e1, b1), c1 in self._terms.items():
            for (e2, b2), c2 in other._terms.items():
                acc[(tuple(a + b for a, b in zip(e1, e2)), b1 + b2)] += c1 * c2
        return MultiPoly(self.n, acc)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(self.n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def evaluate(self, xs: Iterable[Fraction | int], beta: Fraction | int) -> Fraction:
        xs = [Fraction(v) for v in xs]
        if len(xs) != self.n:
            raise ValueError(f"expected {self.n} x-values, got {len(xs)}")
        beta = Fraction(beta)
        total = Fraction(0)
        for (e, b), c in self._terms.items():
            term = Fraction(c) * beta**b
            for v, a in zip(xs, e):
                if a:
                    term *= v**a
            total += term
        return total

    def __repr__(self) -> str:
        return f"MultiPoly(n={self.n}, {format_poly(self) or '0'})"

    def __str__(self) -> str:
        return format_poly(self)


def _sort_key(item: tuple[Key, int]) -> tuple:
    (e, b), _ = item
    return (sum(e), e, b)


def format_poly(p: MultiPoly) -> str:
    """One ``c * x1^a1 ... xn^an * beta^b`` term per line.

    Sorted by total x-degree, then exponent vector, then beta degree. Zero
    exponents are omitted; a pure constant prints as just ``c``.
    """
    lines = []
    for (e, b), c in sorted(p, key=_sort_key):
        factors = [f"x{i}^{a}" for i, a in enumerate(e, 1) if a]
        pieces = [str(c)]
        if factors:
            pieces.append(" ".join(factors))
        if b:
            pieces.append(f"beta^{b}")
        lines.append(" * ".join(pieces))
    return "\n".join(lines)


def _fold(tableaux, n: int, base_size: int) -> MultiPoly:
    acc: dict[Key, int] = defaultdict(int)
    for t in tableaux:
        acc[(weight_vector(t, n), t.total_entries - base_size)] += 1
    return MultiPoly(n, acc)


def grothendieck_poly(lam: Partition, n: int, caps: Caps | None = None) -> MultiPoly:
    """Sum of beta^{|T|-|lam|} x^{w(T)} over set-valued tableaux of shape lam."""
    (caps or default_caps()).check(lam.size, n)
    return _fold(iter_svt(lam, n), n, lam.size)


def schur_poly(lam: Partition, n: int, caps: Caps | None = None) -> MultiPoly:
    (caps or default_caps()).check(lam.size, n)
    return _fold(iter_svt(lam, n, singletons=True), n, lam.size)


def gp_poly(mu: StrictPartition, n: int, caps: Caps | None = None) -> MultiPoly:
    """Sum over shifted set-valued tableaux; primes count toward their value."""
    (caps or default_caps()).check(mu.size, n)
    return _fold(iter_ssvt_p(mu, n), n, mu.size)


def specialize(p: MultiPoly, x_value: Fraction | int, beta_value: Fraction | int) -> Fraction:
    """Set every x_i to x_value and beta to beta_value."""
    return p.evaluate([x_value] * p.n, beta_value)
