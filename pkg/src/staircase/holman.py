"""Holman's hypergeometric F^(n) at the terminating staircase specialization.

With upper parameters a_i = -(i-1) and lower parameters 1, the factor
(-(i-1))_{k_i} vanishes once k_i >= i, so the sum runs over 0 <= k_i <= i-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

from staircase.config import Caps
from staircase.hyper import sst_ratio, staircase_prefactor, jacobi_parameters, jacobi_poly
from staircase.numerics import pochhammer, to_rational
from staircase.polyring import grothendieck_poly, specialize
from staircase.shapes import Partition, staircase
from staircase.tableaux import count_sst

__all__ = [
    "HolmanSpec",
    "holman_f",
    "check_holman_identity",
    "check_gauss_summation_corollary",
    "holman_degree_bound",
]


@dataclass(frozen=True)
class HolmanSpec:
    lam: Partition
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.lam.length > self.n:
            raise ValueError(f"length of ({self.lam}) exceeds n={self.n}")

    @property
    def parts(self) -> tuple[int, ...]:
        return self.lam.padded(self.n)

    def A(self, i: int, j: int) -> int:
        """A_ij = lam_i - lam_j + j - i, for 1 <= i < j <= n."""
        p = self.parts
        return p[i - 1] - p[j - 1] + j - i

    def upper(self, i: int) -> int:
        return -(i - 1)


def holman_f(lam: Partition, n: int, z: int | Fraction | str) -> Fraction:
    spec = HolmanSpec(lam, n)
    z = to_rational(z)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    A = {(i, j): spec.A(i, j) for i, j in pairs}
    # (-(i-1))_k / (1)_k, precomputed per row
    coeff = [[pochhammer(spec.upper(i), k) / math.factorial(k) for k in range(i)] for i in range(1, n + 1)]
    den = math.prod(A.values())
    total = Fraction(0)
    for ks in product(*(range(i) for i in range(1, n + 1))):
        num = math.prod(A[i, j] + ks[i - 1] - ks[j - 1] for i, j in pairs)
        if not num:
            continue
        c = Fraction(num, den)
        for i, k in enumerate(ks):
            c *= coeff[i][k]
        total += c * z ** sum(ks)
    return total


def holman_degree_bound(lam: Partition, n: int) -> int:
    """Upper bound on the beta-degree of G_lam(1..1 | beta)."""
    return max(n * lam.part(1), sum(range(n)))


def check_holman_identity(
    lam: Partition,
    n: int,
    beta_samples: Iterable[int | Fraction] | None = None,
    caps: Caps | None = None,
) -> bool:
    """G_lam(1,...,1 | beta) == |SST(lam, n)| * F(-beta) at every sample.

    Default samples are 0..d for d the degree bound, which makes the check a
    proof of the polynomial identity.
    """
    if beta_samples is None:
        beta_samples = range(holman_degree_bound(lam, n) + 1)
    g = grothendieck_poly(lam, n, caps)
    sst = count_sst(lam, n)
    return all(specialize(g, 1, b) == sst * holman_f(lam, n, -to_rational(b)) for b in beta_samples)


def check_gauss_summation_corollary(k: int, n: int) -> bool:
    """F_{delta_k}(1) / F_{delta_{k+1}}(1) against the Jacobi special value."""
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    lhs = holman_f(staircase(k), n, 1) / holman_f(staircase(k + 1), n, 1)
    alpha, beta = jacobi_parameters(k, n)
    return lhs == staircase_prefactor(k) * jacobi_poly(k, alpha, beta, -1) == sst_ratio(k, n)
