"""Grid verification of every implemented identity.

Each check family yields exact ``(left, right)`` pairs; a case passes only on
exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from staircase.config import Caps
from staircase.excited import (
    Ambient,
    eyd_specialized_sum,
    g_via_eyd,
    generate_excited,
    gp_via_eyd,
    three_adic_check,
)
from staircase.holman import check_holman_identity, holman_degree_bound, holman_f
from staircase.hyper import (
    hyp2f1_terminating,
    jacobi_at_minus1_closed,
    jacobi_parameters,
    jacobi_poly,
    prefactor_via_double_factorial,
    sst_ratio,
    staircase_prefactor,
)
from staircase.numerics import double_factorial_odd, format_rational, pochhammer
from staircase.polyring import gp_poly, grothendieck_poly
from staircase.shapes import (
    Partition,
    hook_product,
    partitions_of,
    staircase,
    staircase_content_product,
    strict_partitions_of,
    strict_staircase,
)
from staircase.tableaux import count_sst, count_svt_formula, iter_svt

__all__ = ["Bounds", "CheckResult", "VerifyReport", "run_verify", "CHECKS"]


@dataclass(frozen=True)
class Bounds:
    max_k: int = 4
    max_n: int = 6
    size_cap: int = 8
    enum_n: int = 5


@dataclass(frozen=True)
class CheckResult:
    name: str
    params: str
    left: Fraction | int | bool
    right: Fraction | int | bool

    @property
    def passed(self) -> bool:
        return self.left == self.right

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "left": _render(self.left),
            "right": _render(self.right),
            "pass": self.passed,
        }


def _render(v: Fraction | int | bool) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return format_rational(v)


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def groups(self) -> list[dict]:
        out: dict[str, dict] = {}
        for c in self.checks:
            g = out.setdefault(c.name, {"name": c.name, "cases": 0, "failures": 0, "first_failure": None})
            g["cases"] += 1
            if not c.passed:
                g["failures"] += 1
                if g["first_failure"] is None:
                    g["first_failure"] = c.as_dict()
        return [out[k] for k in sorted(out)]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "groups": self.groups(),
            "checks": [c.as_dict() for c in self.checks],
        }

    def format_text(self) -> str:
        lines = []
        for g in self.groups():
            status = "PASS" if g["failures"] == 0 else "FAIL"
            lines.append(f"{status} {g['name']} ({g['cases']} cases)")
            if g["first_failure"]:
                f = g["first_failure"]
                lines.append(f"    first divergence at {f['params']}: {f['left']} != {f['right']}")
        total = len(self.checks)
        bad = sum(not c.passed for c in self.checks)
        lines.append(f"{'OK' if not bad else 'FAILED'}: {total - bad}/{total} cases passed")
        return "\n".join(lines)


Family = Callable[[Bounds], Iterator[CheckResult]]
CHECKS: dict[str, Family] = {}


def _family(name: str) -> Callable[[Family], Family]:
    def register(fn: Family) -> Family:
        CHECKS[name] = fn
        return fn

    return register


def _caps(b: Bounds) -> Caps:
    return Caps(size=max(b.size_cap, 1), n=max(b.max_n, b.enum_n, 1))


@_family("hook_ratio")
def _hook_ratio(b: Bounds) -> Iterator[CheckResult]:
    for k in range(1, b.max_k + 1):
        yield CheckResult(
            "hook_ratio", f"k={k}", Fraction(hook_product(staircase(k + 1)), hook_product(staircase(k))), double_factorial_odd(k)
        )


@_family("content_product_pochhammer")
def _content_products(b: Bounds) -> Iterator[CheckResult]:
    for k in range(1, b.max_k + 1):
        m = k // 2
        for n in range(max(k, 1), b.max_n + 1):
            if k % 2 == 0:
                rhs = 4**m * pochhammer(Fraction(n + 1, 2) - m, m) * pochhammer(Fraction(n + 1, 2), m)
            else:
                rhs = n * 4**m * pochhammer(Fraction(n, 2) - m, m) * pochhammer(Fraction(n, 2) + 1, m)
            yield CheckResult("content_product_pochhammer", f"k={k},n={n}", staircase_content_product(k, n), rhs)


@_family("sst_ratio_jacobi")
def _sst_ratio_jacobi(b: Bounds) -> Iterator[CheckResult]:
    for n in range(1, b.max_n + 1):
        for k in range(1, n + 1):
            lhs = Fraction(count_sst(staircase(k + 1), n), count_sst(staircase(k), n))
            yield CheckResult("sst_ratio_jacobi", f"k={k},n={n}", lhs, sst_ratio(k, n))


@_family("jacobi_closed_form")
def _jacobi_closed(b: Bounds) -> Iterator[CheckResult]:
    for n in range(1, b.max_n + 1):
        for k in range(0, n + 1):
            alpha, beta = jacobi_parameters(k, n)
            yield CheckResult("jacobi_closed_form", f"k={k},n={n}", jacobi_poly(k, alpha, beta, -1), jacobi_at_minus1_closed(k, n))


@_family("prefactor_identity")
def _prefactor(b: Bounds) -> Iterator[CheckResult]:
    for k in range(1, b.max_k + 1):
        yield CheckResult("prefactor_identity", f"k={k}", staircase_prefactor(k), prefactor_via_double_factorial(k))


_RATIONAL_SAMPLES = [Fraction(p, q) for p, q in [(-3, 1), (-1, 2), (0, 1), (1, 3), (2, 1), (-7, 4), (5, 2)]]


@_family("jacobi_symmetry")
def _jacobi_symmetry(b: Bounds) -> Iterator[CheckResult]:
    samples = _RATIONAL_SAMPLES[: max(2, min(len(_RATIONAL_SAMPLES), b.max_k + 1))]
    for k in range(0, b.max_k + 1):
        for alpha in samples[:3]:
            for beta in samples[-3:]:
                for z in samples[1:4]:
                    yield CheckResult(
                        "jacobi_symmetry",
                        f"k={k},a={alpha},b={beta},z={z}",
                        jacobi_poly(k, alpha, beta, -z),
                        (-1) ** k * jacobi_poly(k, beta, alpha, z),
                    )


@_family("chu_vandermonde")
def _chu_vandermonde(b: Bounds) -> Iterator[CheckResult]:
    bs = [Fraction(1, 2), Fraction(-7, 3), Fraction(4)]
    cs = [Fraction(5, 2), Fraction(1, 3), Fraction(7)]
    for m in range(0, b.max_k + 1):
        for bb in bs:
            for c in cs:
                yield CheckResult(
                    "chu_vandermonde",
                    f"m={m},b={bb},c={c}",
                    hyp2f1_terminating(-m, bb, c, 1),
                    pochhammer(c - bb, m) / pochhammer(c, m),
                )


@_family("svt_formula_vs_enumeration")
def _svt(b: Bounds) -> Iterator[CheckResult]:
    for size in range(b.size_cap + 1):
        for lam in partitions_of(size):
            for n in range(1, b.enum_n + 1):
                brute = sum(1 for _ in iter_svt(lam, n))
                yield CheckResult("svt_formula_vs_enumeration", f"lam=({lam}),n={n}", brute, count_svt_formula(lam, n))


@_family("sst_formula_vs_enumeration")
def _sst(b: Bounds) -> Iterator[CheckResult]:
    for size in range(b.size_cap + 1):
        for lam in partitions_of(size):
            for n in range(1, b.enum_n + 1):
                brute = sum(1 for _ in iter_svt(lam, n, singletons=True))
                yield CheckResult("sst_formula_vs_enumeration", f"lam=({lam}),n={n}", brute, count_sst(lam, n))


@_family("holman_grothendieck_identity")
def _holman_identity(b: Bounds) -> Iterator[CheckResult]:
    caps = _caps(b)
    for size in range(min(b.size_cap, 6) + 1):
        for lam in partitions_of(size):
            for n in range(max(lam.length, 1), min(b.enum_n, 4) + 1):
                yield CheckResult(
                    "holman_grothendieck_identity",
                    f"lam=({lam}),n={n},beta=0..{holman_degree_bound(lam, n)}",
                    check_holman_identity(lam, n, caps=caps),
                    True,
                )


@_family("holman_at_one")
def _holman_one(b: Bounds) -> Iterator[CheckResult]:
    for size in range(b.size_cap + 1):
        for lam in partitions_of(size):
            for n in range(max(lam.length, 1), min(b.max_n, 5) + 1):
                yield CheckResult("holman_at_one", f"lam=({lam}),n={n}", holman_f(lam, n, 1), Fraction(1, count_sst(lam, n)))


def _recurrence_rhs(k: int, n: int, beta: Fraction) -> Fraction:
    return sst_ratio(k, n) * holman_f(staircase(k + 1), n, -beta) / holman_f(staircase(k), n, -beta)


def _recurrence_points(b: Bounds) -> list[tuple[int, int]]:
    pts = {(k, n) for k in range(1, min(b.max_k, 3) + 1) for n in range(k, min(b.max_n, 5) + 1)}
    pts |= {(k, n) for k, n in [(3, 4), (4, 6)] if k <= b.max_k and n <= b.max_n}
    return sorted(pts)


_BETAS = [Fraction(1, 2), Fraction(1), Fraction(2)]


@_family("grothendieck_recurrence")
def _prop_g(b: Bounds) -> Iterator[CheckResult]:
    for k, n in _recurrence_points(b):
        for beta in _BETAS:
            lhs = eyd_specialized_sum(staircase(k + 1), n, Ambient.STRAIGHT, 1, beta) / eyd_specialized_sum(
                staircase(k), n, Ambient.STRAIGHT, 1, beta
            )
            yield CheckResult("grothendieck_recurrence", f"k={k},n={n},beta={beta}", lhs, _recurrence_rhs(k, n, beta))


@_family("gp_recurrence")
def _prop_gp(b: Bounds) -> Iterator[CheckResult]:
    for k, n in _recurrence_points(b):
        for beta in _BETAS:
            lhs = eyd_specialized_sum(strict_staircase(k + 1), n, Ambient.SHIFTED, 1, beta) / eyd_specialized_sum(
                strict_staircase(k), n, Ambient.SHIFTED, 1, beta
            )
            yield CheckResult("gp_recurrence", f"k={k},n={n},beta={beta}", lhs, _recurrence_rhs(k, n, beta))


@_family("holman_jacobi_ratio")
def _cor_holman(b: Bounds) -> Iterator[CheckResult]:
    for n in range(1, b.max_n + 1):
        for k in range(1, min(b.max_k, n) + 1):
            lhs = holman_f(staircase(k), n, 1) / holman_f(staircase(k + 1), n, 1)
            alpha, beta = jacobi_parameters(k, n)
            yield CheckResult("holman_jacobi_ratio", f"k={k},n={n}", lhs, staircase_prefactor(k) * jacobi_poly(k, alpha, beta, -1))


@_family("gp_equals_g_staircase")
def _gp_equals_g(b: Bounds) -> Iterator[CheckResult]:
    caps = _caps(b)
    for k in range(2, min(b.max_k, 4) + 1):
        for n in range(3, min(b.max_n, 4) + 1):
            yield CheckResult(
                "gp_equals_g_staircase",
                f"k={k},n={n}",
                gp_poly(strict_staircase(k), n, caps) == grothendieck_poly(staircase(k), n, caps),
                True,
            )


@_family("gp_equals_g_only_staircase")
def _gp_equals_g_only_staircase(b: Bounds) -> Iterator[CheckResult]:
    if b.max_n < 3:
        return
    caps = _caps(b)
    stair = {staircase(k).parts for k in range(1, 5)}
    for size in range(min(b.size_cap, 4) + 1):
        for lam in partitions_of(size):
            g = grothendieck_poly(lam, 3, caps)
            for mu in strict_partitions_of(size):
                expected = lam.parts == mu.parts and lam.parts in stair
                yield CheckResult(
                    "gp_equals_g_only_staircase", f"lam=({lam}),mu=({mu}),n=3", g == gp_poly(mu, 3, caps), expected
                )


@_family("eyd_type_a_vs_tableaux")
def _eyd_a(b: Bounds) -> Iterator[CheckResult]:
    caps = _caps(b)
    for size in range(min(b.size_cap, 6) + 1):
        for lam in partitions_of(size):
            for n in range(max(lam.length, 1), min(b.enum_n, 4) + 1):
                yield CheckResult(
                    "eyd_type_a_vs_tableaux",
                    f"lam=({lam}),n={n}",
                    g_via_eyd(lam, n, caps) == grothendieck_poly(lam, n, caps),
                    True,
                )


@_family("eyd_type_b_vs_tableaux")
def _eyd_b(b: Bounds) -> Iterator[CheckResult]:
    caps = _caps(b)
    for size in range(min(b.size_cap, 6) + 1):
        for mu in strict_partitions_of(size):
            for n in range(max(mu.length, 1), min(b.enum_n, 4) + 1):
                yield CheckResult(
                    "eyd_type_b_vs_tableaux", f"mu=({mu}),n={n}", gp_via_eyd(mu, n, caps) == gp_poly(mu, n, caps), True
                )


@_family("eyd_counts")
def _eyd_counts(b: Bounds) -> Iterator[CheckResult]:
    if b.max_n >= 3:
        yield CheckResult("eyd_counts", "lam=(2,1),n=3,straight", len(generate_excited(Partition((2, 1)), 3, "straight")), 8)
        yield CheckResult("eyd_counts", "mu=(2,1),n=3,shifted", len(generate_excited(strict_staircase(3), 3, "shifted")), 4)


@_family("three_adic_divisibility")
def _three_adic(b: Bounds) -> Iterator[CheckResult]:
    for k in range(2, min(b.max_k + 1, 5) + 1):
        for n in range(k - 1, b.max_n + 1):
            v, req, holds = three_adic_check(k, n)
            yield CheckResult("three_adic_divisibility", f"k={k},n={n},valuation={v},required={req}", holds, True)


def run_verify(bounds: Bounds | None = None, only: list[str] | None = None, inject_fault: str | None = None) -> VerifyReport:
    """Run the check families in name order.

    ``inject_fault`` names a family whose first case gets its left-hand value
    perturbed; it exists to test that failures are reported.
    """
    bounds = bounds or Bounds()
    if bounds.enum_n > bounds.max_n:
        bounds = Bounds(bounds.max_k, bounds.max_n, bounds.size_cap, bounds.max_n)
    report = VerifyReport()
    for name in sorted(CHECKS):
        if only and name not in only:
            continue
        first = True
        for result in CHECKS[name](bounds):
            if inject_fault == name and first:
                left = result.left
                left = (not left) if isinstance(left, bool) else left + 1
                result = CheckResult(result.name, result.params, left, result.right)
            first = False
            report.checks.append(result)
    return report
