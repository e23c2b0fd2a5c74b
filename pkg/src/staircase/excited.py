"""Excited Young diagrams, broken boxes, and the Type A / Type B weights.

The straight ambient is rows 1..n with columns 1..lam_1+n-1; the shifted
ambient additionally keeps row <= col. An elementary excitation moves a box
(i, j) to (i+1, j+1) when (i+1, j), (i, j+1) and (i+1, j+1) are all vacant.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from staircase.config import Caps, default_caps
from staircase.numerics import valuation
from staircase.polyring import MultiPoly
from staircase.shapes import Box, Partition, StrictPartition, strict_staircase

__all__ = [
    "Ambient",
    "ExcitedDiagram",
    "generate_excited",
    "generate_excited_dfs",
    "broken_boxes",
    "weight_type_a",
    "weight_type_b",
    "g_via_eyd",
    "gp_via_eyd",
    "eyd_specialized_sum",
    "three_adic_check",
    "render_diagram",
]


class Ambient(str, enum.Enum):
    STRAIGHT = "straight"
    SHIFTED = "shifted"


@dataclass(frozen=True)
class ExcitedDiagram:
    """A set of boxes in the straight or shifted ambient region with n rows."""

    boxes: frozenset[Box]
    ambient: Ambient
    n: int
    column_bound: int

    def __post_init__(self) -> None:
        for i, j in self.boxes:
            if not (1 <= i <= self.n and 1 <= j <= self.column_bound):
                raise ValueError(f"box {(i, j)} outside the ambient region")
            if self.ambient is Ambient.SHIFTED and j < i:
                raise ValueError(f"box {(i, j)} below the diagonal in shifted ambient")

    @property
    def key(self) -> tuple[Box, ...]:
        return tuple(sorted(self.boxes))

    def __contains__(self, u: object) -> bool:
        return u in self.boxes

    def __len__(self) -> int:
        return len(self.boxes)

    def __lt__(self, other: "ExcitedDiagram") -> bool:
        return self.key < other.key

    def moves(self) -> list["ExcitedDiagram"]:
        """All diagrams reachable by one elementary excitation."""
        out = []
        for i, j in self.boxes:
            if i + 1 > self.n:
                continue
            target = Box(i + 1, j + 1)
            blockers = [Box(i, j + 1), target]
            if not (self.ambient is Ambient.SHIFTED and i == j):
                blockers.append(Box(i + 1, j))
            if any(b in self.boxes for b in blockers):
                continue
            out.append(ExcitedDiagram(self.boxes - {Box(i, j)} | {target}, self.ambient, self.n, self.column_bound))
        return out


def _initial(shape: Partition | StrictPartition, n: int, ambient: Ambient) -> ExcitedDiagram:
    if ambient is Ambient.SHIFTED:
        if not isinstance(shape, StrictPartition):
            shape = StrictPartition(shape.parts)
    elif isinstance(shape, StrictPartition):
        shape = shape.as_partition()
    if shape.length > n:
        raise ValueError(f"shape ({shape}) has more than n={n} rows")
    first = shape.parts[0] if shape.parts else 0
    return ExcitedDiagram(frozenset(shape.boxes()), ambient, n, max(first + n - 1, 1))


def generate_excited(
    shape: Partition | StrictPartition, n: int, ambient: Ambient | str = Ambient.STRAIGHT
) -> list[ExcitedDiagram]:
    """Breadth-first excitation closure, sorted by box list."""
    ambient = Ambient(ambient)
    start = _initial(shape, n, ambient)
    seen = {start.key: start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for nxt in d.moves():
            if nxt.key not in seen:
                seen[nxt.key] = nxt
                queue.append(nxt)
    return sorted(seen.values())


def generate_excited_dfs(
    shape: Partition | StrictPartition, n: int, ambient: Ambient | str = Ambient.STRAIGHT
) -> list[ExcitedDiagram]:
    """Depth-first closure; used to confirm order independence."""
    ambient = Ambient(ambient)
    start = _initial(shape, n, ambient)
    seen = {start.key: start}
    stack = [start]
    while stack:
        d = stack.pop()
        for nxt in reversed(d.moves()):
            if nxt.key not in seen:
                seen[nxt.key] = nxt
                stack.append(nxt)
    return sorted(seen.values())


def broken_boxes(d: ExcitedDiagram, literal_condition_5: bool = False) -> frozenset[Box]:
    """Vacant boxes (i, j) that contribute a (1 + beta * weight) factor.

    (i, j) qualifies when, for the first k >= 1 with (i+k, j+k) in D, none
    of (i+s, j+s+1) and (i+s+1, j+s) for 0 <= s < k lie in D. The second
    family is dropped on the diagonal of the shifted ambient, where (i+1, i)
    does not exist. ``literal_condition_5`` swaps that family for
    (i+s-1, j+s), which contradicts the worked examples; it is kept only so
    the tests can demonstrate that.
    """
    out = set()
    boxes = d.boxes
    for r, c in boxes:
        for k in range(1, min(r, c)):
            i, j = r - k, c - k
            if (i, j) in boxes:
                break
            if any((i + s, j + s + 1) in boxes for s in range(k)):
                continue
            skip_5 = i == j and (d.ambient is Ambient.SHIFTED or literal_condition_5)
            if not skip_5:
                if literal_condition_5:
                    family = [(i + s - 1, j + s) for s in range(k)]
                else:
                    family = [(i + s + 1, j + s) for s in range(k)]
                if any(b in boxes for b in family):
                    continue
            out.add(Box(i, j))
    return frozenset(out)


# -- weights -------------------------------------------------------------------


def _wt_a(n: int, u: Box) -> MultiPoly:
    return MultiPoly.x(n, u.row)


def _wt_b(n: int, u: Box) -> MultiPoly:
    i, j = u
    if j == i or j > n:
        return MultiPoly.x(n, i)
    xi, xj = MultiPoly.x(n, i), MultiPoly.x(n, j)
    return xi + xj + MultiPoly.beta(n) * xi * xj


def _weight(d: ExcitedDiagram, n: int, local) -> MultiPoly:
    result = MultiPoly.one(n)
    for u in sorted(d.boxes):
        result = result * local(n, u)
    beta = MultiPoly.beta(n)
    for u in sorted(broken_boxes(d)):
        result = result * (1 + beta * local(n, u))
    return result


def weight_type_a(d: ExcitedDiagram, n: int | None = None) -> MultiPoly:
    """prod_{D} x_i * prod_{B(D)} (1 + beta x_i)."""
    if d.ambient is not Ambient.STRAIGHT:
        raise ValueError("Type A weight needs a straight-ambient diagram")
    return _weight(d, d.n if n is None else n, _wt_a)


def weight_type_b(d: ExcitedDiagram, n: int | None = None) -> MultiPoly:
    """prod_{D} wtB * prod_{B(D)} (1 + beta wtB); wtB(i,j) = x_i (+) x_j off the diagonal for j <= n."""
    if d.ambient is not Ambient.SHIFTED:
        raise ValueError("Type B weight needs a shifted-ambient diagram")
    return _weight(d, d.n if n is None else n, _wt_b)


def _check_caps(size: int, n: int, caps: Caps | None) -> None:
    (caps or default_caps()).check(size, n)


def g_via_eyd(lam: Partition, n: int, caps: Caps | None = None) -> MultiPoly:
    _check_caps(lam.size, n, caps)
    total = MultiPoly.zero(n)
    for d in generate_excited(lam, n, Ambient.STRAIGHT):
        total = total + weight_type_a(d, n)
    return total


def gp_via_eyd(mu: StrictPartition, n: int, caps: Caps | None = None) -> MultiPoly:
    _check_caps(mu.size, n, caps)
    total = MultiPoly.zero(n)
    for d in generate_excited(mu, n, Ambient.SHIFTED):
        total = total + weight_type_b(d, n)
    return total


def eyd_specialized_sum(
    shape: Partition | StrictPartition,
    n: int,
    ambient: Ambient | str,
    x: int | Fraction = 1,
    beta: int | Fraction = 1,
) -> Fraction:
    """Sum of weights with every x_i = x and beta fixed, without building polynomials.

    Avoids the polynomial blow-up for larger shapes; no size cap applies.
    """
    ambient = Ambient(ambient)
    x, beta = Fraction(x), Fraction(beta)
    if ambient is Ambient.STRAIGHT:

        def local(u: Box) -> Fraction:
            return x

    else:
        oplus = x + x + beta * x * x

        def local(u: Box) -> Fraction:
            return x if (u.col == u.row or u.col > n) else oplus

    total = Fraction(0)
    for d in generate_excited(shape, n, ambient):
        w = Fraction(1)
        for u in d.boxes:
            w *= local(u)
        for u in broken_boxes(d):
            w *= 1 + beta * local(u)
        total += w
    return total


def three_adic_check(k: int, n: int) -> tuple[int, int, bool]:
    """3-adic valuation of |SSVT_P(sdelta_k, n)| against C(k-1, 2)."""
    if k < 1 or n < max(k - 1, 1):
        raise ValueError(f"need n >= k-1 >= 0, got k={k}, n={n}")
    count = eyd_specialized_sum(strict_staircase(k), n, Ambient.SHIFTED)
    assert count.denominator == 1
    v = valuation(int(count), 3)
    required = (k - 1) * (k - 2) // 2
    return v, required, v >= required


def render_diagram(d: ExcitedDiagram, broken: Iterable[Box] | None = None) -> str:
    """Grid with ``o`` for boxes, ``b`` for broken boxes, ``.`` for vacant cells.

    Cells outside the shifted ambient render as spaces.
    """
    broken = set(broken_boxes(d) if broken is None else broken)
    lines = []
    for i in range(1, d.n + 1):
        row = []
        for j in range(1, d.column_bound + 1):
            if d.ambient is Ambient.SHIFTED and j < i:
                row.append(" ")
            elif (i, j) in d.boxes:
                row.append("o")
            elif (i, j) in broken:
                row.append("b")
            else:
                row.append(".")
        lines.append("".join(row).rstrip())
    return "\n".join(lines)
