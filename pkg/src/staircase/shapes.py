"""Partitions, strict partitions, boxes, hooks and contents.

Boxes are 1-indexed ``(row, col)`` pairs in English convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Box",
    "Partition",
    "StrictPartition",
    "staircase",
    "strict_staircase",
    "hook_length",
    "hook_product",
    "content",
    "skew_boxes",
    "staircase_content_product",
    "parse_shape",
    "partitions_of",
    "partitions_up_to",
    "strict_partitions_of",
]


class Box(NamedTuple):
    row: int
    col: int


def content(u: tuple[int, int]) -> int:
    """Column minus row."""
    return u[1] - u[0]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are stripped."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = tuple(int(p) for p in parts)
        while cleaned and cleaned[-1] == 0:
            cleaned = cleaned[:-1]
        if any(p <= 0 for p in cleaned):
            raise ValueError(f"partition parts must be positive: {cleaned}")
        if any(a < b for a, b in zip(cleaned, cleaned[1:])):
            raise ValueError(f"partition must be weakly decreasing: {cleaned}")
        object.__setattr__(self, "parts", cleaned)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-indexed part, zero past the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self.parts):
            raise ValueError(f"cannot pad {self.parts} to length {n}")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))

    def boxes(self) -> list[Box]:
        """Row-major boxes of the Young diagram."""
        return [Box(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def __contains__(self, u: object) -> bool:
        if not isinstance(u, tuple) or len(u) != 2:
            return False
        i, j = u
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= p for i, p in enumerate(other.parts, 1))


@dataclass(frozen=True)
class StrictPartition:
    """Strictly decreasing positive parts; drawn as a shifted diagram."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = tuple(int(p) for p in parts)
        while cleaned and cleaned[-1] == 0:
            cleaned = cleaned[:-1]
        if any(p <= 0 for p in cleaned):
            raise ValueError(f"strict partition parts must be positive: {cleaned}")
        if any(a <= b for a, b in zip(cleaned, cleaned[1:])):
            raise ValueError(f"strict partition must be strictly decreasing: {cleaned}")
        object.__setattr__(self, "parts", cleaned)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def boxes(self) -> list[Box]:
        """Row-major boxes of the shifted diagram: row i spans columns i..mu_i+i-1."""
        return [Box(i, j) for i, p in enumerate(self.parts, 1) for j in range(i, p + i)]

    def __contains__(self, u: object) -> bool:
        if not isinstance(u, tuple) or len(u) != 2:
            return False
        i, j = u
        return 1 <= i <= len(self.parts) and i <= j <= self.parts[i - 1] + i - 1

    def as_partition(self) -> Partition:
        return Partition(self.parts)


def staircase(k: int) -> Partition:
    """delta_k = (k-1, k-2, ..., 1); k = 1 is the empty partition."""
    if k < 1:
        raise ValueError(f"staircase index must be >= 1, got {k}")
    return Partition(range(k - 1, 0, -1))


def strict_staircase(k: int) -> StrictPartition:
    if k < 1:
        raise ValueError(f"staircase index must be >= 1, got {k}")
    return StrictPartition(range(k - 1, 0, -1))


def hook_length(lam: Partition, u: tuple[int, int]) -> int:
    if u not in lam:
        raise ValueError(f"box {tuple(u)} is not in the diagram of ({lam})")
    i, j = u
    return (lam.part(i) - j) + (lam.conjugate().part(j) - i) + 1


def hook_product(lam: Partition) -> int:
    conj = lam.conjugate()
    return math.prod((lam.part(i) - j) + (conj.part(j) - i) + 1 for i, j in lam.boxes())


def skew_boxes(outer: Partition, inner: Partition) -> list[Box]:
    if not outer.contains(inner):
        raise ValueError(f"({inner}) is not contained in ({outer})")
    return [u for u in outer.boxes() if u not in inner]


def staircase_content_product(k: int, n: int) -> int:
    """prod over delta_{k+1}/delta_k of (n + content); any n >= 1 is accepted."""
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    return math.prod(n + k + 1 - 2 * i for i in range(1, k + 1))


def parse_shape(text: str, strict: bool = False) -> Partition | StrictPartition:
    """Parse ``"3,2,1"``, ``""``, ``"delta:4"`` or ``"sdelta:4"``.

    ``sdelta`` always yields a strict partition; plain lists yield a strict
    partition only when ``strict`` is set.
    """
    text = text.strip()
    if text.startswith("sdelta:"):
        return strict_staircase(int(text.split(":", 1)[1]))
    if text.startswith("delta:"):
        k = int(text.split(":", 1)[1])
        return strict_staircase(k) if strict else staircase(k)
    parts = [int(t) for t in text.split(",") if t.strip()] if text else []
    return StrictPartition(parts) if strict else Partition(parts)


def partitions_of(m: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of m in reverse lexicographic order."""
    if max_part is None:
        max_part = m

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(m, max_part):
        yield Partition(parts)


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    for m in range(max_size + 1):
        yield from partitions_of(m)


def strict_partitions_of(m: int) -> Iterator[StrictPartition]:
    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first - 1):
                yield (first,) + tail

    for parts in rec(m, m):
        yield StrictPartition(parts)
