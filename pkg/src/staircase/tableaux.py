"""Semistandard, set-valued and shifted set-valued tableaux.

Entries live in the ordered alphabet 1' < 1 < 2' < 2 < ... and are handled
internally by an integer key: ``2*v - 1`` for ``v'`` and ``2*v`` for ``v``.
Enumeration is a depth-first fill of the boxes in row-major order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from staircase.config import Caps, default_caps
from staircase.shapes import Box, Partition, StrictPartition, content, hook_length

__all__ = [
    "Entry",
    "SetValuedTableau",
    "count_sst",
    "count_svt_formula",
    "enumerate_sst",
    "enumerate_svt",
    "enumerate_ssvt_p",
    "iter_svt",
    "iter_ssvt_p",
    "weight_vector",
    "is_valid_svt",
    "is_valid_ssvt_p",
    "format_tableau",
]


class Entry(NamedTuple):
    value: int
    primed: bool = False

    @property
    def key(self) -> int:
        return 2 * self.value - 1 if self.primed else 2 * self.value

    @classmethod
    def from_key(cls, key: int) -> "Entry":
        return cls((key + 1) // 2, key % 2 == 1)

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)


@dataclass(frozen=True)
class SetValuedTableau:
    """A filling of a (possibly shifted) diagram by nonempty entry sets.

    ``cells`` holds one key-sorted tuple of entries per box, aligned with
    ``shape.boxes()``.
    """

    shape: Partition | StrictPartition
    cells: tuple[tuple[Entry, ...], ...]

    @property
    def shifted(self) -> bool:
        return isinstance(self.shape, StrictPartition)

    @property
    def boxes(self) -> list[Box]:
        return self.shape.boxes()

    def as_dict(self) -> dict[Box, tuple[Entry, ...]]:
        return dict(zip(self.boxes, self.cells))

    def __getitem__(self, u: tuple[int, int]) -> tuple[Entry, ...]:
        return self.as_dict()[Box(*u)]

    @property
    def total_entries(self) -> int:
        return sum(len(c) for c in self.cells)

    def rows(self) -> list[list[tuple[Entry, ...]]]:
        out: list[list[tuple[Entry, ...]]] = []
        for (i, _), cell in zip(self.boxes, self.cells):
            while len(out) < i:
                out.append([])
            out[i - 1].append(cell)
        return out

    @classmethod
    def from_rows(cls, shape: Partition | StrictPartition, rows: Sequence[Sequence[Sequence[int | str]]]) -> "SetValuedTableau":
        """Build from nested lists; string entries like ``"2'"`` denote primes."""
        cells = []
        for row in rows:
            for cell in row:
                entries = []
                for e in cell:
                    if isinstance(e, str) and e.endswith("'"):
                        entries.append(Entry(int(e[:-1]), True))
                    else:
                        entries.append(Entry(int(e)))
                cells.append(tuple(sorted(entries, key=lambda x: x.key)))
        if len(cells) != shape.size:
            raise ValueError(f"{len(cells)} cells given for shape of size {shape.size}")
        return cls(shape, tuple(cells))

    def __str__(self) -> str:
        return format_tableau(self)


def format_tableau(t: SetValuedTableau) -> str:
    """One line per row, cells joined by `` | ``, entries by spaces."""
    return "\n".join(" | ".join(" ".join(str(e) for e in cell) for cell in row) for row in t.rows())


def weight_vector(t: SetValuedTableau, n: int) -> tuple[int, ...]:
    """Entry counts per value, primes merged into their value."""
    w = [0] * n
    for cell in t.cells:
        for e in cell:
            if not 1 <= e.value <= n:
                raise ValueError(f"entry {e} outside [1, {n}]")
            w[e.value - 1] += 1
    return tuple(w)


# -- counting formulas ---------------------------------------------------------


def count_sst(lam: Partition, n: int) -> int:
    """Hook-content formula."""
    num = math.prod(n + content(u) for u in lam.boxes())
    den = math.prod(hook_length(lam, u) for u in lam.boxes())
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"hook-content quotient {num}/{den} is not integral")
    return q


def count_svt_formula(lam: Partition, n: int) -> int:
    """Nested binomial sum over 0 <= k_i <= i-1 for |SVT(lam, n)|."""
    if lam.length > n:
        return 0
    parts = lam.padded(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    base = [parts[i] - parts[j] + j - i for i, j in pairs]
    den = math.prod(j - i for i, j in pairs)
    total = 0
    for ks in product(*(range(i + 1) for i in range(n))):
        weight = math.prod(math.comb(i, k) for i, k in enumerate(ks))
        total += weight * math.prod(b + ks[i] - ks[j] for b, (i, j) in zip(base, pairs))
    q, r = divmod(total, den)
    if r:
        raise ArithmeticError(f"SVT binomial sum {total}/{den} is not integral")
    return q


# -- enumeration ---------------------------------------------------------------


def _subsets_from(lo: int, hi: int, step: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of range(lo, hi+1, step) in lexicographic order."""
    alphabet = list(range(lo, hi + 1, step))
    out: list[tuple[int, ...]] = []

    def rec(start: int, prefix: tuple[int, ...]) -> None:
        for idx in range(start, len(alphabet)):
            s = prefix + (alphabet[idx],)
            out.append(s)
            rec(idx + 1, s)

    rec(0, ())
    return out


def _dfs(boxes: list[Box], lower_bound, candidates) -> Iterator[tuple[tuple[int, ...], ...]]:
    filled: dict[Box, tuple[int, ...]] = {}
    order: list[tuple[int, ...]] = []

    def rec(idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(boxes):
            yield tuple(order)
            return
        u = boxes[idx]
        for cell in candidates(u, lower_bound(u, filled)):
            filled[u] = cell
            order.append(cell)
            yield from rec(idx + 1)
            order.pop()
            del filled[u]

    yield from rec(0)


def iter_svt(lam: Partition, n: int, singletons: bool = False) -> Iterator[SetValuedTableau]:
    """Lazily yield set-valued (or, with ``singletons``, ordinary) tableaux."""
    boxes = lam.boxes()
    even_n = 2 * n

    def lower_bound(u: Box, filled: dict[Box, tuple[int, ...]]) -> int:
        lo = 2
        left = filled.get(Box(u.row, u.col - 1))
        if left is not None:
            lo = max(lo, left[-1])
        up = filled.get(Box(u.row - 1, u.col))
        if up is not None:
            lo = max(lo, up[-1] + 2)
        return lo

    cache: dict[int, list[tuple[int, ...]]] = {}

    def candidates(u: Box, lo: int) -> list[tuple[int, ...]]:
        if lo not in cache:
            if singletons:
                cache[lo] = [(k,) for k in range(lo, even_n + 1, 2)]
            else:
                cache[lo] = _subsets_from(lo, even_n, 2)
        return cache[lo]

    for keys in _dfs(boxes, lower_bound, candidates):
        yield SetValuedTableau(lam, tuple(tuple(Entry.from_key(k) for k in cell) for cell in keys))


def iter_ssvt_p(mu: StrictPartition, n: int) -> Iterator[SetValuedTableau]:
    boxes = mu.boxes()
    top = 2 * n

    def lower_bound(u: Box, filled: dict[Box, tuple[int, ...]]) -> int:
        lo = 1
        left = filled.get(Box(u.row, u.col - 1))
        if left is not None:
            m = left[-1]
            # a primed letter may not repeat along a row
            lo = max(lo, m + 1 if m % 2 == 1 else m)
        up = filled.get(Box(u.row - 1, u.col))
        if up is not None:
            m = up[-1]
            # an unprimed letter may not repeat down a column
            lo = max(lo, m + 1 if m % 2 == 0 else m)
        if u.row == u.col:
            lo = lo if lo % 2 == 0 else lo + 1
            return -lo
        return lo

    cache: dict[int, list[tuple[int, ...]]] = {}

    def candidates(u: Box, lo: int) -> list[tuple[int, ...]]:
        # negative bound encodes a diagonal box: unprimed letters only
        if lo not in cache:
            cache[lo] = _subsets_from(-lo, top, 2) if lo < 0 else _subsets_from(lo, top, 1)
        return cache[lo]

    for keys in _dfs(boxes, lower_bound, candidates):
        yield SetValuedTableau(mu, tuple(tuple(Entry.from_key(k) for k in cell) for cell in keys))


def enumerate_sst(lam: Partition, n: int, caps: Caps | None = None) -> list[SetValuedTableau]:
    (caps or default_caps()).check(lam.size, n)
    return list(iter_svt(lam, n, singletons=True))


def enumerate_svt(lam: Partition, n: int, caps: Caps | None = None) -> list[SetValuedTableau]:
    (caps or default_caps()).check(lam.size, n)
    return list(iter_svt(lam, n))


def enumerate_ssvt_p(mu: StrictPartition, n: int, caps: Caps | None = None) -> list[SetValuedTableau]:
    (caps or default_caps()).check(mu.size, n)
    return list(iter_ssvt_p(mu, n))


# -- independent validity checks ------------------------------------------------


def _neighbours(t: SetValuedTableau):
    cells = t.as_dict()
    for (i, j), cell in cells.items():
        right = cells.get(Box(i, j + 1))
        below = cells.get(Box(i + 1, j))
        yield (i, j), cell, right, below


def is_valid_svt(t: SetValuedTableau, n: int) -> bool:
    """Check the defining inequalities directly, without the enumerator's bounds."""
    if t.shifted:
        return False
    for _, cell, right, below in _neighbours(t):
        keys = [e.key for e in cell]
        if not keys or any(e.primed or not 1 <= e.value <= n for e in cell):
            return False
        if len(set(keys)) != len(keys):
            return False
        if right is not None and max(keys) > min(e.key for e in right):
            return False
        if below is not None and max(keys) >= min(e.key for e in below):
            return False
    return True


def is_valid_ssvt_p(t: SetValuedTableau, n: int) -> bool:
    if not t.shifted:
        return False
    for (i, j), cell, right, below in _neighbours(t):
        keys = [e.key for e in cell]
        if not keys or len(set(keys)) != len(keys):
            return False
        if any(not 1 <= e.value <= n for e in cell):
            return False
        if i == j and any(e.primed for e in cell):
            return False
        if right is not None and max(keys) > min(e.key for e in right):
            return False
        if below is not None and max(keys) > min(e.key for e in below):
            return False
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for (i, j), cell in t.as_dict().items():
        for e in cell:
            if e.primed:
                by_row.setdefault(i, []).append(e.key)
            else:
                by_col.setdefault(j, []).append(e.key)
    for keys in (*by_row.values(), *by_col.values()):
        if len(keys) != len(set(keys)):
            return False
    return True
