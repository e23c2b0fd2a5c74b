from __future__ import annotations

import re
from fractions import Fraction

import pytest

from staircase.shapes import Partition, StrictPartition
from staircase.tableaux import Entry, SetValuedTableau

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


_TOKEN = re.compile(r"(\d)('?)")


def parse_compact(shape: Partition | StrictPartition, text: str) -> SetValuedTableau:
    """Parse the compact notation ``"1|12'/23"``: rows split by ``/``,
    cells by ``|``, single-digit entries with optional prime."""
    cells = []
    for row in text.split("/"):
        for cell in row.split("|"):
            entries = [Entry(int(d), bool(p)) for d, p in _TOKEN.findall(cell)]
            cells.append(tuple(sorted(entries, key=lambda e: e.key)))
    return SetValuedTableau(shape, tuple(cells))


@pytest.fixture
def compact():
    return parse_compact


def F(x) -> Fraction:
    return Fraction(x)
