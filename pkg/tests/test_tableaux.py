from itertools import chain, combinations, product
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from staircase.config import CapExceeded, Caps
from staircase.shapes import Partition, StrictPartition, partitions_of, staircase, strict_partitions_of, strict_staircase
from staircase.tableaux import (
    Entry,
    SetValuedTableau,
    count_sst,
    count_svt_formula,
    enumerate_ssvt_p,
    enumerate_sst,
    enumerate_svt,
    format_tableau,
    is_valid_ssvt_p,
    is_valid_svt,
    iter_ssvt_p,
    iter_svt,
    weight_vector,
)

GOLDEN = Path(__file__).parent / "golden"

# Published listing of SVT((2,1), 3); "/" separates rows, "|" cells.
SVT_21_3 = """
1|1/2 1|1/3 1|2/2 1|2/3 1|3/2 1|3/3 2|2/3 2|3/3
1|12/2 1|13/2 1|23/2 1|12/3 1|13/3 1|23/3 1|1/23 1|2/23
1|3/23 2|23/3 12|2/3 12|3/3 1|12/23 1|13/23 1|23/23 12|23/3
1|123/2 1|123/3 1|123/23
""".split()

# Published listing of SSVT_P((2,1), 3), with one entry corrected: the
# printed 1|2'23/3 repeats an unprimed 3 in column 2; 1|2'23'/3 is meant.
SSVT_P_21_3 = """
1|1/2 1|1/3 1|2/3 2|2/3 1|2'/2 1|2'/3 1|3'/3 2|3'/3
1|12'/2 1|12'/3 1|2'2/3 1|12/3 1|13'/3 1|23'/3 1|1/23 1|2'/23
1|2'3'/3 2|23'/3 12|2/3 12|3'/3 1|12'/23 1|12'3'/3 1|2'23'/3 12|23'/3
1|12'2/3 1|123'/3 1|12'23'/3
""".split()


def _nonempty_subsets(items):
    return list(chain.from_iterable(combinations(items, r) for r in range(1, len(items) + 1)))


def _brute(shape, n, validator, primes):
    """Every filling by nonempty entry sets, filtered by the standalone checker."""
    alphabet = sorted(
        [Entry(v) for v in range(1, n + 1)] + ([Entry(v, True) for v in range(1, n + 1)] if primes else []),
        key=lambda e: e.key,
    )
    subsets = _nonempty_subsets(alphabet)
    found = set()
    for cells in product(subsets, repeat=shape.size):
        t = SetValuedTableau(shape, cells)
        if validator(t, n):
            found.add(t)
    return found


def test_published_svt_listing_matches_enumeration(compact):
    lam = Partition((2, 1))
    listed = {compact(lam, s) for s in SVT_21_3}
    assert len(listed) == 27
    assert set(iter_svt(lam, 3)) == listed
    assert all(is_valid_svt(t, 3) for t in listed)


def test_published_ssvt_p_listing_matches_enumeration(compact):
    mu = StrictPartition((2, 1))
    listed = {compact(mu, s) for s in SSVT_P_21_3}
    assert len(listed) == 27
    assert set(iter_ssvt_p(mu, 3)) == listed
    assert all(is_valid_ssvt_p(t, 3) for t in listed)


@pytest.mark.parametrize("lam, n", [(Partition((2, 1)), 3), (Partition((2,)), 3), (Partition((1, 1, 1)), 4), (Partition((2, 2)), 3)])
def test_svt_enumerator_against_brute_force(lam, n):
    assert set(iter_svt(lam, n)) == _brute(lam, n, is_valid_svt, primes=False)


@pytest.mark.parametrize("mu, n", [(StrictPartition((2, 1)), 3), (StrictPartition((2,)), 3), (StrictPartition((3,)), 2), (StrictPartition((1,)), 4)])
def test_ssvt_p_enumerator_against_brute_force(mu, n):
    assert set(iter_ssvt_p(mu, n)) == _brute(mu, n, is_valid_ssvt_p, primes=True)


@pytest.mark.parametrize(
    "lam, n, expected",
    [(staircase(4), 6, 896), (staircase(5), 6, 8064), (staircase(4), 4, 64), (staircase(3), 4, 20), (Partition((2, 1)), 3, 8)],
)
def test_sst_counts(lam, n, expected):
    assert count_sst(lam, n) == expected


@pytest.mark.parametrize(
    "lam, n, expected",
    [(staircase(4), 6, 134865), (staircase(5), 6, 2479329), (staircase(4), 4, 729), (staircase(3), 4, 159), (Partition((2, 1)), 3, 27)],
)
def test_svt_formula_counts(lam, n, expected):
    assert count_svt_formula(lam, n) == expected


def test_too_many_rows_gives_zero():
    assert count_svt_formula(Partition((1, 1, 1)), 2) == 0
    assert count_sst(Partition((1, 1, 1)), 2) == 0
    assert list(iter_svt(Partition((1, 1, 1)), 2)) == []


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 6).flatmap(lambda m: st.sampled_from(list(partitions_of(m)))), st.integers(1, 4))
def test_enumerations_match_formulas(lam, n):
    svt = list(iter_svt(lam, n))
    assert len(svt) == count_svt_formula(lam, n)
    assert all(is_valid_svt(t, n) for t in svt)
    sst = list(iter_svt(lam, n, singletons=True))
    assert len(sst) == count_sst(lam, n)
    assert all(t.total_entries == lam.size for t in sst)


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 5).flatmap(lambda m: st.sampled_from(list(strict_partitions_of(m)))), st.integers(1, 3))
def test_ssvt_p_outputs_are_valid_and_distinct(mu, n):
    ts = list(iter_ssvt_p(mu, n))
    assert len(set(ts)) == len(ts)
    assert all(is_valid_ssvt_p(t, n) for t in ts)


def test_weight_vector_merges_primes(compact):
    t = compact(StrictPartition((2, 1)), "1|12'3'/3")
    assert weight_vector(t, 3) == (2, 1, 2)
    assert sum(weight_vector(t, 3)) == t.total_entries


def test_printed_typo_is_invalid(compact):
    assert not is_valid_ssvt_p(compact(StrictPartition((2, 1)), "1|2'23/3"), 3)


def test_validators_reject_bad_fillings(compact):
    lam, mu = Partition((2, 1)), StrictPartition((2, 1))
    assert not is_valid_svt(compact(lam, "2|1/3"), 3)  # row decrease
    assert not is_valid_svt(compact(lam, "1|2/1"), 3)  # column not strict
    assert not is_valid_ssvt_p(compact(mu, "1'|2/3"), 3)  # primed diagonal
    assert not is_valid_ssvt_p(compact(mu, "1|2'/2'"), 3)  # repeated primed value in a column


def test_from_rows_and_format():
    t = SetValuedTableau.from_rows(StrictPartition((2, 1)), [[[1], [1, "2'"]], [[2, 3]]])
    assert format_tableau(t) == "1 | 1 2'\n2 3"
    with pytest.raises(ValueError):
        SetValuedTableau.from_rows(Partition((2, 1)), [[[1]]])


def test_dump_golden():
    listing = "\n\n".join(format_tableau(t) for t in enumerate_svt(Partition((2, 1)), 3))
    assert listing + "\n" == (GOLDEN / "svt_21_3.txt").read_text()


def test_caps():
    with pytest.raises(CapExceeded) as info:
        enumerate_svt(staircase(6), 6, Caps(size=10, n=8))
    assert info.value.bound == "size"
    with pytest.raises(CapExceeded):
        enumerate_sst(Partition((1,)), 9, Caps(size=10, n=8))
    assert len(enumerate_ssvt_p(strict_staircase(3), 4)) == 159
