import random

import pytest
from hypothesis import given, settings, strategies as st

from slpgen import random_slp
from slpstr.oracle import naive_covers, naive_periods
from slpstr.periodicity import (
    all_borders,
    all_covers,
    all_periods,
    borders_in_interval,
    cover_check,
    interval_base,
    interval_indices,
    interval_range,
    shortest_cover,
    shortest_period,
)
from slpstr.progressions import EMPTY, Prog
from slpstr.slp import doubling, expand, fibonacci, from_string

PAPER = fibonacci(7)


def test_borders_in_interval_examples():
    # paper text: borders {2, 5} (abaab == abaab)
    assert expand(PAPER)[:5] == expand(PAPER)[-5:]
    assert borders_in_interval(PAPER, 1) == Prog(5, 0, 1)
    assert borders_in_interval(PAPER, 0) is EMPTY
    assert borders_in_interval(doubling(4), 1) == Prog(2, 1, 3)


def test_periods_examples():
    assert all_periods(PAPER).lengths() == [8, 11, 13]
    assert shortest_period(PAPER) == 8
    assert all_periods(doubling(4)).lengths() == list(range(1, 9))
    assert all_periods(from_string("abcd")).lengths() == [4]
    assert all_periods(from_string("a")).lengths() == [1]


def test_periods_of_huge_unary_text():
    periods = all_periods(doubling(41))
    assert periods.shortest() == 1
    assert len(periods) == 2**40


def test_cover_check_examples():
    t = from_string("abaabaa")
    assert cover_check(from_string("abaa"), t)
    assert cover_check(t, t)
    assert not cover_check(from_string("aba"), t)
    assert not cover_check(from_string("abaabaab"), t)


def test_covers_examples():
    assert all_covers(from_string("abaabaa")).lengths() == [4, 7]
    assert all_covers(PAPER).lengths() == [5, 13]
    assert shortest_cover(PAPER) == 5
    assert all_covers(doubling(4)).lengths() == list(range(1, 9))


def test_cover_of_huge_periodic_text():
    # (ab)^(2^40): covers are the even lengths
    from slpstr.slp import Concat, Slp, Terminal

    rules = [Terminal("a"), Terminal("b"), Concat(1, 2)] + [Concat(i, i) for i in range(3, 43)]
    text = Slp(tuple(rules), 43)
    covers = all_covers(text)
    assert covers.shortest() == 2
    assert 4 in covers and 3 not in covers and text.length in covers


@pytest.mark.parametrize("t", [1, 2, 3, 7, 13, 100, 1023, 1024, 1025, 99991, 10**6])
def test_intervals_cover_all_border_lengths(t):
    seen = []
    for k in interval_indices(t):
        lo, hi = interval_range(t, k)
        assert lo == interval_base(t, k)
        seen.extend(range(lo, hi + 1))
    assert sorted(seen) == list(range(1, t))


def test_interval_cover_property_arithmetic():
    # contiguity needs 2 * L_(k+1) >= L_k - 1 for every k
    for t in range(1, 5000):
        for k in interval_indices(t):
            assert 2 * interval_base(t, k + 1) >= interval_base(t, k) - 1


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_periods_and_covers_match_oracle(seed):
    rng = random.Random(seed)
    text = random_slp(rng, 20, 1500, rng.randint(1, 3))
    s = expand(text)
    periods = all_periods(text)
    assert periods.lengths() == naive_periods(s)
    borders = all_borders(text)
    covers = all_covers(text, borders)
    assert covers.lengths() == naive_covers(s)
    border_lengths = set(borders.lengths())
    assert all(c in border_lengths for c in covers.lengths() if c != len(s))
    # within each interval the covers are a prefix of that interval's borders
    for (k, bcell), (_, ccell) in zip(borders.intervals, covers.intervals):
        if isinstance(ccell, Prog):
            assert isinstance(bcell, Prog) and ccell.first == bcell.first and ccell.step in (0, bcell.step)
