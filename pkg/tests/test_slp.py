import random

import pytest
from hypothesis import given, settings, strategies as st

from slpgen import random_slp
from slpstr.slp import (
    BadParams,
    Concat,
    DuplicateRule,
    EmptyInterval,
    ForwardReference,
    MissingRoot,
    MissingRule,
    OutOfRange,
    Slp,
    SlpSyntaxError,
    Terminal,
    TooLong,
    analyze,
    char_at,
    doubling,
    expand,
    fibonacci,
    from_string,
    generate,
    parse_slp,
    serialize,
    substring_slp,
    substrings_slp,
    trim,
    unary_run,
)

PAPER_FILE = b"""# abaababaabaab
1 -> 'b'
2 -> 'a'
3 -> 2 1
4 -> 3 2
5 -> 4 3
6 -> 5 4
7 -> 6 5
"""
PAPER = "abaababaabaab"


def test_parse_paper_example():
    slp = parse_slp(PAPER_FILE)
    assert slp.root == 7 and len(slp) == 7
    assert expand(slp) == PAPER
    assert slp == fibonacci(7)


def test_parse_single_terminal():
    slp = parse_slp("1 -> 'a'")
    assert slp.root == 1 and expand(slp) == "a"


@pytest.mark.parametrize(
    "text, error",
    [
        ("1 -> 'a'\n2 -> 'b'\n3 -> 4 1\n4 -> 1 2\n", ForwardReference),
        ("1 -> 'a'\n1 -> 'b'\n", DuplicateRule),
        ("1 -> 'a'\n3 -> 1 1\n", MissingRule),
        ("1 -> 'a'\nroot 2\n", MissingRoot),
        ("", MissingRoot),
        ("1 => 'a'\n", SlpSyntaxError),
        ("1 -> 'ab'\n", SlpSyntaxError),
        ("1 -> '\\q'\n", SlpSyntaxError),
        ("1 -> 'a'\nroot 1\n2 -> 1 1\n", SlpSyntaxError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_slp(text)


def test_parse_any_order_and_explicit_root():
    slp = parse_slp("3 -> 1 2  # ab\n2 -> 'b'\n1 -> 'a'\nroot 2\n")
    assert slp.root == 2 and expand(slp) == "b"


def test_escapes_round_trip():
    slp = from_string("it's a\\b\n\tc#")
    again = parse_slp(serialize(slp))
    assert again == slp
    assert expand(again) == "it's a\\b\n\tc#"


def test_constructor_validates():
    with pytest.raises(ForwardReference):
        Slp((Terminal("a"), Concat(2, 1)), 2)
    with pytest.raises(MissingRoot):
        Slp((Terminal("a"),), 2)


def test_analyze_paper():
    meta = analyze(fibonacci(7))
    assert meta[6] == (8, 5, "a", "a")
    assert meta[7].length == 13 and meta[7].cut == 8
    assert meta[1] == (1, 0, "b", "b")


def test_expand_doubling():
    assert expand(doubling(4)) == "aaaaaaaa"
    with pytest.raises(TooLong) as info:
        expand(doubling(61), max_len=10**6)
    assert info.value.length == 2**60


def test_substring_examples():
    paper = fibonacci(7)
    assert expand(substring_slp(paper, 3, 5)) == "ab"
    assert expand(substring_slp(paper, 0, 13)) == PAPER
    assert expand(substring_slp(paper, 1, 6)) == "baaba"
    with pytest.raises(EmptyInterval):
        substring_slp(paper, 4, 4)
    with pytest.raises(OutOfRange):
        substring_slp(paper, 3, 14)


def test_substring_of_huge_text_stays_small():
    text = doubling(61)
    sub = substring_slp(text, 2**59 - 7, 2**59 + 12)
    assert sub.length == 19 and len(sub) <= 4 * 61 + 2
    assert expand(sub) == "a" * 19


def test_substrings_share_rules():
    paper = fibonacci(7)
    slp, roots = substrings_slp(paper, [(0, 4), (9, 13), (2, 11)])
    assert [expand(slp, symbol=r) for r in roots] == [PAPER[0:4], PAPER[9:13], PAPER[2:11]]


def test_generators():
    d = doubling(61)
    assert len(d) == 61 and d.length == 2**60
    assert expand(fibonacci(7)) == PAPER
    run = unary_run(13, "0")
    assert expand(run) == "0" * 13 and len(run) <= 2 * 4 + 1
    assert generate("doubling", k=3, char="z") == doubling(3, "z")
    assert expand(generate("lohrey-text", weights=(1, 2), target=3)) == "1000010000100001"
    with pytest.raises(BadParams):
        generate("doubling", k=0)
    with pytest.raises(BadParams):
        generate("nope")


@pytest.mark.parametrize("k", [1, 2, 5, 20])
def test_doubling_ratio(k):
    slp = doubling(k)
    assert len(slp) == k and slp.length == 2 ** (k - 1)


@pytest.mark.parametrize("z", [1, 2, 3, 7, 8, 13, 1000, 12345])
def test_unary_run_rule_count(z):
    slp = unary_run(z)
    assert slp.length == z
    assert len(slp) <= 2 * max(1, (z - 1).bit_length()) + 1


def test_alphabet_order_and_duplicate_terminals():
    slp = Slp((Terminal("x"), Terminal("y"), Terminal("x"), Concat(3, 2)), 4)
    assert slp.alphabet == ("x", "y")
    assert expand(slp) == "xy"


def test_trim_keeps_expansion():
    slp = Slp((Terminal("a"), Terminal("b"), Concat(1, 1), Concat(3, 1)), 4)
    trimmed = trim(slp)
    assert len(trimmed) == 3 and expand(trimmed) == "aaa"
    assert slp.reachable == (1, 3, 4)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_metadata_matches_expansion(seed):
    rng = random.Random(seed)
    slp = random_slp(rng, 30, 3000, rng.randint(1, 5))
    for i in range(1, len(slp) + 1):
        s = expand(slp, symbol=i)
        assert slp.lengths[i] == len(s)
        rule = slp.rule(i)
        if isinstance(rule, Concat):
            assert slp.cuts[i] == len(expand(slp, symbol=rule.left))
        else:
            assert slp.cuts[i] == 0
        assert slp.first_chars[i] == s[0] and slp.last_chars[i] == s[-1]


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_substring_property(seed):
    rng = random.Random(seed)
    slp = random_slp(rng, 30, 3000, rng.randint(1, 5))
    s = expand(slp)
    a = rng.randint(0, len(s) - 1)
    b = rng.randint(a + 1, len(s))
    sub = substring_slp(slp, a, b)
    assert expand(sub) == s[a:b]
    assert len(sub) <= 4 * len(slp) + 2
    assert char_at(slp, a) == s[a]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_serialize_round_trip(seed):
    rng = random.Random(seed)
    slp = random_slp(rng, 20, 500, rng.randint(1, 8))
    assert parse_slp(serialize(slp).encode()) == slp
