from itertools import product

import pytest

from slpstr.hardness import (
    LengthMismatch,
    SubsetSumInstance,
    hamming_naive,
    lohrey_pattern,
    lohrey_text,
    reduction_threshold,
    rule_bound,
)
from slpstr.slp import BadParams, TooLong, expand, from_string


def test_text_examples():
    assert expand(lohrey_text(SubsetSumInstance((1, 2), 0))) == "1000010000100001"
    assert expand(lohrey_text(SubsetSumInstance((1,), 0))) == "1001"
    assert expand(lohrey_text(SubsetSumInstance((), 0))) == "1"


def test_pattern_examples():
    assert expand(lohrey_pattern(SubsetSumInstance((1, 2), 3))) == "0001" * 4
    assert expand(lohrey_pattern(SubsetSumInstance((1,), 0))) == "1010"
    assert expand(lohrey_pattern(SubsetSumInstance((1, 2), 3), invert=True)) == "1110" * 4


def test_hamming_examples():
    assert hamming_naive(from_string("abaab"), from_string("ababb")) == 1
    assert hamming_naive(from_string("xyz"), from_string("xyz")) == 0
    yes = SubsetSumInstance((1, 2), 3)
    assert hamming_naive(lohrey_pattern(yes), lohrey_text(yes)) == 6 < reduction_threshold(yes)
    no = SubsetSumInstance((2, 4), 3)
    assert hamming_naive(lohrey_pattern(no), lohrey_text(no)) == 8 == reduction_threshold(no)


def test_hamming_errors():
    with pytest.raises(LengthMismatch):
        hamming_naive(from_string("ab"), from_string("abc"))
    big = SubsetSumInstance(tuple(range(1, 16)), 5)
    with pytest.raises(TooLong):
        hamming_naive(lohrey_pattern(big), lohrey_text(big), max_len=1000)


def small_instances():
    for n in range(0, 4):
        for weights in product(range(1, 6), repeat=n):
            for target in range(0, sum(weights) + 1):
                yield SubsetSumInstance(weights, target)


@pytest.mark.parametrize("invert", [False, True])
def test_reduction_identity(invert):
    for inst in small_instances():
        n, s = len(inst.weights), inst.total
        text, pattern = lohrey_text(inst), lohrey_pattern(inst, invert=invert)
        assert text.length == pattern.length == 2**n * (s + 1)
        sols = inst.count_solutions()
        hd = hamming_naive(pattern, text)
        if invert:
            # inverted blocks differ in s+1 places on solutions, s-1 elsewhere
            assert hd == pattern.length - 2 ** (n + 1) + 2 * sols
            assert (hd < reduction_threshold(inst, invert=True)) == (sols == 0)
        else:
            assert hd == 2 ** (n + 1) - 2 * sols
            assert (hd < reduction_threshold(inst)) == (sols > 0)


def test_blocks_have_one_marker_each():
    for inst in small_instances():
        s = expand(lohrey_text(inst))
        size = inst.total + 1
        blocks = [s[k : k + size] for k in range(0, len(s), size)]
        assert all(b.count("1") == 1 for b in blocks)
        # block x puts its marker at x.w, x counted in binary with the last weight most significant
        n = len(inst.weights)
        for x, block in enumerate(blocks):
            bits = [(x >> k) & 1 for k in range(n)]
            assert block.index("1") == sum(b * w for b, w in zip(bits, inst.weights))


def test_rule_counts_polynomial():
    for weights in [(1,), (3, 5), (7, 11, 13, 2), tuple(range(1, 30)), (10**9, 10**12, 3)]:
        inst = SubsetSumInstance(weights, sum(weights) // 2)
        assert len(lohrey_text(inst)) <= rule_bound(inst)
        assert len(lohrey_pattern(inst)) <= rule_bound(inst)
    for inst in small_instances():
        assert len(lohrey_text(inst)) <= rule_bound(inst)


def test_huge_instance_is_compact():
    inst = SubsetSumInstance((10**9, 10**12, 3, 77, 2**40), 10**12 + 3)
    text = lohrey_text(inst)
    assert text.length == 2**5 * (inst.total + 1)
    assert len(text) < 500


def test_instance_validation_and_normalization():
    with pytest.raises(BadParams):
        SubsetSumInstance((0, 1), 1)
    with pytest.raises(BadParams):
        lohrey_pattern(SubsetSumInstance((1, 2), 4))
    norm = SubsetSumInstance((1, 2), 4).normalized()
    assert norm.target <= norm.total and norm.count_solutions() == 0
    assert SubsetSumInstance((), 3).normalized().count_solutions() == 0
