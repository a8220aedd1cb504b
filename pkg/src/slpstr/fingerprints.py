"""Fingerprint table: the distinct character sets of all substrings.

A fingerprint is an int bitset over ``slp.alphabet`` (bit k = k-th character
in first-appearance order).  For every symbol we keep the characters in
order of first occurrence (giving all prefix fingerprints) and in order of
last occurrence (giving all suffix fingerprints); each list has at most
|alphabet| entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from operator import or_

from .slp import Slp, Terminal


@dataclass(frozen=True)
class FpChains:
    """Chains for one symbol: (boundary length, fingerprint) pairs.

    ``prefix[k]`` is the fingerprint of every prefix whose length is at least
    the boundary and below the next one; ``suffix`` likewise for suffixes.
    """

    prefix: tuple[tuple[int, int], ...]
    suffix: tuple[tuple[int, int], ...]


def _chains(firsts: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    # (offset, bit) in order -> (boundary length, cumulative fingerprint)
    return tuple(zip((off + 1 for off, _ in firsts), accumulate((bit for _, bit in firsts), or_)))


def symbol_chains(slp: Slp) -> dict[int, FpChains]:
    """Prefix and suffix fingerprint chains of every reachable symbol."""
    index = {c: k for k, c in enumerate(slp.alphabet)}
    lengths = slp.lengths
    # first[j]: (offset of first occurrence, bit) sorted by offset; last[j]: by distance from the end.
    first: dict[int, list[tuple[int, int]]] = {}
    last: dict[int, list[tuple[int, int]]] = {}
    mask: dict[int, int] = {}
    out = {}
    for j in slp.reachable:
        rule = slp.rules[j - 1]
        if isinstance(rule, Terminal):
            bit = 1 << index[rule.char]
            first[j] = last[j] = [(0, bit)]
            mask[j] = bit
        else:
            left, right = rule
            shift_r = lengths[left]
            first[j] = first[left] + [(shift_r + off, bit) for off, bit in first[right] if not mask[left] & bit]
            shift_l = lengths[right]
            last[j] = last[right] + [(shift_l + off, bit) for off, bit in last[left] if not mask[right] & bit]
            mask[j] = mask[left] | mask[right]
        out[j] = FpChains(_chains(first[j]), _chains(last[j]))
    return out


def fingerprint_table(slp: Slp) -> set[int]:
    chains = symbol_chains(slp)
    table: set[int] = set()
    for j in slp.reachable:
        rule = slp.rules[j - 1]
        if isinstance(rule, Terminal):
            table.add(chains[j].prefix[0][1])
            continue
        # Substrings crossing the cut: nonempty suffix of left + nonempty prefix of right.
        suffixes = [fp for _, fp in chains[rule.left].suffix]
        prefixes = [fp for _, fp in chains[rule.right].prefix]
        table.update(s | p for s in suffixes for p in prefixes)
    return table


def to_chars(fp: int, alphabet: tuple[str, ...]) -> frozenset[str]:
    return frozenset(c for k, c in enumerate(alphabet) if fp >> k & 1)


def fingerprint_strings(slp: Slp) -> list[str]:
    """Fingerprints as sorted character strings, in lexicographic order."""
    alphabet = slp.alphabet
    return sorted("".join(sorted(to_chars(fp, alphabet))) for fp in fingerprint_table(slp))
