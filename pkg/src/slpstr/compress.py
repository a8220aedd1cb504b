"""Simple SLP constructors for plain text: digram replacement and LZ78."""

from __future__ import annotations

from collections import Counter

from .slp import BadParams, Slp, SlpBuilder


def _balanced(builder: SlpBuilder, symbols: list[int]) -> int:
    while len(symbols) > 1:
        nxt = [builder.concat(symbols[k], symbols[k + 1]) for k in range(0, len(symbols) - 1, 2)]
        if len(symbols) % 2:
            nxt.append(symbols[-1])
        symbols = nxt
    return symbols[0]


def _count_pairs(seq: list[int]) -> Counter:
    counts: Counter = Counter()
    k = 0
    while k < len(seq) - 1:
        pair = (seq[k], seq[k + 1])
        counts[pair] += 1
        # "aaa" holds only one non-overlapping "aa"
        if seq[k] == seq[k + 1] and k + 2 < len(seq) and seq[k + 2] == seq[k]:
            k += 2
        else:
            k += 1
    return counts


def pairs(text: str) -> Slp:
    """Replace the most frequent adjacent pair by a new rule until no pair repeats."""
    if not text:
        raise BadParams("cannot compress the empty string")
    builder = SlpBuilder()
    seq = [builder.terminal(c) for c in text]
    while len(seq) > 1:
        counts = _count_pairs(seq)
        (left, right), freq = max(counts.items(), key=lambda kv: (kv[1], -kv[0][0], -kv[0][1]))
        if freq < 2:
            break
        new = builder.concat(left, right)
        out = []
        k = 0
        while k < len(seq):
            if k + 1 < len(seq) and seq[k] == left and seq[k + 1] == right:
                out.append(new)
                k += 2
            else:
                out.append(seq[k])
                k += 1
        seq = out
    return builder.build(_balanced(builder, seq))


def lz78(text: str) -> Slp:
    """LZ78 parse; phrase k = (earlier phrase) + char becomes one rule."""
    if not text:
        raise BadParams("cannot compress the empty string")
    builder = SlpBuilder()
    trie: dict[tuple[int, str], int] = {}
    phrases: list[int] = []
    node, symbol = 0, None  # 0 is the empty phrase
    for c in text:
        if (node, c) in trie:
            node = trie[(node, c)]
            symbol = node
            continue
        new = builder.concat(symbol, builder.terminal(c))
        trie[(node, c)] = new
        phrases.append(new)
        node, symbol = 0, None
    if symbol is not None:
        phrases.append(symbol)
    return builder.build(_balanced(builder, phrases))
