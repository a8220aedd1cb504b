"""Subset-sum instances encoded as a pair of SLPs whose Hamming distance
reveals the number of solutions.

For weights w_1..w_n with sum s and a target t:

* the text is the concatenation, over x in {0,1}^n counted in binary with
  x_n most significant, of blocks 0^(x.w) 1 0^(s - x.w);
* the pattern is the block 0^t 1 0^(s - t) repeated 2^n times.

Blocks agree exactly when x.w == t and differ in two places otherwise, so
the distance is 2^(n+1) - 2 * (number of solutions).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .slp import BadParams, Slp, SlpBuilder, Terminal, expand

# Rule counts of both constructions stay below
# RULE_BOUND_FACTOR * (n * ceil(log2(s + 1)) + n + 4).
RULE_BOUND_FACTOR = 3


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SubsetSumInstance:
    weights: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if any(w <= 0 for w in self.weights):
            raise BadParams("weights must be positive")
        if self.target < 0:
            raise BadParams("target must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.weights)

    def normalized(self) -> SubsetSumInstance:
        """An instance with target <= weight sum and the same yes/no answer.

        A target above the sum has no solution; it is replaced by doubled
        weights and target 1, which has none either (odd target, even sums).
        """
        if self.target <= self.total:
            return self
        weights = tuple(2 * w for w in self.weights) or (2,)
        return SubsetSumInstance(weights, 1)

    def count_solutions(self) -> int:
        """Brute force over all 2^n choices."""
        return sum(
            1 for x in product((0, 1), repeat=len(self.weights))
            if sum(xi * wi for xi, wi in zip(x, self.weights)) == self.target
        )


def lohrey_text(inst: SubsetSumInstance) -> Slp:
    """SLP for the concatenation of blocks 0^(x.w) 1 0^(s - x.w) over all x."""
    s = inst.total
    builder = SlpBuilder()
    one = builder.terminal("1")
    builder.terminal("0")
    # S_k: all 2^k blocks for the first k weights; U_k: S_k without its final 0^(s - sigma_k).
    full = builder.concat(one, builder.run("0", s))
    bare = one
    sigma = 0
    for w in inst.weights:
        sigma += w
        shifted = builder.concat(builder.run("0", w), bare)
        bare = builder.concat(full, shifted)
        full = builder.concat(bare, builder.run("0", s - sigma))
    return builder.build(full)


def lohrey_pattern(inst: SubsetSumInstance, invert: bool = False) -> Slp:
    """SLP for (0^t 1 0^(s - t))^(2^n); ``invert`` swaps 0 and 1."""
    s, t = inst.total, inst.target
    if t > s:
        raise BadParams("target exceeds the weight sum; normalize the instance first")
    builder = SlpBuilder()
    one = builder.terminal("1")
    builder.terminal("0")
    block = builder.concat_all([builder.run("0", t), one, builder.run("0", s - t)])
    for _ in inst.weights:
        block = builder.concat(block, block)
    slp = builder.build(block)
    if invert:
        swap = {"0": "1", "1": "0"}
        slp = Slp(tuple(Terminal(swap[r.char]) if isinstance(r, Terminal) else r for r in slp.rules), slp.root)
    return slp


def rule_bound(inst: SubsetSumInstance) -> int:
    n, s = len(inst.weights), inst.total
    return RULE_BOUND_FACTOR * (n * (s + 1).bit_length() + n + 4)


def hamming_naive(a: Slp, b: Slp, max_len: int = 10**6) -> int:
    if a.length != b.length:
        raise LengthMismatch(f"lengths differ: {a.length} != {b.length}")
    x, y = expand(a, max_len), expand(b, max_len)
    return sum(c != d for c, d in zip(x, y))


def reduction_threshold(inst: SubsetSumInstance, invert: bool = False) -> int:
    """h such that HD < h iff the answer is yes (or, inverted, no)."""
    n = len(inst.weights)
    if invert:
        return (1 << n) * (inst.total + 1) - (1 << (n + 1)) + 1
    return 1 << (n + 1)
