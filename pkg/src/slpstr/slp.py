"""Straight-line programs: data model, metadata, expansion, substrings, file format.

Rules are indexed from 1.  A rule is either ``Terminal(char)`` or
``Concat(left, right)`` where both children have smaller indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union


class SlpError(ValueError):
    pass


class SlpSyntaxError(SlpError):
    pass


class ForwardReference(SlpError):
    pass


class MissingRoot(SlpError):
    pass


class MissingRule(SlpError):
    pass


class DuplicateRule(SlpError):
    pass


class TooLong(SlpError):
    def __init__(self, length: int, max_len: int):
        super().__init__(f"expansion length {length} exceeds limit {max_len}")
        self.length = length
        self.max_len = max_len


class EmptyInterval(SlpError):
    pass


class OutOfRange(SlpError):
    pass


class BadParams(SlpError):
    pass


class Terminal(NamedTuple):
    char: str


class Concat(NamedTuple):
    left: int
    right: int


Rule = Union[Terminal, Concat]


class SymbolMeta(NamedTuple):
    length: int
    cut: int
    first_char: str
    last_char: str


@dataclass(frozen=True, eq=False)
class Slp:
    """An SLP with 1-based rule indices; ``rules[0]`` is rule 1."""

    rules: tuple[Rule, ...]
    root: int

    def __post_init__(self):
        rules = tuple(self.rules)
        object.__setattr__(self, "rules", rules)
        if not rules:
            raise MissingRoot("an SLP needs at least one rule")
        for i, rule in enumerate(rules, 1):
            if isinstance(rule, Terminal):
                if not isinstance(rule.char, str) or len(rule.char) != 1:
                    raise SlpSyntaxError(f"rule {i}: terminal must be a single character")
            elif isinstance(rule, Concat):
                for child in rule:
                    if child < 1:
                        raise MissingRule(f"rule {i} references nonexistent rule {child}")
                    if child >= i:
                        raise ForwardReference(f"rule {i} references rule {child}")
            else:
                raise SlpSyntaxError(f"rule {i}: unknown rule type {rule!r}")
        if not 1 <= self.root <= len(rules):
            raise MissingRoot(f"root {self.root} is not a rule index")

    def __eq__(self, other):
        if not isinstance(other, Slp):
            return NotImplemented
        return self.root == other.root and self.rules == other.rules

    def __hash__(self):
        return hash((self.rules, self.root))

    def __len__(self):
        return len(self.rules)

    def rule(self, i: int) -> Rule:
        return self.rules[i - 1]

    # Metadata as 1-based arrays; index 0 is padding.

    @cached_property
    def lengths(self) -> list[int]:
        out = [0]
        for rule in self.rules:
            if isinstance(rule, Terminal):
                out.append(1)
            else:
                out.append(out[rule.left] + out[rule.right])
        return out

    @cached_property
    def cuts(self) -> list[int]:
        lengths = self.lengths
        return [0] + [0 if isinstance(r, Terminal) else lengths[r.left] for r in self.rules]

    @cached_property
    def first_chars(self) -> list[str]:
        out = [""]
        for rule in self.rules:
            out.append(rule.char if isinstance(rule, Terminal) else out[rule.left])
        return out

    @cached_property
    def last_chars(self) -> list[str]:
        out = [""]
        for rule in self.rules:
            out.append(rule.char if isinstance(rule, Terminal) else out[rule.right])
        return out

    @property
    def length(self) -> int:
        return self.lengths[self.root]

    @cached_property
    def reachable(self) -> tuple[int, ...]:
        """Indices reachable from the root, ascending."""
        seen = [False] * (len(self.rules) + 1)
        seen[self.root] = True
        for i in range(self.root, 0, -1):
            if seen[i]:
                rule = self.rules[i - 1]
                if isinstance(rule, Concat):
                    seen[rule.left] = seen[rule.right] = True
        return tuple(i for i in range(1, len(self.rules) + 1) if seen[i])

    @cached_property
    def alphabet(self) -> tuple[str, ...]:
        """Terminal characters in first-appearance order."""
        return tuple(dict.fromkeys(r.char for r in self.rules if isinstance(r, Terminal)))

    @cached_property
    def depth(self) -> int:
        depths = [0]
        for rule in self.rules:
            if isinstance(rule, Terminal):
                depths.append(0)
            else:
                depths.append(1 + max(depths[rule.left], depths[rule.right]))
        return depths[self.root]


def analyze(slp: Slp) -> dict[int, SymbolMeta]:
    return {
        i: SymbolMeta(slp.lengths[i], slp.cuts[i], slp.first_chars[i], slp.last_chars[i])
        for i in range(1, len(slp) + 1)
    }


def expand(slp: Slp, max_len: int = 10**6, symbol: int | None = None) -> str:
    """Return the string generated by ``symbol`` (default: the root)."""
    symbol = slp.root if symbol is None else symbol
    length = slp.lengths[symbol]
    if length > max_len:
        raise TooLong(length, max_len)
    memo: dict[int, str] = {}
    for i in range(1, symbol + 1):
        rule = slp.rules[i - 1]
        if isinstance(rule, Terminal):
            memo[i] = rule.char
        elif slp.lengths[i] <= length:
            memo[i] = memo[rule.left] + memo[rule.right]
    return memo[symbol]


def char_at(slp: Slp, pos: int, symbol: int | None = None) -> str:
    """Character at index ``pos`` without expanding."""
    i = slp.root if symbol is None else symbol
    if not 0 <= pos < slp.lengths[i]:
        raise OutOfRange(f"index {pos} outside [0, {slp.lengths[i]})")
    while True:
        rule = slp.rules[i - 1]
        if isinstance(rule, Terminal):
            return rule.char
        cut = slp.cuts[i]
        if pos < cut:
            i = rule.left
        else:
            i, pos = rule.right, pos - cut


class SlpBuilder:
    """Incremental SLP construction with terminal and unary-run sharing."""

    def __init__(self, base: Slp | None = None):
        self.rules: list[Rule] = []
        self.lengths: list[int] = [0]
        self._terminals: dict[str, int] = {}
        self._pairs: dict[tuple[int, int], int] = {}
        self._powers: dict[str, list[int]] = {}
        if base is not None:
            for rule in base.rules:
                self._append(rule)

    def __len__(self):
        return len(self.rules)

    def _append(self, rule: Rule) -> int:
        self.rules.append(rule)
        i = len(self.rules)
        if isinstance(rule, Terminal):
            self.lengths.append(1)
            self._terminals.setdefault(rule.char, i)
        else:
            self.lengths.append(self.lengths[rule.left] + self.lengths[rule.right])
            self._pairs.setdefault((rule.left, rule.right), i)
        return i

    def terminal(self, char: str) -> int:
        if char in self._terminals:
            return self._terminals[char]
        return self._append(Terminal(char))

    def concat(self, left: int | None, right: int | None) -> int | None:
        """Concatenate two symbols; ``None`` stands for the empty string."""
        if left is None:
            return right
        if right is None:
            return left
        key = (left, right)
        if key in self._pairs:
            return self._pairs[key]
        return self._append(Concat(left, right))

    def concat_all(self, symbols: Iterable[int | None]) -> int | None:
        acc = None
        for s in symbols:
            acc = self.concat(acc, s)
        return acc

    def run(self, char: str, count: int) -> int | None:
        """Symbol for ``char * count`` built from shared power-of-two runs."""
        if count < 0:
            raise BadParams("run length must be non-negative")
        if count == 0:
            return None
        powers = self._powers.setdefault(char, [self.terminal(char)])
        while (1 << len(powers)) <= count:
            powers.append(self.concat(powers[-1], powers[-1]))
        acc = None
        for bit in range(len(powers) - 1, -1, -1):
            if count >> bit & 1:
                acc = self.concat(acc, powers[bit])
        return acc

    def build(self, root: int) -> Slp:
        return Slp(tuple(self.rules), root)


def trim(slp: Slp) -> Slp:
    """Drop rules unreachable from the root and renumber the rest."""
    if len(slp.reachable) == len(slp):
        return slp
    out, _ = trim_roots(slp, [slp.root])
    return out


def trim_roots(slp: Slp, roots: Sequence[int]) -> tuple[Slp, list[int]]:
    """Keep only rules reachable from any of ``roots``; the first root becomes the root."""
    seen = [False] * (len(slp) + 1)
    for r in roots:
        seen[r] = True
    for i in range(max(roots), 0, -1):
        if seen[i]:
            rule = slp.rules[i - 1]
            if isinstance(rule, Concat):
                seen[rule.left] = seen[rule.right] = True
    keep = [i for i in range(1, len(slp) + 1) if seen[i]]
    renum = {old: new for new, old in enumerate(keep, 1)}
    rules: list[Rule] = []
    for old in keep:
        rule = slp.rules[old - 1]
        if isinstance(rule, Concat):
            rule = Concat(renum[rule.left], renum[rule.right])
        rules.append(rule)
    new_roots = [renum[r] for r in roots]
    return Slp(tuple(rules), new_roots[0]), new_roots


def _substring_symbol(builder: SlpBuilder, slp: Slp, start: int, end: int) -> int:
    # ``builder`` must start from a copy of slp's rules.
    rules, lengths, cuts = slp.rules, slp.lengths, slp.cuts

    # Descend to the deepest symbol whose expansion contains [start, end).
    i = slp.root
    while True:
        rule = rules[i - 1]
        if isinstance(rule, Terminal):
            return i
        cut = cuts[i]
        if end <= cut:
            i = rule.left
        elif start >= cut:
            i, start, end = rule.right, start - cut, end - cut
        else:
            break
    if start == 0 and end == lengths[i]:
        return i

    def suffix(x: int, k: int) -> int:
        # Suffix of symbol x starting at offset k < length(x).
        chain = []
        while k > 0:
            rule = rules[x - 1]
            cut = cuts[x]
            if k >= cut:
                x, k = rule.right, k - cut
            else:
                chain.append(rule.right)
                x = rule.left
        for right in reversed(chain):
            x = builder.concat(x, right)
        return x

    def prefix(x: int, k: int) -> int:
        # Prefix of symbol x of length 0 < k <= length(x).
        chain = []
        while k < lengths[x]:
            rule = rules[x - 1]
            cut = cuts[x]
            if k <= cut:
                x = rule.left
            else:
                chain.append(rule.left)
                x, k = rule.right, k - cut
        for left in reversed(chain):
            x = builder.concat(left, x)
        return x

    rule = rules[i - 1]
    cut = cuts[i]
    return builder.concat(suffix(rule.left, start), prefix(rule.right, end - cut))


def _check_interval(slp: Slp, start: int, end: int) -> None:
    total = slp.length
    if not 0 <= start <= end <= total:
        raise OutOfRange(f"interval [{start}, {end}) outside [0, {total}]")
    if end - start < 1:
        raise EmptyInterval(f"interval [{start}, {end}) is empty")


def substring_slp(slp: Slp, start: int, end: int) -> Slp:
    """SLP generating ``expand(slp)[start:end]``, built without expansion.

    The result reuses the original rules plus at most two new rules per
    level of descent and one joining rule, trimmed to its reachable part.
    """
    _check_interval(slp, start, end)
    builder = SlpBuilder(slp)
    root = _substring_symbol(builder, slp, start, end)
    return trim(builder.build(root))


def substrings_slp(slp: Slp, intervals: Sequence[tuple[int, int]]) -> tuple[Slp, list[int]]:
    """One SLP holding a symbol for each interval; returns it and those symbols."""
    for start, end in intervals:
        _check_interval(slp, start, end)
    builder = SlpBuilder(slp)
    roots = [_substring_symbol(builder, slp, a, b) for a, b in intervals]
    return trim_roots(builder.build(roots[0]), roots)


# ---------------------------------------------------------------------------
# text format

_TERMINAL_RE = re.compile(r"^(\d+)\s*->\s*'((?:\\.|[^'\\]))'\s*(?:#.*)?$")
_CONCAT_RE = re.compile(r"^(\d+)\s*->\s*(\d+)\s+(\d+)\s*(?:#.*)?$")
_ROOT_RE = re.compile(r"^root\s+(\d+)\s*(?:#.*)?$")
_UNESCAPE = {"\\'": "'", "\\\\": "\\", "\\n": "\n", "\\t": "\t"}
_ESCAPE = {"'": "\\'", "\\": "\\\\", "\n": "\\n", "\t": "\\t"}


def parse_slp(text: bytes | str) -> Slp:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SlpSyntaxError(f"not UTF-8: {exc}") from None
    found: dict[int, Rule] = {}
    root = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if root is not None:
            raise SlpSyntaxError(f"line {lineno}: statement after root line")
        if m := _TERMINAL_RE.match(line):
            idx, char = int(m[1]), m[2]
            if len(char) == 2:
                if char not in _UNESCAPE:
                    raise SlpSyntaxError(f"line {lineno}: unknown escape {char}")
                char = _UNESCAPE[char]
            rule: Rule = Terminal(char)
        elif m := _CONCAT_RE.match(line):
            idx = int(m[1])
            rule = Concat(int(m[2]), int(m[3]))
            if rule.left >= idx or rule.right >= idx:
                raise ForwardReference(f"line {lineno}: rule {idx} references a rule >= {idx}")
        elif m := _ROOT_RE.match(line):
            root = int(m[1])
            continue
        else:
            raise SlpSyntaxError(f"line {lineno}: cannot parse {raw!r}")
        if idx in found:
            raise DuplicateRule(f"line {lineno}: rule {idx} defined twice")
        if idx < 1:
            raise SlpSyntaxError(f"line {lineno}: rule indices start at 1")
        found[idx] = rule
    if not found:
        raise MissingRoot("no rules")
    n = max(found)
    for i in range(1, n + 1):
        if i not in found:
            raise MissingRule(f"rule {i} is missing")
    if root is None:
        root = n
    if root not in found:
        raise MissingRoot(f"root {root} is not defined")
    return Slp(tuple(found[i] for i in range(1, n + 1)), root)


def serialize(slp: Slp) -> str:
    lines = []
    for i, rule in enumerate(slp.rules, 1):
        if isinstance(rule, Terminal):
            lines.append(f"{i} -> '{_ESCAPE.get(rule.char, rule.char)}'")
        else:
            lines.append(f"{i} -> {rule.left} {rule.right}")
    lines.append(f"root {slp.root}")
    return "\n".join(lines) + "\n"


def from_string(s: str) -> Slp:
    """Balanced SLP for a plain string (test and CLI convenience)."""
    if not s:
        raise BadParams("cannot build an SLP for the empty string")
    builder = SlpBuilder()
    level = [builder.terminal(c) for c in s]
    while len(level) > 1:
        nxt = [builder.concat(level[k], level[k + 1]) for k in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return builder.build(level[0])


# ---------------------------------------------------------------------------
# generators

def doubling(k: int, char: str = "a") -> Slp:
    """``char * 2**(k-1)`` with exactly k rules."""
    if k < 1 or len(char) != 1:
        raise BadParams("doubling needs k >= 1 and a single character")
    return Slp((Terminal(char),) + tuple(Concat(i, i) for i in range(1, k)), k)


def fibonacci(k: int) -> Slp:
    """X1 -> b, X2 -> a, Xi -> X(i-1) X(i-2); fibonacci(7) is abaababaabaab."""
    if k < 1:
        raise BadParams("fibonacci needs k >= 1")
    rules: list[Rule] = [Terminal("b"), Terminal("a")][:k]
    rules += [Concat(i - 1, i - 2) for i in range(3, k + 1)]
    return Slp(tuple(rules), k)


def unary_run(z: int, char: str = "a") -> Slp:
    if z < 1 or len(char) != 1:
        raise BadParams("unary-run needs z >= 1 and a single character")
    builder = SlpBuilder()
    return builder.build(builder.run(char, z))


def generate(kind: str, **params) -> Slp:
    if kind == "doubling":
        return doubling(params["k"], params.get("char", "a"))
    if kind == "fibonacci":
        return fibonacci(params["k"])
    if kind == "unary-run":
        return unary_run(params["z"], params.get("char", "a"))
    if kind in ("lohrey-pattern", "lohrey-text"):
        from .hardness import SubsetSumInstance, lohrey_pattern, lohrey_text

        weights: Sequence[int] = params["weights"]
        inst = SubsetSumInstance(tuple(weights), params.get("target", 0))
        if kind == "lohrey-text":
            return lohrey_text(inst)
        return lohrey_pattern(inst, invert=params.get("invert", False))
    raise BadParams(f"unknown generator {kind!r}")
