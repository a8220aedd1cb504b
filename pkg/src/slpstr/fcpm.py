"""Fully compressed pattern matching with the AP-table.

``cells[i][j]`` holds the occurrences of pattern symbol ``P_i`` in text
symbol ``T_j`` that touch the cut of ``T_j``; by periodicity these always
form one arithmetic progression.  Cells are filled column by column, each
general cell from at most five Local PM calls on already computed cells.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .progressions import (
    EMPTY,
    UNDEFINED,
    Prog,
    ProgCell,
    clip,
    count_between,
    intersect,
    merge_sorted,
    shift,
)
from .slp import Slp, SymbolMeta, Terminal, analyze


class InternalInvariantViolation(AssertionError):
    """A structural bound that the algorithm guarantees did not hold."""


class IntervalTooWide(ValueError):
    pass


@dataclass
class PmStats:
    """Instrumentation counters, filled in while a table is built and used."""

    cells: int = 0
    general_cells: int = 0
    local_pm_calls: int = 0
    crawl_calls: int = 0
    max_crawl_calls_over_j: float = 0.0
    max_local_pm_progs: int = 0
    max_cell_pieces_after_merge: int = 0
    local_pm_per_cell: Counter = field(default_factory=Counter)
    # split of each general cell's calls: (larger part, smaller part)
    local_pm_split: Counter = field(default_factory=Counter)


class ApTable:
    def __init__(self, pattern: Slp, text: Slp):
        self.pattern = pattern
        self.text = text
        self.m = len(pattern)
        self.n = len(text)
        self.stats = PmStats()
        # 1-based in both axes; row 0 and column 0 are padding.
        self.cells: list[list[ProgCell]] = [[UNDEFINED] * (self.n + 1) for _ in range(self.m + 1)]

    @property
    def pattern_meta(self) -> dict[int, SymbolMeta]:
        return analyze(self.pattern)

    @property
    def text_meta(self) -> dict[int, SymbolMeta]:
        return analyze(self.text)

    def cell(self, i: int, j: int) -> ProgCell:
        return self.cells[i][j]

    @property
    def top_row(self) -> list[ProgCell]:
        """Cells of the pattern root against every text symbol, 1-based."""
        return self.cells[self.pattern.root]


def build_ap_table(pattern: Slp, text: Slp) -> ApTable:
    table = ApTable(pattern, text)
    plen = pattern.lengths
    tlen = text.lengths
    for j in range(1, table.n + 1):
        for i in range(1, table.m + 1):
            table.stats.cells += 1
            if plen[i] > tlen[j]:
                table.cells[i][j] = UNDEFINED
            else:
                table.cells[i][j] = compute_cell(table, i, j)
    return table


def _base_cell(table: ApTable, i: int, j: int) -> ProgCell:
    # Pattern symbol is a single character.
    text = table.text
    char = table.pattern.rules[i - 1].char
    trule = text.rules[j - 1]
    if isinstance(trule, Terminal):
        return Prog(0, 0, 1) if trule.char == char else EMPTY
    cut = text.cuts[j]
    left = text.last_chars[trule.left] == char
    right = text.first_chars[trule.right] == char
    if left and right:
        return Prog(cut - 1, 1, 2)
    if left:
        return Prog(cut - 1, 0, 1)
    if right:
        return Prog(cut, 0, 1)
    return EMPTY


def compute_cell(table: ApTable, i: int, j: int) -> ProgCell:
    """Occurrences of P_i in T_j touching the cut of T_j.

    Requires every cell of columns < j and the cells of column j for
    pattern symbols below i.
    """
    pattern, text = table.pattern, table.text
    plen = pattern.lengths
    total = plen[i]
    tl = text.lengths[j]
    if total > tl:
        return UNDEFINED
    prule = pattern.rules[i - 1]
    if isinstance(prule, Terminal):
        return _base_cell(table, i, j)

    stats = table.stats
    stats.general_cells += 1
    calls_before = stats.local_pm_calls
    r, s = prule
    a, b = plen[r], plen[s]
    cut = text.cuts[j]
    pieces: list[ProgCell] = []

    if a >= b:
        # Starts of the larger left part, then verify the right part at each ending.
        found_r = local_pm(table, r, j, max(cut - total, 0), min(cut + a, tl))
        larger_calls = stats.local_pm_calls - calls_before
        for starts in found_r:
            ends = shift(starts, a)
            last = ends.last
            continental = clip(ends, ends.first, last - b)
            seaside = clip(ends, last - b + 1, last)
            if isinstance(continental, Prog):
                e0 = continental.first
                if local_pm(table, s, j, e0, e0 + b):
                    pieces.append(shift(continental, -a))
            if isinstance(seaside, Prog):
                found = local_pm(table, s, j, max(last - b, 0), min(last + b, tl))
                for prog in found:
                    pieces.append(shift(intersect(prog, seaside), -a))
    else:
        # Mirror image: starts of the larger right part, verify the left part before each.
        found_s = local_pm(table, s, j, max(cut - b, 0), min(cut + a + b, tl))
        larger_calls = stats.local_pm_calls - calls_before
        for starts in found_s:
            s0 = starts.first
            seaside = clip(starts, s0, s0 + a - 1)
            continental = clip(starts, s0 + a, starts.last)
            if isinstance(seaside, Prog):
                found = local_pm(table, r, j, max(s0 - a, 0), min(s0 + a, tl))
                for prog in found:
                    pieces.append(shift(intersect(shift(prog, a), seaside), -a))
            if isinstance(continental, Prog):
                c0 = continental.first
                if local_pm(table, r, j, c0 - a, c0):
                    pieces.append(shift(continental, -a))

    calls = stats.local_pm_calls - calls_before
    stats.local_pm_per_cell[calls] += 1
    stats.local_pm_split[larger_calls, calls - larger_calls] += 1
    merged = merge_sorted(pieces)
    stats.max_cell_pieces_after_merge = max(stats.max_cell_pieces_after_merge, len(merged))
    if len(merged) > 1:
        raise InternalInvariantViolation(
            f"cell ({i}, {j}) merged into {len(merged)} progressions: {merged}"
        )
    return merged[0] if merged else EMPTY


def local_pm(table: ApTable, i: int, j: int, lo: int, hi: int) -> list[Prog]:
    """Occurrences of P_i in T_j lying inside [lo, hi], as at most two progressions.

    The window may be at most three times the pattern length.  Only cells of
    row i in columns <= j are read.
    """
    plen = table.pattern.lengths[i]
    if hi - lo > 3 * plen:
        raise IntervalTooWide(f"window [{lo}, {hi}] wider than 3*{plen}")
    if not 0 <= lo <= hi <= table.text.lengths[j]:
        raise ValueError(f"window [{lo}, {hi}] outside text symbol {j}")
    stats = table.stats
    stats.local_pm_calls += 1
    if hi - lo < plen:
        return []
    out: list[ProgCell] = []
    calls = _crawl(table.cells[i], table.text, plen, j, lo, hi, 0, out)
    stats.crawl_calls += calls
    if calls > 3 * j:
        raise InternalInvariantViolation(f"crawling made {calls} calls for text symbol {j}")
    stats.max_crawl_calls_over_j = max(stats.max_crawl_calls_over_j, calls / j)
    progs = merge_sorted(out) if len(out) > 1 else out
    if len(progs) > 2:
        raise InternalInvariantViolation(f"Local PM returned {len(progs)} progressions: {progs}")
    stats.max_local_pm_progs = max(stats.max_local_pm_progs, len(progs))
    return progs


def _crawl(row, text: Slp, plen: int, j: int, lo: int, hi: int, offset: int, out: list) -> int:
    # Appends, in sorted order, occurrences inside [lo, hi] of T_j (shifted by
    # offset): left part first, then the cut progression, then the right part.
    # The cut cell is clipped to starts in [lo, hi - plen] inline (hot path).
    calls = 1
    rule = text.rules[j - 1]
    cell = row[j]
    piece = None
    if cell.__class__ is Prog:
        first, step, count = cell
        top = hi - plen
        if step == 0:
            if lo <= first <= top:
                piece = Prog(first + offset, 0, 1)
        else:
            last = first + step * (count - 1)
            if lo > first:
                first += (lo - first + step - 1) // step * step
            if top < last:
                last -= (last - top + step - 1) // step * step
            if first == last:
                piece = Prog(first + offset, 0, 1)
            elif first < last:
                piece = Prog(first + offset, step, (last - first) // step + 1)
    if rule.__class__ is Terminal:
        if piece is not None:
            out.append(piece)
        return calls
    cut = text.cuts[j]
    left_hi = hi if hi < cut else cut
    if left_hi - lo >= plen:
        calls += _crawl(row, text, plen, rule[0], lo, left_hi, offset, out)
    if piece is not None:
        out.append(piece)
    right_lo = lo if lo > cut else cut
    if hi - right_lo >= plen:
        calls += _crawl(row, text, plen, rule[1], right_lo - cut, hi - cut, offset + cut, out)
    return calls


# ---------------------------------------------------------------------------
# queries on a finished table


def decide(table: ApTable) -> bool:
    top = table.top_row
    return any(isinstance(top[j], Prog) for j in table.text.reachable)


def count(table: ApTable) -> int:
    text = table.text
    top = table.top_row
    plen = table.pattern.length
    counts = [0] * (table.n + 1)
    for j in text.reachable:
        cell = top[j]
        if cell is UNDEFINED:
            continue
        rule = text.rules[j - 1]
        if isinstance(rule, Terminal):
            counts[j] = cell.count if isinstance(cell, Prog) else 0
        else:
            cut = text.cuts[j]
            # Starts at cut - |P| and at cut belong to the children.
            counts[j] = counts[rule.left] + counts[rule.right] + count_between(cell, cut - plen, cut)
    return counts[text.root]


def first_occurrence(table: ApTable) -> int | None:
    text = table.text
    top = table.top_row
    firsts: list[int | None] = [None] * (table.n + 1)
    for j in text.reachable:
        cell = top[j]
        if cell is UNDEFINED:
            continue
        best = cell.first if isinstance(cell, Prog) else None
        rule = text.rules[j - 1]
        if not isinstance(rule, Terminal):
            left = firsts[rule.left]
            right = firsts[rule.right]
            if left is not None:
                best = left if best is None else min(best, left)
            if right is not None:
                right += text.cuts[j]
                best = right if best is None else min(best, right)
        firsts[j] = best
    return firsts[text.root]


def check_at(table: ApTable, p: int) -> bool:
    """Whether the pattern occurs at position p of the text."""
    text = table.text
    top = table.top_row
    plen = table.pattern.length
    j = text.root
    if p < 0 or p + plen > text.lengths[j]:
        return False
    while True:
        cut = text.cuts[j]
        if p <= cut <= p + plen:
            cell = top[j]
            if cell is UNDEFINED:
                raise InternalInvariantViolation(f"undefined cell on the descent path at {j}")
            return isinstance(cell, Prog) and p in cell
        rule = text.rules[j - 1]
        if p + plen < cut:
            j = rule.left
        else:
            j, p = rule.right, p - cut


def equal_slp(a: Slp, b: Slp) -> bool:
    if a.length != b.length:
        return False
    return decide(build_ap_table(a, b))


def occurrences(table: ApTable, lo: int = 0, hi: int | None = None) -> list[Prog]:
    """Occurrences of the pattern root in [lo, hi] of the text root (window <= 3|P|)."""
    hi = table.text.length if hi is None else hi
    return local_pm(table, table.pattern.root, table.text.root, lo, hi)

