"""Periods and covers of an SLP-compressed string.

Border lengths are searched separately in geometrically shrinking
intervals [L_k, 2L_k] with L_k = ceil(t / 2**(k+1)).  Inside one interval
the borders form a single progression: they are found as the intersection
of two progressions obtained by matching the L_k-prefix and the L_k-suffix
of the text against the text itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .fcpm import ApTable, InternalInvariantViolation, build_ap_table, local_pm
from .progressions import (
    EMPTY,
    Prog,
    ProgCell,
    clip,
    intersect,
    reflect,
    shift,
)
from .slp import Slp, substring_slp, substrings_slp


def interval_base(t: int, k: int) -> int:
    """L_k = ceil(t / 2**(k+1))."""
    return -(-t >> (k + 1))


def interval_range(t: int, k: int) -> tuple[int, int]:
    """Border lengths [lo, hi] owned by interval k (boundary values go to the smaller k)."""
    base = interval_base(t, k)
    hi = min(2 * base, t - 1)
    if k > 0:
        hi = min(hi, interval_base(t, k - 1) - 1)
    return base, hi


def interval_indices(t: int) -> Iterator[int]:
    """k = 0, 1, ... up to and including the first k with L_k == 1."""
    k = 0
    while True:
        yield k
        if interval_base(t, k) <= 1:
            return
        k += 1


@dataclass(frozen=True)
class LengthSet:
    """Lengths grouped by interval index, each group one progression.

    ``with_total`` adds the trivial member ``total`` (periods and covers).
    """

    total: int
    intervals: tuple[tuple[int, ProgCell], ...]
    with_total: bool = False

    def progressions(self) -> list[Prog]:
        progs = [cell for _, cell in self.intervals if isinstance(cell, Prog)]
        if self.with_total:
            progs.append(Prog(self.total, 0, 1))
        return sorted(progs)

    def lengths(self) -> list[int]:
        return [x for p in self.progressions() for x in p.values()]

    def __contains__(self, u: object) -> bool:
        return any(u in p for p in self.progressions())

    def __len__(self):
        return sum(p.count for p in self.progressions())

    def shortest(self) -> int | None:
        progs = self.progressions()
        return progs[0].first if progs else None

    def longest(self) -> int | None:
        progs = self.progressions()
        return max(p.last for p in progs) if progs else None


class BorderSet(LengthSet):
    pass


class PeriodSet(LengthSet):
    pass


class CoverSet(LengthSet):
    pass


def _single(progs: list[Prog]) -> ProgCell:
    if len(progs) > 1:
        raise InternalInvariantViolation(f"expected one progression, got {progs}")
    return progs[0] if progs else EMPTY


def borders_in_interval(text: Slp, k: int) -> ProgCell:
    """Border lengths u with L_k <= u <= min(2 L_k, t - 1)."""
    t = text.length
    base = interval_base(t, k)
    hi = min(2 * base, t - 1)
    if base < 1 or base > hi:
        return EMPTY
    # Both affixes live in one pattern SLP so a single AP-table serves both.
    pattern, (pre, suf) = substrings_slp(text, [(0, base), (t - base, t)])
    table = build_ap_table(pattern, text)
    root = text.root
    # Prefix occurrences starting in [t - 2L, t - L]: candidate borders t - p.
    starts = _single(local_pm(table, pre, root, max(t - 2 * base, 0), t))
    candidates = reflect(starts, t)
    # Suffix occurrences ending in [L, 2L]: candidate borders = end position.
    ends = shift(_single(local_pm(table, suf, root, 0, min(2 * base, t))), base)
    return clip(intersect(candidates, ends), base, hi)


def all_borders(text: Slp) -> BorderSet:
    t = text.length
    groups = []
    for k in interval_indices(t):
        lo, hi = interval_range(t, k)
        groups.append((k, clip(borders_in_interval(text, k), lo, hi)))
    return BorderSet(t, tuple(groups))


def all_periods(text: Slp) -> PeriodSet:
    """Periods as t - u over the borders u, plus the trivial period t."""
    borders = all_borders(text)
    t = borders.total
    return PeriodSet(t, tuple((k, reflect(cell, t)) for k, cell in borders.intervals), with_total=True)


def shortest_period(text: Slp) -> int:
    return all_periods(text).shortest()


# ---------------------------------------------------------------------------
# covers


def _covered(progs: list[Prog], width: int, lo: int, hi: int) -> bool:
    """Whether every index in [lo, hi) lies in some [p, p + width) for p in progs."""
    if lo >= hi:
        return True
    spans = []
    for p in progs:
        if p.step <= width:
            spans.append((p.first, p.last + width))
        else:
            # Windows are at most 3 * width long, so at most three elements here.
            spans.extend((x, x + width) for x in p.values())
    spans.sort()
    reach = lo
    for a, b in spans:
        if a > reach:
            break
        reach = max(reach, b)
    return reach >= hi


def _cover_check_table(table: ApTable, i: int) -> bool:
    text = table.text
    c = table.pattern.lengths[i]
    t = text.length
    if c > t:
        return False
    for j in text.reachable:
        tl = text.lengths[j]
        cut = text.cuts[j]
        lo = max(c, cut - c)
        hi = min(tl - c, cut + c)
        if lo >= hi:
            continue
        found = local_pm(table, i, j, max(cut - 2 * c, 0), min(cut + c, tl))
        found += local_pm(table, i, j, max(cut - c, 0), min(cut + 2 * c, tl))
        if not _covered(found, c, lo, hi):
            return False
    root = text.root
    if not _covered(local_pm(table, i, root, 0, min(2 * c, t)), c, 0, c):
        return False
    return _covered(local_pm(table, i, root, max(t - 2 * c, 0), t), c, t - c, t)


def cover_check(cover: Slp, text: Slp) -> bool:
    """Whether every character of ``text`` lies inside an occurrence of ``cover``."""
    if cover.length > text.length:
        return False
    return _cover_check_table(build_ap_table(cover, text), cover.root)


def all_covers(text: Slp, borders: BorderSet | None = None) -> CoverSet:
    """Covers per border interval by binary search over the interval's borders.

    Within one interval the covers are a prefix of the border progression,
    so the largest passing index determines them all.
    """
    borders = all_borders(text) if borders is None else borders
    t = borders.total
    groups = []
    for k, cell in borders.intervals:
        if not isinstance(cell, Prog):
            groups.append((k, EMPTY))
            continue
        good, lo, hi = -1, 0, cell.count - 1
        while lo <= hi:
            mid = (lo + hi) // 2
            u = cell.first + cell.step * mid
            if cover_check(substring_slp(text, 0, u), text):
                good, lo = mid, mid + 1
            else:
                hi = mid - 1
        groups.append((k, clip(cell, cell.first, cell.first + cell.step * good) if good >= 0 else EMPTY))
    return CoverSet(t, tuple(groups), with_total=True)


def shortest_cover(text: Slp) -> int:
    return all_covers(text).shortest()
