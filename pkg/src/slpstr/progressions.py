"""Arithmetic progressions of text positions.

A cell is one of ``UNDEFINED`` (text shorter than pattern), ``EMPTY``, or a
canonical ``Prog(first, step, count)``: ``count == 1`` forces ``step == 0``
and ``count >= 2`` forces ``step >= 1``.  All arithmetic is on Python ints,
so positions may be arbitrarily large.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence, Union


class MalformedList(ValueError):
    pass


class _Marker:
    __slots__ = ("_text",)

    def __init__(self, text: str):
        self._text = text

    def __repr__(self):
        return self._text

    def __bool__(self):
        return False

    def __reduce__(self):
        return (_marker, (self._text,))


UNDEFINED = _Marker("UNDEFINED")
EMPTY = _Marker("EMPTY")


def _marker(text: str) -> _Marker:
    return UNDEFINED if text == "UNDEFINED" else EMPTY


class Prog(NamedTuple):
    first: int
    step: int
    count: int

    @property
    def last(self) -> int:
        return self.first + self.step * (self.count - 1)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or x < self.first or x > self.last:
            return False
        return self.step == 0 or (x - self.first) % self.step == 0

    def values(self) -> range:
        return range(self.first, self.last + 1, self.step or 1)


ProgCell = Union[Prog, _Marker]


def make_prog(first: int, step: int, count: int) -> ProgCell:
    """Canonical cell for {first + k*step : 0 <= k < count}."""
    if count <= 0:
        return EMPTY
    if count == 1:
        return Prog(first, 0, 1)
    if step <= 0:
        raise ValueError("a progression with two or more elements needs a positive step")
    return Prog(first, step, count)


def from_set(elements: Iterable[int]) -> ProgCell:
    """Canonical cell for a finite set; raises if it is not a progression."""
    xs = sorted(set(elements))
    if not xs:
        return EMPTY
    if len(xs) == 1:
        return Prog(xs[0], 0, 1)
    step = xs[1] - xs[0]
    if any(b - a != step for a, b in zip(xs, xs[1:])):
        raise ValueError(f"{xs} is not an arithmetic progression")
    return Prog(xs[0], step, len(xs))


def elements(cell: ProgCell) -> list[int]:
    return list(cell.values()) if isinstance(cell, Prog) else []


def clip(cell: ProgCell, lo: int, hi: int) -> ProgCell:
    """Elements x of cell with lo <= x <= hi."""
    if not isinstance(cell, Prog):
        return cell
    first, step, count = cell.first, cell.step, cell.count
    if step == 0:
        return cell if lo <= first <= hi else EMPTY
    last = first + step * (count - 1)
    if lo > first:
        first += -(-(lo - first) // step) * step
    if hi < last:
        last -= ((last - hi) + step - 1) // step * step
    if first > last:
        return EMPTY
    return make_prog(first, step, (last - first) // step + 1)


def truncate(cell: ProgCell, lo: int, hi: int, occ_len: int) -> ProgCell:
    """Occurrence starts x in cell with [x, x + occ_len] inside [lo, hi]."""
    return clip(cell, lo, hi - occ_len)


def shift(cell: ProgCell, delta: int) -> ProgCell:
    if not isinstance(cell, Prog):
        return cell
    return Prog(cell.first + delta, cell.step, cell.count)


def reflect(cell: ProgCell, c: int) -> ProgCell:
    """{c - x : x in cell}."""
    if not isinstance(cell, Prog):
        return cell
    return Prog(c - cell.last, cell.step, cell.count)


def count_between(cell: ProgCell, lo: int, hi: int) -> int:
    """Number of elements x with lo < x < hi."""
    part = clip(cell, lo + 1, hi - 1)
    return part.count if isinstance(part, Prog) else 0


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def intersect(a: ProgCell, b: ProgCell) -> ProgCell:
    """Set intersection of two progressions in O(log step) arithmetic."""
    if a is UNDEFINED or b is UNDEFINED:
        raise ValueError("cannot intersect an undefined cell")
    if not isinstance(a, Prog) or not isinstance(b, Prog):
        return EMPTY
    if a.step == 0:
        return a if a.first in b else EMPTY
    if b.step == 0:
        return b if b.first in a else EMPTY
    lo = max(a.first, b.first)
    hi = min(a.last, b.last)
    if lo > hi:
        return EMPTY
    # Solve a.first + a.step*k == b.first (mod b.step).
    g, inv, _ = ext_gcd(a.step, b.step)
    diff = b.first - a.first
    if diff % g:
        return EMPTY
    mod = b.step // g
    k = (diff // g) * inv % mod
    lcm = a.step * mod
    x = a.first + a.step * k
    x = lo + (x - lo) % lcm
    if x > hi:
        return EMPTY
    return make_prog(x, lcm, (hi - x) // lcm + 1)


def merge_sorted(progs: Sequence[ProgCell]) -> list[Prog]:
    """Fuse a sorted list of progressions; shared boundary elements are dropped.

    Two neighbours fuse when the gap between them equals the step of each
    (a singleton's step matches any gap).
    """
    out: list[Prog] = []
    cur: Prog | None = None
    for p in progs:
        if not isinstance(p, Prog):
            continue
        if cur is None:
            cur = p
            continue
        first, step, count = p
        last = cur.first + cur.step * (cur.count - 1)
        if first < last:
            raise MalformedList(f"{p} starts before the end of {cur}")
        if first == last:
            if count == 1:
                continue
            first, count = first + step, count - 1
            if count == 1:
                step = 0
        gap = first - last
        if (cur.count == 1 or cur.step == gap) and (count == 1 or step == gap):
            cur = Prog(cur.first, gap, cur.count + count)
        else:
            out.append(cur)
            cur = Prog(first, step, count)
    if cur is not None:
        out.append(cur)
    return out


def format_cell(cell: ProgCell) -> str:
    if cell is UNDEFINED:
        return "?"
    if not isinstance(cell, Prog):
        return "-"
    return f"{cell.first}:{cell.step}:{cell.count}"


def parse_cell(text: str) -> ProgCell:
    text = text.strip()
    if text == "?":
        return UNDEFINED
    if text == "-":
        return EMPTY
    first, step, count = (int(x) for x in text.split(":"))
    return make_prog(first, step, count)
