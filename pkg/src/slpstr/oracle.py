"""Definitional brute-force answers on plain strings, for differential testing."""

from __future__ import annotations

ORACLE_CAP = 10**6


class OracleCapExceeded(ValueError):
    pass


def _check(*strings: str, cap: int = ORACLE_CAP) -> None:
    for s in strings:
        if len(s) > cap:
            raise OracleCapExceeded(f"string of length {len(s)} exceeds oracle cap {cap}")


def naive_occurrences(p: str, t: str) -> list[int]:
    if not p:
        raise ValueError("pattern must be nonempty")
    _check(p, t)
    return [i for i in range(len(t) - len(p) + 1) if t[i : i + len(p)] == p]


def naive_periods(t: str) -> list[int]:
    """Lengths q such that t is a prefix of (t[:q])**k, i.e. t[i] == t[i+q] for all i."""
    _check(t)
    return [q for q in range(1, len(t) + 1) if t[q:] == t[: len(t) - q]]


def naive_covers(t: str) -> list[int]:
    """Lengths c such that every character of t lies in an occurrence of t[:c].

    Only border lengths can qualify (the first and last characters need an
    occurrence at each end), so candidates come from naive_periods.
    """
    _check(t)
    n = len(t)
    out = []
    borders = [n - q for q in naive_periods(t) if q < n]
    for c in sorted(borders) + [n]:
        starts = naive_occurrences(t[:c], t)
        if starts[0] == 0 and starts[-1] == n - c and all(b - a <= c for a, b in zip(starts, starts[1:])):
            out.append(c)
    return out


def naive_fingerprints(t: str) -> set[frozenset[str]]:
    """Character sets of all nonempty substrings.

    Substrings sharing a start only change their character set where a new
    character first appears, so each start contributes at most |alphabet| sets.
    """
    _check(t)
    alphabet = sorted(set(t))
    out: set[frozenset[str]] = set()
    for i in range(len(t)):
        firsts = sorted((k, c) for c in alphabet if (k := t.find(c, i)) >= 0)
        acc: set[str] = set()
        for _, c in firsts:
            acc.add(c)
            out.add(frozenset(acc))
    return out


def naive_fingerprints_quadratic(t: str) -> set[frozenset[str]]:
    """Same as naive_fingerprints, by visiting every span; keep t short."""
    _check(t)
    out = set()
    for i in range(len(t)):
        for j in range(i + 1, len(t) + 1):
            out.add(frozenset(t[i:j]))
    return out


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ValueError("strings differ in length")
    return sum(x != y for x, y in zip(a, b))
