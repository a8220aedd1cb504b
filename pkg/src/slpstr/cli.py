"""``slpstr`` command line.

Exit status follows grep: 0 found / success, 1 valid run with a negative
answer, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import compress, fcpm, hardness, periodicity
from .fingerprints import fingerprint_strings
from .progressions import format_cell
from .slp import (
    SlpError,
    doubling,
    expand,
    fibonacci,
    parse_slp,
    serialize,
    substring_slp,
    unary_run,
)

OK, NEGATIVE, ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _load(path: str):
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None
    try:
        return parse_slp(data)
    except SlpError as exc:
        raise CliError(f"{path}: {exc}") from None


def _write_slp(slp, target: str) -> None:
    text = serialize(slp)
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")


def _yes_no(flag: bool) -> int:
    print("yes" if flag else "no")
    return OK if flag else NEGATIVE


def cmd_expand(args) -> int:
    slp = _load(args.file)
    print(expand(slp, args.max_len))
    return OK


def cmd_stats(args) -> int:
    slp = _load(args.file)
    print(f"rules {len(slp)}")
    print(f"length {slp.length}")
    print(f"depth {slp.depth}")
    print(f"cut {slp.cuts[slp.root]}")
    return OK


def cmd_match(args) -> int:
    table = fcpm.build_ap_table(_load(args.pattern), _load(args.text))
    if args.count:
        n = fcpm.count(table)
        print(n)
        return OK if n else NEGATIVE
    if args.first:
        pos = fcpm.first_occurrence(table)
        print("none" if pos is None else pos)
        return NEGATIVE if pos is None else OK
    if args.check is not None:
        return _yes_no(fcpm.check_at(table, args.check))
    if args.table:
        top = table.top_row
        for j in range(1, table.n + 1):
            print(f"{j} {format_cell(top[j])}")
        return OK if fcpm.decide(table) else NEGATIVE
    return _yes_no(fcpm.decide(table))


def cmd_equal(args) -> int:
    return _yes_no(fcpm.equal_slp(_load(args.a), _load(args.b)))


def _print_lengths(result, show_all: bool) -> int:
    if show_all:
        for prog in result.progressions():
            print(format_cell(prog))
    else:
        print(result.shortest())
    return OK


def cmd_period(args) -> int:
    return _print_lengths(periodicity.all_periods(_load(args.file)), args.all)


def cmd_cover(args) -> int:
    return _print_lengths(periodicity.all_covers(_load(args.file)), args.all)


def cmd_fingerprints(args) -> int:
    for fp in fingerprint_strings(_load(args.file)):
        print(fp)
    return OK


def cmd_hamming(args) -> int:
    a, b = _load(args.a), _load(args.b)
    try:
        dist = hardness.hamming_naive(a, b, args.max_len)
    except hardness.LengthMismatch as exc:
        raise CliError(str(exc)) from None
    print(dist)
    if args.threshold is None:
        return OK
    return OK if dist < args.threshold else NEGATIVE


def _weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(w) for w in text.split(",") if w.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}") from None


def cmd_gen(args) -> int:
    if args.kind == "doubling":
        slp = doubling(args.k, args.char)
    elif args.kind == "fibonacci":
        slp = fibonacci(args.k)
    elif args.kind == "unary-run":
        slp = unary_run(args.z, args.char)
    else:
        inst = hardness.SubsetSumInstance(args.weights, args.target).normalized()
        if args.part == "text":
            slp = hardness.lohrey_text(inst)
        else:
            slp = hardness.lohrey_pattern(inst, invert=args.invert)
    _write_slp(slp, args.output)
    return OK


def cmd_substring(args) -> int:
    _write_slp(substring_slp(_load(args.file), args.start, args.end), args.output)
    return OK


def cmd_compress(args) -> int:
    try:
        text = sys.stdin.read() if args.textfile == "-" else Path(args.textfile).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(f"{args.textfile}: {exc}") from None
    method = compress.pairs if args.method == "pairs" else compress.lz78
    _write_slp(method(text), args.output)
    return OK


def _char(text: str) -> str:
    if len(text) != 1:
        raise argparse.ArgumentTypeError("expected a single character")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slpstr", description="String algorithms on straight-line programs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the generated string")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=10**6)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("stats", help="rule count, length, depth, root cut")
    p.add_argument("file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("match", help="fully compressed pattern matching")
    p.add_argument("--pattern", required=True)
    p.add_argument("--text", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--decide", action="store_true")
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--first", action="store_true")
    mode.add_argument("--check", type=int, metavar="POS")
    mode.add_argument("--table", action="store_true", help="print the top row of the AP-table")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("equal", help="do two SLPs generate the same string")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equal)

    for name, func in (("period", cmd_period), ("cover", cmd_cover)):
        p = sub.add_parser(name, help=f"{name}s of the generated string")
        p.add_argument("file")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--all", action="store_true", help="all lengths as first:step:count lines")
        mode.add_argument("--shortest", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("fingerprints", help="character sets of all substrings")
    p.add_argument("file")
    p.set_defaults(func=cmd_fingerprints)

    p = sub.add_parser("hamming", help="Hamming distance by expansion")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--threshold", type=int, metavar="H", help="exit 0 iff distance < H")
    p.set_defaults(func=cmd_hamming)

    p = sub.add_parser("gen", help="generate an SLP")
    kinds = p.add_subparsers(dest="kind", required=True)
    g = kinds.add_parser("doubling")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--char", type=_char, default="a")
    g = kinds.add_parser("fibonacci")
    g.add_argument("--k", type=int, required=True)
    g = kinds.add_parser("unary-run")
    g.add_argument("--z", type=int, required=True)
    g.add_argument("--char", type=_char, default="a")
    g = kinds.add_parser("lohrey")
    g.add_argument("--weights", type=_weights, required=True)
    g.add_argument("--target", type=int, required=True)
    g.add_argument("--part", choices=("pattern", "text"), required=True)
    g.add_argument("--invert", action="store_true", help="bit-inverted pattern (coNP side)")
    for g in kinds.choices.values():
        g.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("substring", help="SLP for a substring")
    p.add_argument("file")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--end", type=int, required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_substring)

    p = sub.add_parser("compress", help="build an SLP from a plain text file")
    p.add_argument("textfile")
    p.add_argument("--method", choices=("pairs", "lz78"), required=True)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_compress)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, SlpError, ValueError) as exc:
        print(f"slpstr: error: {exc}", file=sys.stderr)
        return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
