"""Command-line front end.

    seqcong check --class seq "20,17,15,9,5"
    seqcong map --direction seq-to-square "26,19,13,13,5"
    seqcong enumerate --class seq 12
    seqcong count --class square 0..=20
    seqcong render "26,19,13,13,5"
    seqcong estimate 100 1000 10000

Literals come from the positional arguments or, if none are given, one per
line on stdin. Exit codes: 0 ok, 1 usage error, 2 domain/validation error,
3 size cap exceeded (override with ``--unsafe-large``).
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from . import bijection, congruence, counting, enumeration
from .asymptotics import compare_estimate
from .bijection import PowerPartition, SquarePartition
from .partition_core import Partition, PartitionError, conjugate, format_partition, parse_partition

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CAP = 0, 1, 2, 3

BLOCK_FILL = "#%@*+=&o"


@dataclass(frozen=True)
class Limits:
    enumerate_max_n: int = 80
    count_max_n: int = 100_000
    # brute-force counting walks every partition of n
    oracle_max_n: int = 60
    # filter routes for the largest-part / weighted-frequency classes scan sizes up to n**2
    square_oracle_max_n: int = 12


class UsageError(Exception):
    pass


class CapExceeded(Exception):
    pass


# -- rendering -------------------------------------------------------------------


def square_blocks(lam: Partition) -> list[int]:
    """Side lengths of the square blocks of ``lam``, left to right."""
    mu = bijection.seq_to_square(lam)
    sides = []
    for base, e in reversed(mu.exps):
        sides.extend([base] * e)
    return sides


def render_square_decomposition(lam: Partition, fill: str = BLOCK_FILL) -> str:
    """Young diagram of a sequentially congruent partition drawn as a row of
    top-aligned squares of weakly decreasing size, one fill character per
    block (cycling through ``fill``).

    >>> print(render_square_decomposition(Partition((3, 2))))
    ##%
    ##
    """
    sides = square_blocks(lam)
    if len(fill) < 2 and len(sides) > 1:
        raise ValueError("need at least two fill characters to separate blocks")
    rows = []
    for depth in range(len(lam)):
        rows.append(
            "".join(fill[idx % len(fill)] * side for idx, side in enumerate(sides) if side > depth)
        )
    return "\n".join(rows)


# -- argument helpers ----------------------------------------------------------------


def parse_range(text: str) -> range:
    """``7``, ``a..b`` (b excluded) or ``a..=b`` (b included)."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.(=?)\s*(\d+)\s*)?", text)
    if m is None:
        raise UsageError(f"bad range {text!r}; expected N, A..B or A..=B")
    lo = int(m.group(1))
    if m.group(3) is None:
        return range(lo, lo + 1)
    hi = int(m.group(3)) + (1 if m.group(2) else 0)
    return range(lo, hi)


def _literals(args: argparse.Namespace, stdin: TextIO) -> Iterator[str]:
    if args.literals:
        yield from args.literals
    else:
        for line in stdin:
            if line.strip():
                yield line.rstrip("\n")


def _record(**fields) -> str:
    return "\t".join(f"{k}={v}" for k, v in fields.items())


def _fmt(lam: Partition, style: str) -> str:
    return format_partition(lam, style)


def _parse_square(text: str) -> SquarePartition:
    return SquarePartition.from_parts(parse_partition(text))


def _parse_power(text: str, j: int, k: int) -> PowerPartition:
    return PowerPartition.from_parts(parse_partition(text), k + 1, j)


def _cap(n: int, limit: int, args: argparse.Namespace, what: str) -> None:
    if n > limit and not args.unsafe_large:
        raise CapExceeded(f"{what} n={n} exceeds cap {limit}; pass --unsafe-large to proceed")


# -- subcommands -------------------------------------------------------------------------


def cmd_check(args, out, stdin, limits) -> None:
    for text in _literals(args, stdin):
        lam = parse_partition(text)
        if args.cls == "seq":
            ok = congruence.is_sequentially_congruent(lam)
        elif args.cls == "freq":
            ok = congruence.is_frequency_congruent(lam)
        else:
            ok = congruence.is_member_s_jk(lam, args.j, args.k, allow_gaps=args.allow_gaps)
        verdict = "true" if ok else "false"
        if args.format == "records":
            print(_record(input=_fmt(lam, "parts"), cls=args.cls, result=verdict), file=out)
        else:
            print(verdict, file=out)


def cmd_map(args, out, stdin, limits) -> None:
    for text in _literals(args, stdin):
        d = args.direction
        if d == "seq-to-square":
            result = str(bijection.seq_to_square(parse_partition(text)))
        elif d == "square-to-seq":
            result = _fmt(bijection.square_to_seq(_parse_square(text)), args.style)
        elif d == "pi":
            result = str(bijection.pi_map(parse_partition(text)))
        elif d == "pi-inverse":
            result = _fmt(bijection.pi_inverse(_parse_square(text)), args.style)
        elif d == "conjugate":
            result = _fmt(conjugate(parse_partition(text)), args.style)
        elif d == "pi-jk":
            result = str(bijection.pi_jk_map(parse_partition(text), args.j, args.k))
        else:  # pi-jk-inverse
            result = _fmt(bijection.pi_jk_inverse(_parse_power(text, args.j, args.k)), args.style)
        if args.format == "records":
            print(_record(input=text.strip(), direction=d, output=result), file=out)
        else:
            print(result, file=out)


def _enumerate_stream(args, n: int, limits: Limits) -> Iterable[str]:
    c, m = args.cls, args.method
    if c == "all":
        return (_fmt(p, args.style) for p in enumeration.partitions_of(n))
    if c == "seq":
        return (_fmt(p, args.style) for p in enumeration.seq_cong_partitions_of(n, m))
    if c == "freq":
        return (_fmt(p, args.style) for p in enumeration.freq_cong_partitions_of(n, m))
    if c == "square":
        return (str(mu) for mu in enumeration.square_partitions_of(n))
    if c == "square-l":
        if m == "filter":
            _cap(n, limits.square_oracle_max_n, args, "square-l filter")
        return (str(mu) for mu in enumeration.square_partitions_with_l(n, m))
    if c == "seq-largest":
        if n < 1:
            raise PartitionError("seq-largest needs n >= 1")
        if m == "filter":
            _cap(n, limits.square_oracle_max_n, args, "seq-largest filter")
        return (_fmt(p, args.style) for p in enumeration.seq_cong_with_largest_part(n, m))
    if c == "sjk":
        return (
            _fmt(p, args.style)
            for p in enumeration.s_jk_partitions_of(n, args.j, args.k, m, allow_gaps=args.allow_gaps)
        )
    return (str(rho) for rho in enumeration.power_partitions_exact_j(n, args.j, args.k, m))


def cmd_enumerate(args, out, stdin, limits) -> None:
    n = args.n
    _cap(n, limits.enumerate_max_n, args, "enumerate")
    for idx, line in enumerate(_enumerate_stream(args, n, limits)):
        if args.format == "records":
            print(_record(n=n, cls=args.cls, index=idx, value=line), file=out)
        else:
            print(line, file=out)


def cmd_count(args, out, stdin, limits) -> None:
    ns = parse_range(args.range)
    if not ns:
        return
    top = ns[-1]
    if args.cls == "seq-oracle":
        _cap(top, limits.oracle_max_n, args, "seq-oracle count")
        values = {n: counting.p_seq_cong_oracle(n) for n in ns}
    else:
        _cap(top, limits.count_max_n, args, "count")
        table = counting.p_table(top) if args.cls == "p" else counting.p_square_table(top)
        values = {n: table[n] for n in ns}
    for n in ns:
        if args.format == "records":
            print(_record(n=n, cls=args.cls, count=values[n]), file=out)
        else:
            print(f"{n}\t{values[n]}", file=out)


def cmd_render(args, out, stdin, limits) -> None:
    first = True
    for text in _literals(args, stdin):
        lam = parse_partition(text)
        diagram = render_square_decomposition(lam, args.fill)
        if args.format == "records":
            blocks = ",".join(map(str, square_blocks(lam)))
            print(_record(input=_fmt(lam, "parts"), blocks=blocks, rows=diagram.replace("\n", "/")), file=out)
            continue
        if not first:
            print(file=out)
        print(diagram, file=out)
        first = False


def cmd_estimate(args, out, stdin, limits) -> None:
    ns = [int(x) for x in args.ns]
    if ns:
        _cap(max(ns), limits.count_max_n, args, "estimate")
    report = compare_estimate(ns)
    c = report.constants
    if args.format == "records":
        print(_record(zeta_3_2=repr(c.zeta_3_2), B=repr(c.B), C=repr(c.C)), file=out)
        for row in report:
            print(
                _record(
                    n=row.n,
                    exact=row.exact,
                    estimate=repr(row.estimate),
                    log_exact=repr(row.log_exact),
                    log_estimate=repr(row.log_estimate),
                    log_ratio=repr(row.log_ratio),
                ),
                file=out,
            )
        return
    print(f"zeta(3/2) = {c.zeta_3_2:.15f}   B = {c.B:.15f}   C = {c.C:.15f}", file=out)
    header = ("n", "exact", "estimate", "log_exact", "log_estimate", "log_ratio")
    cells = [header] + [
        (
            str(r.n),
            str(r.exact) if len(str(r.exact)) <= 20 else f"{float(r.exact):.6e}",
            f"{r.estimate:.6e}",
            f"{r.log_exact:.6f}",
            f"{r.log_estimate:.6f}",
            f"{r.log_ratio:.8f}",
        )
        for r in report
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    for row in cells:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip(), file=out)


# -- parser --------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="seqcong", description="Sequentially congruent partitions and partitions into squares.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "records"), default="plain")
    common.add_argument("--unsafe-large", action="store_true", help="lift the size caps")
    jk = _Parser(add_help=False)
    jk.add_argument("--j", type=int, default=1)
    jk.add_argument("--k", type=int, default=1)
    style = _Parser(add_help=False)
    style.add_argument("--style", choices=("freq", "parts"), default="freq", help="partition output form")

    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", parents=[common, jk], help="class membership")
    s.add_argument("--class", dest="cls", choices=("seq", "freq", "sjk"), required=True)
    s.add_argument("--allow-gaps", action="store_true")
    s.add_argument("literals", nargs="*")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("map", parents=[common, jk, style], help="apply a bijection")
    s.add_argument(
        "--direction",
        required=True,
        choices=("seq-to-square", "square-to-seq", "pi", "pi-inverse", "conjugate", "pi-jk", "pi-jk-inverse"),
    )
    s.add_argument("literals", nargs="*")
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("enumerate", parents=[common, jk, style], help="list a class, one per line")
    s.add_argument(
        "--class",
        dest="cls",
        required=True,
        choices=("all", "seq", "freq", "square", "square-l", "seq-largest", "sjk", "power"),
    )
    s.add_argument("--method", choices=("fast", "filter"), default="fast")
    s.add_argument("--allow-gaps", action="store_true")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("count", parents=[common], help="exact counts")
    s.add_argument("--class", dest="cls", choices=("p", "square", "seq", "seq-oracle"), required=True)
    s.add_argument("range", help="N, A..B (exclusive) or A..=B (inclusive)")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("render", parents=[common], help="square decomposition diagram")
    s.add_argument("--fill", default=BLOCK_FILL)
    s.add_argument("literals", nargs="*")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("estimate", parents=[common], help="Wright estimate vs exact counts")
    s.add_argument("ns", nargs="*")
    s.set_defaults(func=cmd_estimate)
    return p


def run(argv: list[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None,
        err: TextIO | None = None, limits: Limits = Limits()) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "j", 1) < 1 or getattr(args, "k", 0) < 0:
            raise UsageError("--j must be >= 1 and --k >= 0")
        if getattr(args, "ns", None):
            try:
                [int(x) for x in args.ns]
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        args.func(args, out, stdin, limits)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"seqcong: usage error: {exc}", file=err)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"seqcong: {exc}", file=err)
        return EXIT_CAP
    except (PartitionError, ValueError) as exc:
        print(f"seqcong: error: {exc}", file=err)
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run())
