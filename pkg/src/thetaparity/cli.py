"""Command-line front end.

Subcommands build and persist bitmaps, run the statement suite over a range,
emit census tables and alpha sweeps as CSV, and answer one-off arithmetic
queries. Exit codes: 0 success (and, for verify, zero violations), 1 for
violations or I/O failure, 2 for usage errors, 3 when a bitmap is too short
for the requested scan.

Count-like arguments accept small arithmetic expressions such as 65536,
2^23+1 or 5*2^10, which keeps reproduction runs copy-pasteable.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import census, f2series, quadarith, theorems
from .f2series import BitmapFormatError, InsufficientBitmapError
from .theorems import SeriesContext, StatementId

__all__ = ["main"]


def _parse_count(text: str) -> int:
    """Integer expression: sums of products of INT or INT^INT."""
    try:
        total = 0
        for term in text.split("+"):
            prod = 1
            for factor in term.split("*"):
                if "^" in factor:
                    base, _, exp = factor.partition("^")
                    e = int(exp)
                    if not 0 <= e <= 64:
                        raise ValueError("exponent out of range")
                    prod *= int(base) ** e
                else:
                    prod *= int(factor)
            total += prod
        return total
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad count expression {text!r}") from exc


def _positive_count(text: str) -> int:
    value = _parse_count(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _form(text: str) -> tuple[int, ...]:
    try:
        coeffs = tuple(int(part) for part in text.split(","))
        quadarith.DiagonalForm(coeffs)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad form {text!r}: {exc}") from exc
    return coeffs


def _statement_ids(text: str) -> list[StatementId]:
    if text.strip().lower() == "all":
        return list(theorems.ALL_STATEMENTS)
    ids = []
    for token in text.split(","):
        name = token.strip().upper()
        try:
            ids.append(StatementId[name])
        except KeyError:
            raise argparse.ArgumentTypeError(f"unknown statement id {token!r}")
    return ids


def _read_bitmap(path: str):
    try:
        return f2series.read_f2s(path)
    except (OSError, BitmapFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None


def _write_text(text: str, path: str | None) -> bool:
    if path is None:
        sys.stdout.write(text)
        return True
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return False
    return True


_BUILDERS = {
    "theta": lambda limit: f2series.from_exponents(f2series.squares(limit), limit),
    "pentagonal": lambda limit: f2series.from_exponents(
        f2series.generalized_pentagonals(limit), limit),
    "inv-theta": census.build_B,
    "inv-pentagonal": census.build_Bstar,
    "inv-theta7": f2series.inverse_seventh_power,
}


def _cmd_gen(args) -> int:
    series = _BUILDERS[args.series](args.limit)
    try:
        f2series.write_f2s(series, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"{args.out}: {series.length} coefficients, {series.popcount()} set bits")
    return 0


def _cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    ids = args.statements
    if args.lo > args.hi:
        parser.error("LO must not exceed HI")
    if any(theorems.requires_seventh(i) for i in ids) and not args.inv_theta7:
        parser.error("the requested statements need --inv-theta7")
    inv = _read_bitmap(args.inv_theta)
    if inv is None:
        return 1
    inv7 = None
    if args.inv_theta7:
        inv7 = _read_bitmap(args.inv_theta7)
        if inv7 is None:
            return 1
    ctx = SeriesContext(inv, inv7)
    try:
        reports = theorems.run_suite(ids, args.lo, args.hi, ctx, threads=args.threads)
    except InsufficientBitmapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if not _write_text(theorems.reports_to_csv(reports), args.out):
        return 1
    return 0 if all(r.violated == 0 for r in reports) else 1


def _half_delta(count: int, x: int) -> str:
    # count - x/2, exactly; integral whenever x is even
    twice = 2 * count - x
    return str(twice // 2) if twice % 2 == 0 else f"{twice / 2:.1f}"


def _cmd_census(args) -> int:
    b = _read_bitmap(args.bitmap)
    if b is None:
        return 1
    try:
        table = census.interval_counts(b, args.x, args.intervals)
    except InsufficientBitmapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    lines = ["interval_index,lo,hi,count,count_minus_half_x"]
    for j, count in enumerate(table.counts):
        lo = j * table.interval_width
        hi = lo + table.interval_width
        lines.append(f"{j},{lo},{hi},{count},{_half_delta(count, table.x)}")
    return 0 if _write_text("\n".join(lines) + "\n", args.out) else 1


def _cmd_alpha(args) -> int:
    b = _read_bitmap(args.bitmap)
    if b is None:
        return 1
    try:
        sweep = census.alpha_sweep(b, args.max_x, args.step)
    except InsufficientBitmapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    lines = ["x,beta,alpha"]
    for row in sweep.rows:
        lines.append(f"{row.x},{row.beta},{row.alpha:.6f}")
    return 0 if _write_text("\n".join(lines) + "\n", args.out) else 1


def _cmd_repcount(args, parser: argparse.ArgumentParser) -> int:
    if args.primitive and not args.signed:
        parser.error("--primitive requires --signed")
    if args.signed:
        value = quadarith.count_signed_representations(
            args.n, args.form, primitive=args.primitive)
    else:
        value = quadarith.count_square_tuples(args.n, args.form)
    print(value)
    return 0


def _cmd_classnum(args, parser: argparse.ArgumentParser) -> int:
    try:
        h = quadarith.class_number(args.disc)
    except ValueError as exc:
        parser.error(str(exc))
    print(h)
    return 0


def _cmd_jacobi(args, parser: argparse.ArgumentParser) -> int:
    try:
        value = quadarith.jacobi(args.a, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    print(value)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetaparity",
        description="GF(2) theta-series reciprocal bitmaps and their "
                    "arithmetic cross-checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_threads = os.cpu_count() or 1

    def add_threads(p):
        p.add_argument("--threads", type=int, default=default_threads,
                       help="worker threads for range scans (default: all cores)")

    p_gen = sub.add_parser("gen", help="build a bitmap and write it as .f2s")
    p_gen.add_argument("series", choices=sorted(_BUILDERS))
    p_gen.add_argument("limit", type=_positive_count,
                       help="coefficient count, e.g. 2^23+1")
    p_gen.add_argument("--out", required=True)
    add_threads(p_gen)

    p_ver = sub.add_parser("verify", help="run the statement suite over a range")
    p_ver.add_argument("statements", type=_statement_ids,
                       help="'all' or comma-separated ids like T1_1,L3_5")
    p_ver.add_argument("lo", type=_parse_count)
    p_ver.add_argument("hi", type=_parse_count)
    p_ver.add_argument("--inv-theta", required=True, help=".f2s bitmap of 1/g")
    p_ver.add_argument("--inv-theta7", help=".f2s bitmap of 1/g^7 (for L3_5)")
    p_ver.add_argument("--out", help="write the CSV report here instead of stdout")
    add_threads(p_ver)

    p_cen = sub.add_parser("census", help="count members = 15 mod 16 per interval")
    p_cen.add_argument("--x", type=_positive_count, required=True,
                       help="interval width is 16*x")
    p_cen.add_argument("--intervals", type=_parse_count, required=True)
    p_cen.add_argument("--bitmap", required=True)
    p_cen.add_argument("--out")
    add_threads(p_cen)

    p_alp = sub.add_parser("alpha", help="sweep the deviation alpha(x)")
    p_alp.add_argument("--max-x", type=_positive_count, required=True)
    p_alp.add_argument("--step", type=_positive_count, required=True)
    p_alp.add_argument("--bitmap", required=True)
    p_alp.add_argument("--out")
    add_threads(p_alp)

    p_rep = sub.add_parser("repcount", help="representation counts for one n")
    p_rep.add_argument("--n", type=_parse_count, required=True)
    p_rep.add_argument("--form", type=_form, required=True,
                       help="comma-separated coefficients, e.g. 1,1,1")
    p_rep.add_argument("--signed", action="store_true",
                       help="count signed integer vectors instead of square tuples")
    p_rep.add_argument("--primitive", action="store_true",
                       help="restrict to gcd-1 vectors (needs --signed)")
    add_threads(p_rep)

    p_cls = sub.add_parser("classnum", help="class number of a negative discriminant")
    p_cls.add_argument("--disc", type=int, required=True)
    add_threads(p_cls)

    p_jac = sub.add_parser("jacobi", help="Jacobi symbol (a | n)")
    p_jac.add_argument("--a", type=int, required=True)
    p_jac.add_argument("--n", type=int, required=True)
    add_threads(p_jac)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        return _cmd_gen(args)
    if args.command == "verify":
        return _cmd_verify(args, parser)
    if args.command == "census":
        return _cmd_census(args)
    if args.command == "alpha":
        return _cmd_alpha(args)
    if args.command == "repcount":
        return _cmd_repcount(args, parser)
    if args.command == "classnum":
        return _cmd_classnum(args, parser)
    return _cmd_jacobi(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
