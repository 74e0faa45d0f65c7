"""Command-line front end.

Exit codes: 0 success, 1 parse or I/O error, 2 HeightUnsupported,
3 TransferUnavailable, 4 domain or math error.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from lexirank.errors import DomainError, LexirankError, ParseError
from lexirank.exact import dyadic_to_binary_string, dyadic_to_decimal_string, parse_binary_string
from lexirank.grossnum import classify, eval_at_base, g_compare
from lexirank.levicivita import DEFAULT_DEPTH
from lexirank.lexrank import build_table, decode_rank, encode_rank, format_table, read_medal_csv
from lexirank.parser import derivative, parse, parse_gross, parse_lc

FORMATS = ("text", "csv", "json")
DISPLAY_TOL = 1e-12
BUNDLED_CSV = "olympics2014.csv"

GROSS_HELP = """\
Height-1 grossnumeral calculator. Expressions are polynomials in G with
rational coefficients and rational constant exponents, e.g. "5*G^3+12*G+1"
or "G^(1/2)". With two expressions prints the comparison and the magnitude
class of each side. --eval substitutes the base p (--base, default 10^6).

Magnitude classes: a numeral is infinite iff one of its exponents is
positive; this criterion is sound only at height 1. The older criterion
"infinite iff at least one grosspower is greater than zero" is rejected for
numerals like G^(G^-1): its exponent G^-1 is positive, yet the value must be
infinitely close to 1, and no known algorithm decides 1 < G^(G^-1) < 2.
Such inputs (G inside an exponent) exit with code 2.
"""

LC_HELP = """\
Truncated Levi-Civita calculator in the infinitesimal d. Supports + - * / ^
(rational exponents), sin, cos, exp on finite arguments. Coefficients below
1e-12 are suppressed in the printed value. sin, cos and exp of an infinite
argument such as d^-1 are undefined and exit with code 3.
"""


@dataclass(frozen=True)
class Config:
    precision: int = 7
    base: Fraction = Fraction(10**6)
    depth: int = DEFAULT_DEPTH
    format: str = "text"

    def __post_init__(self):
        if self.precision < 1:
            raise DomainError("--precision must be at least 1")
        if self.depth < 2:
            raise DomainError("--depth must be at least 2")
        if self.base <= 0:
            raise DomainError("--base must be positive")
        if self.format not in FORMATS:
            raise DomainError(f"--format must be one of {', '.join(FORMATS)}")


class _ArgumentParser(argparse.ArgumentParser):
    # usage errors share exit code 1 with parse errors; 2 is reserved
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS, help="decimal digits of ranks (default 7)")
    common.add_argument("--base", default=argparse.SUPPRESS, help="evaluation base p for G (default 10^6)")
    common.add_argument("--depth", type=int, default=argparse.SUPPRESS, help="Levi-Civita truncation depth (default 10)")
    common.add_argument(
        "--format",
        choices=FORMATS,
        default=argparse.SUPPRESS,
        help="table output format (default $LEXIRANK_FORMAT or text)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(
        prog="lexirank",
        description="Exact lexicographic ranks, grossnumerals and Levi-Civita numbers.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("rank", parents=[common], help="binary and decimal rank of a medal word")
    p.add_argument("word", help='comma-separated counts, e.g. "13,11,9"')

    p = sub.add_parser("unrank", parents=[common], help="medal word of a binary rank")
    p.add_argument("binary", help='binary fraction, e.g. "0.1001"')

    p = sub.add_parser("table", parents=[common], help="ranked medal table from CSV")
    p.add_argument("csv", nargs="?", help="CSV path, '-' for stdin; default is the bundled 2014 table")

    p = sub.add_parser(
        "gross",
        parents=[common],
        help="grossnumeral calculator",
        description=GROSS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("expr")
    p.add_argument("expr2", nargs="?")
    p.add_argument("--eval", action="store_true", help="substitute the base p for G")

    p = sub.add_parser(
        "lc",
        parents=[common],
        help="Levi-Civita calculator",
        description=LC_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("expr", nargs="?")
    p.add_argument("--derive", metavar="EXPR", help="differentiate EXPR in the variable x")
    p.add_argument("--at", default="0", help="point of differentiation (default 0)")
    p.add_argument("--order", type=int, default=1, help="derivative order (default 1)")
    return parser


def _config(args) -> Config:
    base = getattr(args, "base", None)
    return Config(
        precision=getattr(args, "precision", 7),
        base=parse_gross(base).constant_value() if base is not None else Fraction(10**6),
        depth=getattr(args, "depth", DEFAULT_DEPTH),
        format=getattr(args, "format", None) or os.environ.get("LEXIRANK_FORMAT", "text"),
    )


def _fmt_exact(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_rank(args, cfg: Config, out) -> None:
    rank = encode_rank(parse(args.word, "word"))
    print(f"{dyadic_to_binary_string(rank)}  {dyadic_to_decimal_string(rank, cfg.precision)}", file=out)


def cmd_unrank(args, cfg: Config, out) -> None:
    print(str(decode_rank(parse_binary_string(args.binary))), file=out)


def _open_csv(path: str | None):
    if path is None:
        return resources.files("lexirank").joinpath("data", BUNDLED_CSV).open(encoding="utf-8")
    if path == "-":
        return io.StringIO(sys.stdin.read())
    try:
        return open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def cmd_table(args, cfg: Config, out) -> None:
    with _open_csv(args.csv) as stream:
        classes, records = read_medal_csv(stream)
    rows = build_table(records, cfg.precision)
    out.write(format_table(rows, classes, cfg.format))


def cmd_gross(args, cfg: Config, out) -> None:
    x = parse_gross(args.expr)
    if args.expr2 is None:
        print(_fmt_exact(eval_at_base(x, cfg.base)) if args.eval else str(x), file=out)
        return
    y = parse_gross(args.expr2)
    print(f"{g_compare(x, y)}; left is {classify(x)}; right is {classify(y)}", file=out)
    if args.eval:
        print(_fmt_exact(eval_at_base(x, cfg.base)), file=out)
        print(_fmt_exact(eval_at_base(y, cfg.base)), file=out)


def cmd_lc(args, cfg: Config, out) -> None:
    if args.derive is not None:
        if args.expr is not None:
            raise ParseError("give either an expression or --derive, not both")
        at = parse_gross(args.at).constant_value()
        value = derivative(args.derive, at, args.order, cfg.depth)
        print(format(value, ".12g"), file=out)
        return
    if args.expr is None:
        raise ParseError("lc needs an expression or --derive")
    value = parse_lc(args.expr, cfg.depth).chop(DISPLAY_TOL)
    print(value.format(digits=12), file=out)


COMMANDS = {
    "rank": cmd_rank,
    "unrank": cmd_unrank,
    "table": cmd_table,
    "gross": cmd_gross,
    "lc": cmd_lc,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        COMMANDS[args.command](args, cfg, out)
    except LexirankError as exc:
        print(f"lexirank: {type(exc).__name__}: {exc}", file=err)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
