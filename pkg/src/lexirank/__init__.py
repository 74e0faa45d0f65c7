"""Exact lexicographic ranks, height-1 grossnumerals and a truncated Levi-Civita field."""

from lexirank.errors import (
    DivisionByZero,
    DomainError,
    HeightUnsupported,
    LexirankError,
    NotDyadicRank,
    ParseError,
    PowerUndefined,
    RationalPowerUnavailable,
    TransferUnavailable,
    UnknownSymbol,
)
from lexirank.exact import Dyadic, Ordering, Rational
from lexirank.grossnum import Grossnumeral, Magnitude, classify, g_compare, gross_rank
from lexirank.levicivita import LCNumber, lc_derivative
from lexirank.lexrank import MedalWord, RankedRow, build_table, decode_rank, encode_rank, lex_compare

__version__ = "0.1.0"

__all__ = [
    "DivisionByZero",
    "DomainError",
    "Dyadic",
    "Grossnumeral",
    "HeightUnsupported",
    "LCNumber",
    "LexirankError",
    "Magnitude",
    "MedalWord",
    "NotDyadicRank",
    "Ordering",
    "ParseError",
    "PowerUndefined",
    "RankedRow",
    "Rational",
    "RationalPowerUnavailable",
    "TransferUnavailable",
    "UnknownSymbol",
    "build_table",
    "classify",
    "decode_rank",
    "encode_rank",
    "g_compare",
    "lc_derivative",
    "lex_compare",
    "gross_rank",
]
