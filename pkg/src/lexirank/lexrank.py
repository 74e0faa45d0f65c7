"""Lexicographic medal ranks as exact dyadic rationals.

A medal word ``(w1, ..., wL)`` is mapped to the number whose binary
expansion is ``0.`` followed by w1 ones, a zero, w2 ones, a zero, ...,
and finally wL ones. Lexicographically larger words get larger ranks, and
the word can be read back off the bits.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from lexirank.errors import DomainError, ParseError
from lexirank.exact import (
    Dyadic,
    Ordering,
    dyadic_to_binary_string,
    dyadic_to_decimal_string,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MedalWord:
    """Finite medal counts, most valuable class first; trailing zeros are trimmed."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for n in letters:
            if not isinstance(n, int) or isinstance(n, bool):
                raise DomainError(f"medal counts must be integers, got {n!r}")
            if n < 0:
                raise DomainError(f"medal counts must be nonnegative, got {n}")
        trimmed = letters
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        if len(trimmed) != len(letters):
            log.debug("normalized %s by trimming trailing zero letters", letters)
        object.__setattr__(self, "letters", trimmed)

    @classmethod
    def of(cls, *letters: int) -> "MedalWord":
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, n: int) -> int:
        """Letter ``n`` (0-based); letters past the end read as zero."""
        return self.letters[n] if n < len(self.letters) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))

    def padded(self, width: int) -> tuple[int, ...]:
        return self.letters + (0,) * (width - len(self.letters))


def as_word(w) -> MedalWord:
    return w if isinstance(w, MedalWord) else MedalWord(tuple(w))


def lex_compare(u, v) -> Ordering:
    u, v = as_word(u), as_word(v)
    for n in range(max(len(u), len(v))):
        if u[n] != v[n]:
            return Ordering.GREATER if u[n] > v[n] else Ordering.LESS
    return Ordering.EQUAL


def encode_rank(w) -> Dyadic:
    w = as_word(w)
    mantissa = 0
    scale = 0
    for i, n in enumerate(w.letters):
        if i:
            # separating zero bit
            mantissa <<= 1
            scale += 1
        mantissa = (mantissa << n) | ((1 << n) - 1)
        scale += n
    # canonical words end in a nonzero letter, so the mantissa is already odd
    return Dyadic(mantissa, scale) if mantissa else Dyadic(0, 0)


def encode_rank_formula(w) -> Fraction:
    """The rank as the literal double sum over letters and their medals.

    Kept deliberately naive: it is the second route against which the
    bit construction in :func:`encode_rank` is checked.
    """
    w = as_word(w)
    total = Fraction(0)
    prefix = 0
    for n, letter in enumerate(w.letters):
        inner = sum((Fraction(1, 2**m) for m in range(1, letter + 1)), Fraction(0))
        total += Fraction(1, 2 ** (prefix + n)) * inner
        prefix += letter
    return total


def decode_rank(d) -> MedalWord:
    """Recover the medal word from a rank (a Dyadic, or a dyadic Fraction)."""
    if not isinstance(d, Dyadic):
        d = Dyadic.from_fraction(Fraction(d))
    if d.mantissa == 0:
        return MedalWord()
    bits = format(d.mantissa, "b").zfill(d.scale)
    return MedalWord(tuple(len(run) for run in bits.split("0")))


@dataclass(frozen=True)
class RankedRow:
    label: str
    word: MedalWord
    rank: Dyadic
    binary: str
    decimal: str


def rank_row(label: str, word, digits: int = 7) -> RankedRow:
    word = as_word(word)
    rank = encode_rank(word)
    return RankedRow(
        label,
        word,
        rank,
        dyadic_to_binary_string(rank),
        dyadic_to_decimal_string(rank, digits),
    )


def build_table(rows: Iterable[tuple[str, object]], digits: int = 7) -> list[RankedRow]:
    """Rank every row; highest rank first, equal ranks ordered by label."""
    ranked = [rank_row(label, word, digits) for label, word in rows]
    ranked.sort(key=lambda r: r.label)
    ranked.sort(key=lambda r: r.rank, reverse=True)
    return ranked


def read_medal_csv(stream: TextIO) -> tuple[list[str], list[tuple[str, MedalWord]]]:
    """Parse ``label,c1,c2,...`` CSV. Returns the class column names and the records.

    Rows may carry fewer counts than the header (missing ones read as 0),
    never more. Blank lines are skipped.
    """
    reader = csv.reader(stream)
    header = None
    records: list[tuple[str, MedalWord]] = []
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if header is None:
            header = [cell.strip() for cell in row]
            if len(header) < 2:
                raise ParseError("header needs a label column and at least one count column", line=line)
            continue
        if len(row) > len(header):
            raise ParseError(f"row has {len(row)} cells but the header has {len(header)}", line=line)
        label = row[0].strip()
        if not label:
            raise ParseError("empty label", line=line)
        counts = []
        for cell in row[1:]:
            cell = cell.strip()
            if cell == "":
                counts.append(0)
                continue
            try:
                n = int(cell)
            except ValueError:
                raise ParseError(f"count {cell!r} is not an integer", line=line) from None
            if n < 0:
                raise DomainError(f"negative medal count {n} (line {line})")
            counts.append(n)
        records.append((label, MedalWord(tuple(counts))))
    return (header[1:] if header else []), records


def ingest_csv(stream: TextIO | str) -> list[tuple[str, MedalWord]]:
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    return read_medal_csv(stream)[1]


def format_table(rows: Sequence[RankedRow], classes: Sequence[str], fmt: str = "text") -> str:
    """Render ranked rows as an aligned text table, CSV, or JSON lines."""
    width = max([len(classes)] + [len(r.word) for r in rows])
    names = list(classes) + [f"c{i + 1}" for i in range(len(classes), width)]
    if fmt == "json":
        import json

        lines = [
            json.dumps(
                {
                    "country": r.label,
                    "medals": list(r.word.padded(width)),
                    "binary": r.binary,
                    "decimal": r.decimal,
                }
            )
            for r in rows
        ]
        return "".join(line + "\n" for line in lines)
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["country", *names, "binary", "decimal"])
        for r in rows:
            writer.writerow([r.label, *r.word.padded(width), r.binary, r.decimal])
        return out.getvalue()
    if fmt != "text":
        raise DomainError(f"unknown output format {fmt!r}")

    header = ["Country", *(n.capitalize() for n in names), "Binary", "Decimal"]
    body = [[r.label, *map(str, r.word.padded(width)), r.binary, r.decimal] for r in rows]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    counts = range(1, 1 + width)

    def render(cells):
        parts = [c.rjust(widths[i]) if i in counts else c.ljust(widths[i]) for i, c in enumerate(cells)]
        return "  ".join(parts).rstrip()

    return "".join(render(row) + "\n" for row in [header, *body])
