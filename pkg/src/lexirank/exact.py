"""Exact rational and dyadic arithmetic.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator). Dyadics are rationals ``m / 2**k`` in ``[0, 1)`` stored in
canonical form. Nothing in this module touches floating point.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from lexirank.errors import DivisionByZero, DomainError, NotDyadicRank, ParseError

Rational = Fraction


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return self.name.lower()

    @classmethod
    def of(cls, sign: int) -> "Ordering":
        return cls((sign > 0) - (sign < 0))


def rat(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ParseError(f"not a rational number: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_neg(a: Fraction) -> Fraction:
    return -a


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise DivisionByZero("rational division by zero")
    return Fraction(a) / b


def rat_cmp(a: Fraction, b: Fraction) -> Ordering:
    return Ordering.of((a > b) - (a < b))


def iroot(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None when n is not a perfect power."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    # Newton iteration on integers, started above the root
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


def rational_power(base: Fraction, exponent: Fraction) -> Fraction | None:
    """``base ** exponent`` when it is rational, else None. Requires base > 0."""
    if base <= 0:
        raise DomainError("rational powers need a positive base")
    k = exponent.denominator
    num = iroot(base.numerator, k)
    den = iroot(base.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den) ** exponent.numerator


@dataclass(frozen=True, order=False)
class Dyadic:
    """The rational ``mantissa / 2**scale`` in ``[0, 1)``, canonical."""

    mantissa: int
    scale: int

    def __post_init__(self):
        if self.mantissa < 0 or self.scale < 0:
            raise DomainError("dyadic mantissa and scale must be nonnegative")
        if self.mantissa >> self.scale:
            raise DomainError("dyadic rank must lie in [0, 1)")
        if self.mantissa == 0 and self.scale != 0:
            raise DomainError("zero dyadic must have scale 0")
        if self.mantissa and not self.mantissa & 1:
            raise DomainError("dyadic mantissa must be odd in canonical form")

    @classmethod
    def make(cls, mantissa: int, scale: int) -> "Dyadic":
        """Build from any ``mantissa / 2**scale``, reducing to canonical form."""
        if mantissa == 0:
            return cls(0, 0)
        tz = (mantissa & -mantissa).bit_length() - 1
        shift = min(tz, scale)
        return cls(mantissa >> shift, scale - shift)

    @classmethod
    def from_fraction(cls, q: Fraction) -> "Dyadic":
        q = Fraction(q)
        den = q.denominator
        if den & (den - 1):
            raise NotDyadicRank(f"{q} has a denominator that is not a power of two")
        if not 0 <= q < 1:
            raise NotDyadicRank(f"{q} lies outside [0, 1)")
        return cls.make(q.numerator, den.bit_length() - 1)

    @property
    def value(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.scale)

    def __lt__(self, other: "Dyadic") -> bool:
        return self.mantissa << other.scale < other.mantissa << self.scale

    def __le__(self, other: "Dyadic") -> bool:
        return not other < self

    def __gt__(self, other: "Dyadic") -> bool:
        return other < self

    def __ge__(self, other: "Dyadic") -> bool:
        return not self < other

    def __str__(self) -> str:
        return dyadic_to_binary_string(self)


def dyadic_to_binary_string(d: Dyadic) -> str:
    if d.mantissa == 0:
        return "0"
    return "0." + format(d.mantissa, "b").zfill(d.scale)


def parse_binary_string(text: str) -> Dyadic:
    """Inverse of :func:`dyadic_to_binary_string`; trailing zeros are tolerated."""
    s = text.strip()
    if s in ("0", "0.", "0.0"):
        return Dyadic(0, 0)
    if not s.startswith("0.") or len(s) == 2 or set(s[2:]) - {"0", "1"}:
        raise ParseError(f"not a binary fraction in [0, 1): {text!r}")
    bits = s[2:]
    return Dyadic.make(int(bits, 2), len(bits))


def dyadic_to_decimal_string(d: Dyadic, digits: int) -> str:
    """Decimal expansion truncated (toward zero) to ``digits`` fractional digits."""
    if digits < 1:
        raise DomainError("digits must be at least 1")
    # value < 1 so the truncated integer has at most `digits` decimal digits
    scaled = (d.mantissa * 10**digits) >> d.scale
    return f"0.{scaled:0{digits}d}"
