"""Height-1 grossnumerals: sparse polynomials in one infinite unit G.

Coefficients and exponents are exact rationals; exponents are constants,
never expressions in G. At this height comparison is decidable: the sign
of ``x - y`` is the sign of its leading (highest-exponent) coefficient.
"""

from __future__ import annotations

import enum
import functools
from fractions import Fraction
from typing import Iterable, Mapping

from lexirank.errors import DivisionByZero, DomainError, HeightUnsupported, RationalPowerUnavailable
from lexirank.exact import Ordering, rat, rational_power

HEIGHT_MESSAGE = (
    "grossnumerals with G inside an exponent are not supported: no algorithm is "
    "known that compares such numerals, e.g. decides 1 < G^(G^-1) < 2 (the value "
    "must be infinitely close to 1); only height-1 numerals with rational constant "
    "exponents are computable here"
)


class Magnitude(enum.Enum):
    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    FINITE = "finite"
    INFINITE = "infinite"

    def __str__(self) -> str:
        return self.value


@functools.total_ordering
class Grossnumeral:
    """Immutable sparse polynomial ``sum c * G**e``, terms in descending exponent order."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, Fraction] = {}
        for e, c in items:
            e, c = rat(e), rat(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Grossnumeral is immutable")

    @classmethod
    def constant(cls, c) -> "Grossnumeral":
        return cls({0: c})

    @classmethod
    def unit(cls) -> "Grossnumeral":
        return cls({1: 1})

    @classmethod
    def monomial(cls, c, e) -> "Grossnumeral":
        return cls({e: c})

    @classmethod
    def coerce(cls, x) -> "Grossnumeral":
        if isinstance(x, Grossnumeral):
            return x
        return cls.constant(x)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == 0 for e, _ in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return self.terms[0][1] if self.terms else Fraction(0)

    @property
    def degree(self) -> Fraction | None:
        return self.terms[0][0] if self.terms else None

    def as_dict(self) -> dict[Fraction, Fraction]:
        return dict(self.terms)

    def __add__(self, other):
        other = self.coerce(other)
        return Grossnumeral(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return Grossnumeral((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        return self + -self.coerce(other)

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __mul__(self, other):
        other = self.coerce(other)
        return Grossnumeral((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero constant only; other quotients leave the ring."""
        other = self.coerce(other)
        if not other.is_constant():
            raise DomainError("division by a non-constant grossnumeral is not defined")
        c = other.constant_value()
        if c == 0:
            raise DivisionByZero("grossnumeral division by zero")
        return self * Grossnumeral.constant(1 / c)

    def __rtruediv__(self, other):
        return self.coerce(other) / self

    def __pow__(self, q):
        return g_power(self, q)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Grossnumeral.constant(other)
        if not isinstance(other, Grossnumeral):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __lt__(self, other):
        if not isinstance(other, (Grossnumeral, int, Fraction)):
            return NotImplemented
        return g_compare(self, other) is Ordering.LESS

    def __repr__(self):
        return f"Grossnumeral({str(self)!r})"

    def __str__(self):
        return format_grossnumeral(self)


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({_fmt_rat(e)})"


def format_term(c: Fraction, e: Fraction, symbol: str) -> str:
    """One term with a nonnegative coefficient, as ``c*S^e``."""
    if e == 0:
        return _fmt_rat(c)
    power = symbol if e == 1 else f"{symbol}^{_fmt_exponent(e)}"
    return power if c == 1 else f"{_fmt_rat(c)}*{power}"


def format_grossnumeral(x: Grossnumeral) -> str:
    if not x.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(x.terms):
        body = format_term(abs(c), e, "G")
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def g_add(x, y) -> Grossnumeral:
    return Grossnumeral.coerce(x) + y


def g_sub(x, y) -> Grossnumeral:
    return Grossnumeral.coerce(x) - y


def g_mul(x, y) -> Grossnumeral:
    return Grossnumeral.coerce(x) * y


def g_neg(x) -> Grossnumeral:
    return -Grossnumeral.coerce(x)


def g_compare(x, y) -> Ordering:
    diff = Grossnumeral.coerce(x) - Grossnumeral.coerce(y)
    if diff.is_zero():
        return Ordering.EQUAL
    return Ordering.of(diff.terms[0][1].numerator)


def g_power(x, q) -> Grossnumeral:
    """``x ** q`` for a rational constant q.

    Monomials take any rational exponent as long as the coefficient power
    stays rational. Other numerals take nonnegative integer exponents only.
    """
    x = Grossnumeral.coerce(x)
    if isinstance(q, Grossnumeral):
        if not q.is_constant():
            raise HeightUnsupported(HEIGHT_MESSAGE)
        q = q.constant_value()
    q = rat(q)
    if len(x.terms) == 1:
        (e, c), = x.terms
        if q.denominator == 1:
            if q < 0 and c == 0:
                raise DivisionByZero("zero to a negative power")
            return Grossnumeral({e * q: c**q})
        if c < 0:
            raise RationalPowerUnavailable(f"{_fmt_rat(c)}^({_fmt_rat(q)}) is not a real rational")
        cq = rational_power(c, q)
        if cq is None:
            raise RationalPowerUnavailable(f"{_fmt_rat(c)}^({_fmt_rat(q)}) is irrational")
        return Grossnumeral({e * q: cq})
    if x.is_zero():
        if q < 0:
            raise DivisionByZero("zero to a negative power")
        return Grossnumeral.constant(1) if q == 0 else x
    if q.denominator != 1 or q < 0:
        raise DomainError(
            f"({x})^({_fmt_rat(q)}) is not a grossnumeral: only monomials take "
            "negative or fractional powers"
        )
    result = Grossnumeral.constant(1)
    base = x
    n = q.numerator
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def classify(x) -> Magnitude:
    """Magnitude class by exponents: any positive exponent makes x infinite."""
    x = Grossnumeral.coerce(x)
    if x.is_zero():
        return Magnitude.ZERO
    top = x.terms[0][0]
    if top > 0:
        return Magnitude.INFINITE
    if top < 0:
        return Magnitude.INFINITESIMAL
    return Magnitude.FINITE


def gross_rank(w, length: int | None = None) -> Grossnumeral:
    """``w1*G^(L-1) + w2*G^(L-2) + ... + wL``.

    L defaults to the canonical length of w. Ranks are only comparable
    between words given the same L: with canonical lengths, (1) and (0, 1)
    both map to 1 although (1) is lexicographically larger. Pass the number
    of medal classes as ``length`` when ranking several words.
    """
    from lexirank.lexrank import as_word

    letters = as_word(w).letters
    L = len(letters) if length is None else length
    if L < len(letters):
        raise DomainError(f"length {L} is shorter than the word {as_word(w)}")
    return Grossnumeral((L - 1 - i, n) for i, n in enumerate(letters))


def eval_at_base(x, p) -> Fraction:
    """Substitute the rational ``p > 0`` for G, exactly."""
    x = Grossnumeral.coerce(x)
    p = rat(p)
    if p <= 0:
        raise DomainError("evaluation base must be positive")
    total = Fraction(0)
    for e, c in x.terms:
        pe = rational_power(p, e)
        if pe is None:
            raise RationalPowerUnavailable(f"{_fmt_rat(p)}^{_fmt_exponent(e)} has no exact rational value")
        total += c * pe
    return total


def cauchy_bound(x) -> Fraction:
    """``1 + sum |c|``.

    For integer coefficients and integer exponents, substituting any base
    above this bound gives a value with the sign of the leading coefficient.
    """
    x = Grossnumeral.coerce(x)
    return 1 + sum((abs(c) for _, c in x.terms), Fraction(0))
