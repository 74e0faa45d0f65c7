"""Truncated Levi-Civita field.

Numbers are finite series ``sum c_e * d**e`` in a positive infinitesimal
``d`` with rational exponents (negative exponents are infinite parts) and
binary64 coefficients. Every value keeps at most ``depth`` terms, the ones
with the smallest exponents.

Besides its terms each value carries a ``horizon``: coefficients of
exponents strictly below the horizon are known, everything at or above it
has been lost to truncation. Arithmetic propagates the horizon and drops
terms past it, so a cancellation can never promote a tail term whose
value is only partially computed.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from lexirank.errors import DivisionByZero, DomainError, PowerUndefined, TransferUnavailable
from lexirank.exact import Ordering, rat

DEFAULT_DEPTH = 10
TINY = 1e-300
INF = math.inf


def _fmt_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def _fmt_coef(c: float, digits: int | None) -> str:
    if digits is not None:
        return format(c, f".{digits}g")
    if c.is_integer() and abs(c) < 1e16:
        return str(int(c))
    return repr(c)


@functools.total_ordering
class LCNumber:
    __slots__ = ("terms", "depth", "horizon")

    def __init__(self, terms: Mapping | Iterable[tuple] = (), depth: int = DEFAULT_DEPTH, horizon=INF):
        if depth < 1:
            raise DomainError("truncation depth must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, float] = {}
        for e, c in items:
            e = rat(e)
            acc[e] = acc.get(e, 0.0) + float(c)
        kept = sorted((e, c) for e, c in acc.items() if abs(c) >= TINY and e < horizon)
        if len(kept) > depth:
            horizon = kept[depth][0]
            kept = kept[:depth]
        object.__setattr__(self, "terms", tuple(kept))
        object.__setattr__(self, "depth", depth)
        object.__setattr__(self, "horizon", horizon)

    def __setattr__(self, name, value):
        raise AttributeError("LCNumber is immutable")

    @classmethod
    def constant(cls, c, depth: int = DEFAULT_DEPTH) -> "LCNumber":
        return cls({0: c}, depth)

    @classmethod
    def d(cls, depth: int = DEFAULT_DEPTH) -> "LCNumber":
        """The infinitesimal unit."""
        return cls({1: 1.0}, depth)

    @classmethod
    def monomial(cls, c, e, depth: int = DEFAULT_DEPTH) -> "LCNumber":
        return cls({e: c}, depth)

    def coerce(self, x) -> "LCNumber":
        if isinstance(x, LCNumber):
            return x
        if isinstance(x, (int, float, Fraction)):
            return LCNumber.constant(float(x), self.depth)
        raise TypeError(f"cannot combine LCNumber with {type(x).__name__}")

    # -- inspection

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def valuation(self):
        """Smallest exponent with a nonzero coefficient (inf for zero)."""
        return self.terms[0][0] if self.terms else INF

    @property
    def leading(self) -> float:
        return self.terms[0][1] if self.terms else 0.0

    def coefficient(self, e) -> float:
        e = rat(e)
        if e >= self.horizon:
            raise DomainError(f"coefficient of d^{_fmt_exponent(e)} was lost to truncation")
        return dict(self.terms).get(e, 0.0)

    def standard_part(self) -> float:
        if self.valuation < 0:
            raise DomainError("an infinite number has no standard part")
        return self.coefficient(0)

    def as_dict(self) -> dict[Fraction, float]:
        return dict(self.terms)

    def chop(self, tol: float) -> "LCNumber":
        """Drop coefficients below ``tol`` in magnitude."""
        return LCNumber(((e, c) for e, c in self.terms if abs(c) >= tol), self.depth, self.horizon)

    def with_depth(self, depth: int) -> "LCNumber":
        return LCNumber(self.terms, depth, self.horizon)

    # -- arithmetic

    def __add__(self, other):
        other = self.coerce(other)
        return LCNumber(
            self.terms + other.terms,
            max(self.depth, other.depth),
            min(self.horizon, other.horizon),
        )

    __radd__ = __add__

    def __neg__(self):
        return LCNumber(((e, -c) for e, c in self.terms), self.depth, self.horizon)

    def __sub__(self, other):
        return self + -self.coerce(other)

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __mul__(self, other):
        other = self.coerce(other)
        horizon = min(self.horizon + other.valuation, other.horizon + self.valuation)
        return LCNumber(
            ((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms),
            max(self.depth, other.depth),
            horizon,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * lc_invert(self.coerce(other))

    def __rtruediv__(self, other):
        return self.coerce(other) * lc_invert(self)

    def __pow__(self, q):
        return lc_power(self, q)

    def __eq__(self, other):
        if isinstance(other, (int, float, Fraction)):
            other = LCNumber.constant(other, self.depth)
        if not isinstance(other, LCNumber):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __lt__(self, other):
        if not isinstance(other, (LCNumber, int, float, Fraction)):
            return NotImplemented
        return lc_compare(self, other) is Ordering.LESS

    def format(self, digits: int | None = None) -> str:
        """Text form ``c*d^e`` ascending by exponent.

        With ``digits=None`` coefficients print as shortest round-trip reprs.
        """
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.terms):
            mag = _fmt_coef(abs(c), digits)
            if e == 0:
                body = mag
            else:
                power = "d" if e == 1 else f"d^{_fmt_exponent(e)}"
                body = power if mag == "1" else f"{mag}*{power}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LCNumber({self.format()!r}, depth={self.depth})"


def lc_add(x, y) -> LCNumber:
    return x + y


def lc_sub(x, y) -> LCNumber:
    return x - y


def lc_mul(x, y) -> LCNumber:
    return x * y


def lc_neg(x) -> LCNumber:
    return -x


def lc_compare(x, y) -> Ordering:
    """Order by the sign of the lowest-exponent coefficient of ``x - y``."""
    if not isinstance(x, LCNumber):
        x = y.coerce(x)
    diff = x - y
    if diff.is_zero():
        return Ordering.EQUAL
    return Ordering.GREATER if diff.leading > 0 else Ordering.LESS


def _split(x: LCNumber) -> tuple[float, Fraction, LCNumber]:
    """Write x = c * d^e * (1 + h) with h infinitesimal."""
    e, c = x.terms[0]
    rest = LCNumber(
        ((k - e, v / c) for k, v in x.terms[1:]),
        x.depth,
        x.horizon - e,
    )
    return c, e, rest


def _series(h: LCNumber, coefficients: Iterable[float], depth: int) -> LCNumber:
    """``sum a_k * h**k`` for infinitesimal h, summed through k = depth - 1.

    The k-th power has valuation at least ``k * v(h)``, so the partial sum is
    exact below ``depth * v(h)``.
    """
    v = h.valuation
    result = LCNumber((), depth)
    power = LCNumber.constant(1.0, depth)
    for k, a in enumerate(coefficients):
        if k >= depth or power.is_zero() and power.horizon == INF:
            break
        if a:
            result = result + power * a
        power = power * h
    cutoff = depth * v if v != INF else INF
    return LCNumber(result.terms, depth, min(result.horizon, cutoff))


def lc_invert(x: LCNumber) -> LCNumber:
    if x.is_zero():
        raise DivisionByZero("Levi-Civita inverse of zero")
    c, e, h = _split(x)
    s = _series(h, ((-1.0) ** k for k in range(x.depth)), x.depth)
    return LCNumber(((k - e, v / c) for k, v in s.terms), x.depth, s.horizon - e)


def _binomials(q: Fraction, n: int) -> Iterable[float]:
    b = Fraction(1)
    for k in range(n):
        yield float(b)
        b = b * (q - k) / (k + 1)


def lc_power(x: LCNumber, q) -> LCNumber:
    """``x ** q`` for rational q.

    Integer exponents go through repeated multiplication (any nonzero x).
    Fractional exponents expand the binomial series about the leading
    monomial and need a positive leading coefficient.
    """
    q = rat(q)
    if q.denominator == 1:
        n = q.numerator
        if n < 0:
            return lc_power(lc_invert(x), -n)
        result = LCNumber.constant(1.0, x.depth)
        base = x
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result
    if x.is_zero():
        if q > 0:
            return x
        raise PowerUndefined("zero to a nonpositive power")
    c, e, h = _split(x)
    if c <= 0:
        raise PowerUndefined(f"fractional power of a number with nonpositive leading coefficient {c!r}")
    s = _series(h, _binomials(q, x.depth), x.depth)
    cq = c ** float(q)
    shift = e * q
    return LCNumber(((k + shift, v * cq) for k, v in s.terms), x.depth, s.horizon + shift)


def _finite_split(x: LCNumber, name: str) -> tuple[float, LCNumber]:
    if x.valuation < 0:
        raise TransferUnavailable(
            f"{name} of an infinite element is undefined in this field: the real "
            f"{name} has no transfer to infinite arguments, so {name}({x}) has no value"
        )
    a = dict(x.terms).get(Fraction(0), 0.0)
    h = LCNumber(((e, c) for e, c in x.terms if e > 0), x.depth, x.horizon)
    return a, h


def _taylor(x: LCNumber, name: str, derivs: Callable[[float, int], float]) -> LCNumber:
    a, h = _finite_split(x, name)
    coefficients = (derivs(a, k) / math.factorial(k) for k in range(x.depth))
    return _series(h, coefficients, x.depth)


def _sin_derivative(a: float, k: int) -> float:
    return (math.sin(a), math.cos(a), -math.sin(a), -math.cos(a))[k % 4]


def _cos_derivative(a: float, k: int) -> float:
    return (math.cos(a), -math.sin(a), -math.cos(a), math.sin(a))[k % 4]


def lc_sin(x: LCNumber) -> LCNumber:
    return _taylor(x, "sin", _sin_derivative)


def lc_cos(x: LCNumber) -> LCNumber:
    return _taylor(x, "cos", _cos_derivative)


def lc_exp(x: LCNumber) -> LCNumber:
    return _taylor(x, "exp", lambda a, k: math.exp(a))


def lc_derivative(f: Callable[[LCNumber], LCNumber], a, n: int = 1, depth: int = DEFAULT_DEPTH) -> float:
    """n-th derivative of f at a, read off the d^n coefficient of f(a + d)."""
    if n < 0:
        raise DomainError("derivative order must be nonnegative")
    if n >= depth:
        raise DomainError(f"derivative order {n} needs truncation depth above {n}")
    x = LCNumber({0: float(a), 1: 1.0}, depth)
    y = f(x)
    if not isinstance(y, LCNumber):
        y = x.coerce(y)
    if y.valuation < 0:
        raise DomainError(f"function has a pole at {a}")
    if any(e.denominator != 1 for e, _ in y.terms if e <= n):
        raise DomainError(f"function is not analytic at {a}: f(a + d) = {y}")
    return math.factorial(n) * y.coefficient(n)
