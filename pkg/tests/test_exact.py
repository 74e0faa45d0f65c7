from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from lexirank.errors import DivisionByZero, DomainError, NotDyadicRank, ParseError
from lexirank.exact import (
    Dyadic,
    Ordering,
    iroot,
    parse_binary_string,
    parse_rational,
    rat_add,
    rat_cmp,
    rat_div,
    rat_mul,
    rat_neg,
    rat_sub,
    rational_power,
    dyadic_to_binary_string,
    dyadic_to_decimal_string,
)

fractions = st.fractions(max_denominator=10**6)
nonzero = fractions.filter(bool)


def test_add_by_hand():
    assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_sub_mul_neg_div():
    assert rat_sub(Fraction(1, 2), Fraction(1, 3)) == Fraction(1, 6)
    assert rat_mul(Fraction(2, 3), Fraction(9, 4)) == Fraction(3, 2)
    assert rat_neg(Fraction(-7, 5)) == Fraction(7, 5)
    assert rat_div(Fraction(1, 2), Fraction(1, 4)) == 2


def test_div_by_zero():
    with pytest.raises(DivisionByZero):
        rat_div(Fraction(1), Fraction(0))


def test_cmp():
    assert rat_cmp(Fraction(1, 2), Fraction(1, 3)) is Ordering.GREATER
    assert rat_cmp(Fraction(1, 3), Fraction(1, 2)) is Ordering.LESS
    assert rat_cmp(Fraction(2, 4), Fraction(1, 2)) is Ordering.EQUAL
    assert str(Ordering.GREATER) == "greater"


def test_canonical_form():
    q = rat_add(Fraction(1, 6), Fraction(1, 6))
    assert (q.numerator, q.denominator) == (1, 3)
    q = rat_mul(Fraction(-2, 3), Fraction(3, -4))
    assert q.denominator > 0 and (q.numerator, q.denominator) == (1, 2)


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -6 / 8 ") == Fraction(-3, 4)
    assert parse_rational("17") == 17
    with pytest.raises(ParseError):
        parse_rational("3/")
    with pytest.raises(DivisionByZero):
        parse_rational("1/0")


@given(fractions)
def test_additive_identity(x):
    assert rat_add(x, Fraction(0)) == x


@given(fractions, fractions, fractions)
def test_field_axioms(a, b, c):
    assert rat_add(a, rat_add(b, c)) == rat_add(rat_add(a, b), c)
    assert rat_mul(a, rat_mul(b, c)) == rat_mul(rat_mul(a, b), c)
    assert rat_add(a, b) == rat_add(b, a)
    assert rat_mul(a, b) == rat_mul(b, a)
    assert rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c))
    assert rat_add(a, rat_neg(a)) == 0
    assert rat_sub(a, b) == rat_add(a, rat_neg(b))


@given(nonzero)
def test_multiplicative_inverse(a):
    assert rat_mul(a, rat_div(Fraction(1), a)) == 1


@given(fractions, fractions, fractions, nonzero)
def test_order_field_compatibility(a, b, c, p):
    p = abs(p)
    assert rat_cmp(a, b) == rat_cmp(rat_add(a, c), rat_add(b, c))
    assert rat_cmp(a, b) == rat_cmp(rat_mul(a, p), rat_mul(b, p))
    assert rat_cmp(a, b) == Ordering.of(-rat_cmp(b, a))


@given(fractions, fractions, fractions)
def test_order_is_total_and_transitive(a, b, c):
    assert rat_cmp(a, b) in (Ordering.LESS, Ordering.EQUAL, Ordering.GREATER)
    if rat_cmp(a, b) <= 0 and rat_cmp(b, c) <= 0:
        assert rat_cmp(a, c) <= 0


@pytest.mark.parametrize(
    "n, k, root",
    [(0, 3, 0), (1, 5, 1), (4, 2, 2), (27, 3, 3), (10**18, 6, 1000), (2, 2, None), (10**18 + 1, 6, None)],
)
def test_iroot(n, k, root):
    assert iroot(n, k) == root


def test_rational_power():
    assert rational_power(Fraction(4), Fraction(1, 2)) == 2
    assert rational_power(Fraction(8, 27), Fraction(-2, 3)) == Fraction(9, 4)
    assert rational_power(Fraction(2), Fraction(1, 2)) is None


# -- dyadics


def test_dyadic_canonical():
    assert Dyadic.make(4, 3) == Dyadic(1, 1)
    assert Dyadic.make(0, 5) == Dyadic(0, 0)
    with pytest.raises(DomainError):
        Dyadic(2, 3)
    with pytest.raises(DomainError):
        Dyadic(8, 3)  # equals 1
    with pytest.raises(DomainError):
        Dyadic(0, 2)


def test_dyadic_from_fraction():
    assert Dyadic.from_fraction(Fraction(9, 16)) == Dyadic(9, 4)
    with pytest.raises(NotDyadicRank):
        Dyadic.from_fraction(Fraction(1, 3))
    with pytest.raises(NotDyadicRank):
        Dyadic.from_fraction(Fraction(3, 2))


@pytest.mark.parametrize(
    "value, text",
    [
        (Fraction(1, 2), "0.1"),  # Slovakia
        (Fraction(1, 8), "0.001"),  # Kazakhstan
        (Fraction(0), "0"),
        (Fraction(9, 16), "0.1001"),  # Ukraine
    ],
)
def test_binary_string(value, text):
    assert dyadic_to_binary_string(Dyadic.from_fraction(value)) == text


@pytest.mark.parametrize(
    "value, text",
    [
        (Fraction(1, 2), "0.5000000"),
        (Fraction(1, 4), "0.2500000"),
        (Fraction(9, 16), "0.5625000"),
        (Fraction(0), "0.0000000"),
    ],
)
def test_decimal_string(value, text):
    assert dyadic_to_decimal_string(Dyadic.from_fraction(value), 7) == text


def test_decimal_truncates():
    # China's rank 0.93505859375 prints as 0.9350585 in the published table
    d = parse_binary_string("0.11101111011")
    assert d.value == Fraction(93505859375, 10**11)
    assert dyadic_to_decimal_string(d, 7) == "0.9350585"
    assert dyadic_to_decimal_string(d, 11) == "0.93505859375"
    assert dyadic_to_decimal_string(d, 13) == "0.9350585937500"
    with pytest.raises(DomainError):
        dyadic_to_decimal_string(d, 0)


dyadics = st.integers(min_value=0, max_value=200).flatmap(
    lambda k: st.integers(min_value=0, max_value=2**k - 1).map(lambda m: Dyadic.make(m, k))
)


@given(dyadics)
def test_binary_roundtrip(d):
    assert parse_binary_string(dyadic_to_binary_string(d)) == d


@given(dyadics, dyadics)
def test_dyadic_order_matches_value(a, b):
    assert (a < b) == (a.value < b.value)
    assert (a <= b) == (a.value <= b.value)


def test_parse_binary_tolerates_trailing_zeros():
    assert parse_binary_string("0.") == Dyadic(0, 0)
    assert parse_binary_string("0.1000") == Dyadic(1, 1)


@pytest.mark.parametrize("bad", ["1.0", "0.2", ".1", "", "0.1x"])
def test_parse_binary_rejects(bad):
    with pytest.raises(ParseError):
        parse_binary_string(bad)
