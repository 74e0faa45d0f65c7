from fractions import Fraction

import pytest
from hypothesis import given

from lexirank.errors import (
    DivisionByZero,
    DomainError,
    HeightUnsupported,
    ParseError,
    PowerUndefined,
    RationalPowerUnavailable,
    TransferUnavailable,
    UnknownSymbol,
)
from lexirank.grossnum import Grossnumeral
from lexirank.levicivita import LCNumber
from lexirank.lexrank import MedalWord
from lexirank.parser import BinOp, Neg, Num, Sym, derivative, evaluate, parse, parse_gross, parse_lc

from strategies import finite_lc, grossnumerals, lc_numbers, max_coefficient

G = Grossnumeral.unit()


def test_gross_terms():
    assert parse_gross("3*G^2 + G").as_dict() == {2: 3, 1: 1}


def test_tree_shape():
    assert parse("2+3*G", "gross") == BinOp("+", Num(Fraction(2), 0), BinOp("*", Num(Fraction(3), 2), Sym("G", 4), 3), 1)
    assert parse("-G^2", "gross") == Neg(BinOp("^", Sym("G", 1), Num(Fraction(2), 3), 2), 0)


def test_precedence():
    assert parse_gross("2+3*G") == 3 * G + 2
    assert parse_gross("G^2^3") == G**8
    assert parse_gross("-G^2") == -(G * G)
    assert parse_gross("(2+3)*G") == 5 * G
    assert parse_gross("2-3-4") == -5
    assert parse_gross("12/3/2") == 2
    assert parse_gross("G^-1") == G**-1
    assert parse_gross("1/2*G") == Fraction(1, 2) * G
    assert parse_gross("G^(1/2)") == G ** Fraction(1, 2)
    assert parse_gross("G^1/2") == Fraction(1, 2) * G


def test_unicode_operators():
    assert parse_gross("3×G − 1") == 3 * G - 1


def test_decimal_literals_are_exact():
    assert parse_gross("0.1*G") == Fraction(1, 10) * G
    assert parse_gross("1e-3") == Fraction(1, 1000)


def test_word_dialect():
    assert parse("5,0,12,1", "word") == MedalWord.of(5, 0, 12, 1)
    assert parse(" 13, 11 ,9 ", "word") == MedalWord.of(13, 11, 9)
    assert parse("0", "word") == MedalWord()
    assert parse("", "word") == MedalWord()
    with pytest.raises(ParseError):
        parse("1,x", "word")
    with pytest.raises(DomainError):
        parse("1,-2", "word")


def test_height_rejected():
    with pytest.raises(HeightUnsupported, match="no algorithm"):
        parse("G^(G^-1)", "gross")
    with pytest.raises(HeightUnsupported):
        parse("2^(1+G)", "gross")
    with pytest.raises(HeightUnsupported):
        parse("G^-G", "gross")


@pytest.mark.parametrize(
    "text, position",
    [("3*", 2), ("(G+1", 4), ("G)", 1), ("3 $ 4", 2), ("sin 3", 4), ("", 0), ("G G", 2)],
)
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ParseError) as exc:
        parse(text, "gross")
    assert exc.value.position == position


def test_unknown_symbols():
    with pytest.raises(UnknownSymbol):
        parse("G + 1", "lc")
    with pytest.raises(UnknownSymbol):
        parse("d + 1", "gross")
    with pytest.raises(UnknownSymbol):
        parse("y", "lc")
    with pytest.raises(UnknownSymbol):
        parse_lc("x + 1")


def test_evaluate_gross():
    assert evaluate(parse("(G+1)*(G-1)", "gross"), "gross") == G * G - 1
    assert parse_gross("(6*G)/3") == 2 * G
    with pytest.raises(DomainError):
        parse_gross("1/G")
    with pytest.raises(DivisionByZero):
        parse_gross("G/(2-2)")
    with pytest.raises(DomainError, match="sin"):
        parse_gross("sin(G)")
    with pytest.raises(RationalPowerUnavailable):
        parse_gross("(2*G)^(1/2)")
    assert parse_gross("(4*G)^(1/2)") == 2 * G ** Fraction(1, 2)


def test_constant_exponents_fold_exactly():
    assert parse_gross("G^(4^(1/2))") == G * G
    with pytest.raises(RationalPowerUnavailable):
        parse_gross("G^(2^(1/2))")
    with pytest.raises(PowerUndefined):
        parse_lc("d^d")


def test_evaluate_lc():
    value = evaluate(parse("sin(1+d)^2 + cos(1+d)^2", "lc"), "lc")
    assert abs(value.coefficient(0) - 1) < 1e-12
    assert max_coefficient(value - 1) < 1e-12
    assert parse_lc("(1+d)*(1-d)") == LCNumber({0: 1.0, 2: -1.0})
    assert parse_lc("d^(1/2)") == LCNumber({Fraction(1, 2): 1.0})
    assert parse_lc("1/d") == LCNumber({-1: 1.0})
    assert parse_lc("exp(0)") == 1
    with pytest.raises(TransferUnavailable):
        parse_lc("sin(d^-1)")
    with pytest.raises(DivisionByZero):
        parse_lc("1/(d-d)")
    with pytest.raises(PowerUndefined):
        parse_lc("(-1+d)^(1/2)")


def test_depth_is_threaded_through():
    assert len(parse_lc("1/(1+d)", depth=4).terms) == 4


def test_derivative_helper():
    assert derivative("x^2", 3, 1) == 6
    assert derivative("sin(x)", 0, 1) == 1
    assert derivative("exp(x)", 0, 3) == pytest.approx(1, rel=1e-14)
    assert derivative("x^3 - 2*x", Fraction(1, 2), 2) == pytest.approx(3.0, rel=1e-15)


@given(grossnumerals)
def test_gross_print_roundtrip(x):
    assert parse_gross(str(x)) == x


@given(lc_numbers)
def test_lc_print_roundtrip(x):
    assert parse_lc(str(x)) == x


@given(finite_lc())
def test_lc_print_roundtrip_finite(x):
    assert parse_lc(str(x)) == x
