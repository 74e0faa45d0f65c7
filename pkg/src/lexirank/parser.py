"""Calculator grammar for medal words, grossnumerals and Levi-Civita numbers.

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?          right-associative
    atom    := NUMBER | SYMBOL | FUNC '(' expr ')' | '(' expr ')'

Numbers are integers or decimals (``1.5``, ``2e-3``) and are read exactly;
``a/b`` is a division of two literals and folds to an exact rational.
The ``gross`` dialect knows the symbol ``G``; the ``lc`` dialect knows
``d`` and the function variable ``x``. Exponents must fold to rational
constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from lexirank.errors import (
    DivisionByZero,
    DomainError,
    HeightUnsupported,
    ParseError,
    PowerUndefined,
    RationalPowerUnavailable,
    UnknownSymbol,
)
from lexirank.exact import rational_power
from lexirank.grossnum import HEIGHT_MESSAGE, Grossnumeral, g_power
from lexirank.levicivita import DEFAULT_DEPTH, LCNumber, lc_cos, lc_derivative, lc_exp, lc_sin
from lexirank.lexrank import MedalWord

DIALECTS = ("gross", "lc", "word")
FUNCTIONS = ("sin", "cos", "exp")
SYMBOLS = {"gross": {"G"}, "lc": {"d", "x"}}


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int = 0


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Expression"
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"
    pos: int = 0


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expression"
    pos: int = 0


Expression = Union[Num, Sym, Neg, BinOp, Call]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/^()−×])
    """,
    re.VERBOSE,
)
_OP_ALIASES = {"−": "-", "×": "*"}


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            tokens.append((kind, _OP_ALIASES.get(value, value), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, dialect: str):
        self.tokens = tokenize(text)
        self.i = 0
        self.dialect = dialect

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.advance()
        if kind == "end" or v != value:
            found = "end of input" if kind == "end" else repr(v)
            raise ParseError(f"expected {value!r}, found {found}", position=pos)

    def parse(self) -> Expression:
        node = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", position=pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, pos = self.advance()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            _, op, pos = self.advance()
            node = BinOp(op, node, self.unary(), pos)
        return node

    def unary(self):
        kind, v, pos = self.peek()
        if kind == "op" and v == "-":
            self.advance()
            return Neg(self.unary(), pos)
        if kind == "op" and v == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        kind, v, pos = self.peek()
        if kind == "op" and v == "^":
            self.advance()
            exponent = self.unary()
            if self.dialect == "gross" and _mentions(exponent, "G"):
                raise HeightUnsupported(f"{HEIGHT_MESSAGE} (position {pos})")
            return BinOp("^", base, exponent, pos)
        return base

    def atom(self):
        kind, v, pos = self.advance()
        if kind == "num":
            return Num(Fraction(v), pos)
        if kind == "name":
            if v in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(v, arg, pos)
            if v not in SYMBOLS[self.dialect]:
                raise UnknownSymbol(f"unknown symbol {v!r} in {self.dialect} expression", position=pos)
            return Sym(v, pos)
        if kind == "op" and v == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(v)
        raise ParseError(f"unexpected {found}", position=pos)


def _mentions(node: Expression, name: str) -> bool:
    if isinstance(node, Sym):
        return node.name == name
    if isinstance(node, Num):
        return False
    if isinstance(node, (Neg, Call)):
        return _mentions(node.operand if isinstance(node, Neg) else node.arg, name)
    return _mentions(node.left, name) or _mentions(node.right, name)


def parse_word(text: str) -> MedalWord:
    s = text.strip()
    if not s:
        return MedalWord()
    letters = []
    for i, part in enumerate(s.split(",")):
        part = part.strip()
        if not re.fullmatch(r"[+-]?\d+", part):
            raise ParseError(f"medal count {part!r} is not an integer", position=i)
        letters.append(int(part))
    return MedalWord(tuple(letters))


def parse(text: str, dialect: str) -> Expression | MedalWord:
    if dialect not in DIALECTS:
        raise ValueError(f"unknown dialect {dialect!r}")
    if dialect == "word":
        return parse_word(text)
    return _Parser(text, dialect).parse()


def fold_constant(node: Expression) -> Fraction:
    """Evaluate a symbol-free subtree exactly."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        return -fold_constant(node.operand)
    if isinstance(node, Sym):
        raise PowerUndefined(f"exponent must be a rational constant, found symbol {node.name!r}")
    if isinstance(node, Call):
        raise PowerUndefined(f"exponent must be a rational constant, found {node.func}(...)")
    a, b = fold_constant(node.left), fold_constant(node.right)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    if node.op == "/":
        if b == 0:
            raise DivisionByZero("division by zero in constant expression")
        return a / b
    if b.denominator == 1:
        if a == 0 and b < 0:
            raise DivisionByZero("zero to a negative power")
        return a**b
    if a <= 0:
        raise RationalPowerUnavailable(f"{a}^({b}) has no rational value")
    r = rational_power(a, b)
    if r is None:
        raise RationalPowerUnavailable(f"{a}^({b}) is irrational")
    return r


def _eval_gross(node: Expression) -> Grossnumeral:
    if isinstance(node, Num):
        return Grossnumeral.constant(node.value)
    if isinstance(node, Sym):
        return Grossnumeral.unit()
    if isinstance(node, Neg):
        return -_eval_gross(node.operand)
    if isinstance(node, Call):
        raise DomainError(
            f"{node.func} is not defined on grossnumerals: the calculus has no "
            f"transcendental functions, so {node.func}(G) has no value"
        )
    if node.op == "^":
        return g_power(_eval_gross(node.left), fold_constant(node.right))
    left, right = _eval_gross(node.left), _eval_gross(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


_LC_FUNCS = {"sin": lc_sin, "cos": lc_cos, "exp": lc_exp}


def _eval_lc(node: Expression, depth: int, x: LCNumber | None) -> LCNumber:
    if isinstance(node, Num):
        return LCNumber.constant(float(node.value), depth)
    if isinstance(node, Sym):
        if node.name == "d":
            return LCNumber.d(depth)
        if x is None:
            raise UnknownSymbol("symbol 'x' is only bound when differentiating", position=node.pos)
        return x
    if isinstance(node, Neg):
        return -_eval_lc(node.operand, depth, x)
    if isinstance(node, Call):
        return _LC_FUNCS[node.func](_eval_lc(node.arg, depth, x))
    if node.op == "^":
        return _eval_lc(node.left, depth, x) ** fold_constant(node.right)
    left, right = _eval_lc(node.left, depth, x), _eval_lc(node.right, depth, x)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


def evaluate(e: Expression, dialect: str, *, depth: int = DEFAULT_DEPTH, x: LCNumber | None = None):
    if dialect == "gross":
        return _eval_gross(e)
    if dialect == "lc":
        return _eval_lc(e, depth, x)
    raise ValueError(f"dialect {dialect!r} has no evaluator")


def parse_gross(text: str) -> Grossnumeral:
    return evaluate(parse(text, "gross"), "gross")


def parse_lc(text: str, depth: int = DEFAULT_DEPTH) -> LCNumber:
    return evaluate(parse(text, "lc"), "lc", depth=depth)


def derivative(text: str, a, n: int = 1, depth: int = DEFAULT_DEPTH) -> float:
    """n-th derivative at a of an ``lc`` expression in the variable x."""
    tree = parse(text, "lc")
    return lc_derivative(lambda v: evaluate(tree, "lc", depth=depth, x=v), a, n, depth)
