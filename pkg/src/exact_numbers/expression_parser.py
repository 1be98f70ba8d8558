"""
Exact text form for ExactReal values.

Grammar (recursive descent, left associative):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | atom
    atom   := NUMBER | NAME | FUNC '(' expr ')' | '(' expr ')'

NUMBER is an integer or a decimal literal (read exactly), NAME is one of the
named constants, FUNC is sqrt, frac or floor.
"""

import re
from fractions import Fraction
from math import gcd
from typing import List, Tuple

from src.errors.error_handling_system import ExpressionParseError, NumerationError
from .exact_real import ExactReal, as_exact

NAMED_CONSTANTS = {
    "golden": ExactReal(Fraction(-1, 2), Fraction(1, 2), 5),
    "sqrt2m1": ExactReal(Fraction(-1), Fraction(1), 2),
}

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    text = text.replace("−", "-")
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            break
        number, name, symbol = match.groups()
        start = match.start(match.lastindex) if match.lastindex else pos
        if number is not None:
            tokens.append(("num", number, start))
        elif name is not None:
            tokens.append(("name", name, start))
        elif symbol is not None:
            if symbol not in "+-*/()":
                raise ExpressionParseError(f"unexpected character '{symbol}' at position {start}")
            tokens.append(("op", symbol, start))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def _peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _take(self):
        token = self._peek()
        if token is None:
            raise ExpressionParseError(f"unexpected end of expression '{self.text}'")
        self.index += 1
        return token

    def _expect(self, symbol: str):
        kind, value, pos = self._take()
        if kind != "op" or value != symbol:
            raise ExpressionParseError(f"expected '{symbol}' but found '{value}' at position {pos}")

    def parse(self) -> ExactReal:
        if not self.tokens:
            raise ExpressionParseError("empty expression")
        value = self._expr()
        token = self._peek()
        if token is not None:
            raise ExpressionParseError(f"unexpected token '{token[1]}' at position {token[2]}")
        return value

    def _expr(self) -> ExactReal:
        value = self._term()
        while (token := self._peek()) is not None and token[0] == "op" and token[1] in "+-":
            self._take()
            rhs = self._term()
            value = value + rhs if token[1] == "+" else value - rhs
        return value

    def _term(self) -> ExactReal:
        value = self._unary()
        while (token := self._peek()) is not None and token[0] == "op" and token[1] in "*/":
            self._take()
            rhs = self._unary()
            value = value * rhs if token[1] == "*" else value / rhs
        return value

    def _unary(self) -> ExactReal:
        token = self._peek()
        if token is not None and token[0] == "op" and token[1] in "+-":
            self._take()
            value = self._unary()
            return -value if token[1] == "-" else value
        return self._atom()

    def _atom(self) -> ExactReal:
        kind, value, pos = self._take()
        if kind == "num":
            return ExactReal(Fraction(value))
        if kind == "name":
            name = value.lower()
            if name in NAMED_CONSTANTS:
                return NAMED_CONSTANTS[name]
            if name in ("sqrt", "frac", "floor"):
                self._expect("(")
                argument = self._expr()
                self._expect(")")
                if name == "sqrt":
                    if not argument.is_rational:
                        raise ExpressionParseError(f"sqrt argument at position {pos} must be rational")
                    return ExactReal.sqrt(argument.as_fraction())
                if name == "frac":
                    return argument.frac()
                return as_exact(argument.floor())
            raise ExpressionParseError(f"unknown name '{value}' at position {pos}")
        if value == "(":
            inner = self._expr()
            self._expect(")")
            return inner
        raise ExpressionParseError(f"unexpected token '{value}' at position {pos}")


def parse_exact(text) -> ExactReal:
    """Parse an exact expression such as '2/5', '(-1+1*sqrt(5))/2' or 'golden'"""
    if isinstance(text, (ExactReal, int, Fraction)):
        return as_exact(text)
    try:
        return _Parser(str(text)).parse()
    except ExpressionParseError:
        raise
    except NumerationError:
        # arithmetic errors (sqrt(-1), 1/0) keep their own category
        raise
    except (ValueError, ZeroDivisionError) as e:
        raise ExpressionParseError(f"cannot parse '{text}': {e}")


def format_exact(x: ExactReal) -> str:
    """'p/q' or 'n' for rationals, '(A+B*sqrt(d))/C' with C > 0 for quadratics"""
    if x.b == 0:
        q = x.a
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    c = x.a.denominator * x.b.denominator // gcd(x.a.denominator, x.b.denominator)
    big_a = int(x.a * c)
    big_b = int(x.b * c)
    sign = "+" if big_b > 0 else "-"
    return f"({big_a}{sign}{abs(big_b)}*sqrt({x.d}))/{c}"
