"""Recursive-descent parser and printer for one-variable rational expressions.

Grammar (whitespace is insignificant)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor | factor_x)*
    factor   := ('-' | '+') factor | base ('^' integer)?
    base     := rational | 'x' | '(' expr ')'
    rational := integer ('/' positive-integer)?

``^`` binds tighter than unary minus, so ``-x^2`` is ``-(x^2)``.  A ``*``
may be omitted between a numeric coefficient and ``x`` (``3x^2``).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZeroFunction, ExpressionSyntaxError
from .functions import RationalFunction, laurent_of  # noqa: F401  (re-exported)
from .poly import Poly

_SINGLE = set("+-*/^()")


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch == "x":
            tokens.append(("x", None, i))
            i += 1
        elif ch in _SINGLE:
            tokens.append((ch, None, i))
            i += 1
        else:
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, k=0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise ExpressionSyntaxError(f"expected {kind!r}, found {self._describe(tok)}", tok[2])
        self.i += 1
        return tok

    @staticmethod
    def _describe(tok):
        return "end of input" if tok[0] == "end" else repr(tok[0] if tok[1] is None else str(tok[1]))

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExpressionSyntaxError(f"unexpected {self._describe(tok)}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in "+-":
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value, numeric = self.factor()
        while True:
            kind = self.peek()[0]
            if kind in ("*", "/"):
                tok = self.take(kind)
                rhs, numeric = self.factor()
                if kind == "*":
                    value = value * rhs
                else:
                    if rhs.num.is_zero():
                        raise DivisionByZeroFunction(f"division by the zero function at position {tok[2]}")
                    value = value / rhs
            elif kind == "x" and numeric:
                rhs, numeric = self.factor()
                value = value * rhs
            else:
                return value

    def factor(self):
        kind = self.peek()[0]
        if kind in ("-", "+"):
            self.take(kind)
            value, numeric = self.factor()
            return (-value if kind == "-" else value), numeric
        value, numeric = self.base()
        if self.peek()[0] == "^":
            self.take("^")
            tok = self.peek()
            if tok[0] != "int":
                raise ExpressionSyntaxError("exponent must be a non-negative integer", tok[2])
            self.take("int")
            value = value ** tok[1]
        return value, numeric

    def base(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take("int")
            value = Fraction(tok[1])
            if self.peek()[0] == "/" and self.peek(1)[0] == "int":
                self.take("/")
                den = self.take("int")
                if den[1] == 0:
                    raise ExpressionSyntaxError("zero denominator in rational literal", den[2])
                value = value / den[1]
            return RationalFunction.const(value), True
        if tok[0] == "x":
            self.take("x")
            return RationalFunction.x(), False
        if tok[0] == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value, False
        raise ExpressionSyntaxError(f"unexpected {self._describe(tok)}", tok[2])


def parse_function(text):
    """Parse an expression in x into a canonical RationalFunction."""
    return _Parser(text).parse()


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _format_poly(p):
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            xs = "x" if k == 1 else f"x^{k}"
            body = xs if mag == 1 else f"{format_rational(mag)}*{xs}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _term_count(p):
    return sum(1 for c in p.coeffs if c)


def format_function(f):
    """Print f in the grammar accepted by parse_function (round-trips exactly)."""
    num = _format_poly(f.num)
    if f.den.degree == 0:
        return num
    if _term_count(f.num) > 1:
        num = f"({num})"
    den = _format_poly(f.den)
    if _term_count(f.den) > 1:
        den = f"({den})"
    return f"{num}/{den}"


__all__ = ["parse_function", "format_function", "format_rational", "laurent_of", "Poly"]
