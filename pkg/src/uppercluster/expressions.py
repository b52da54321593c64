"""Expression grammar for Laurent polynomials, with a deterministic printer.

Grammar (standard precedence, tightest first: ^  unary-  *  binary +/-):

    expression :=  term (('+' | '-') term)*
    term       :=  factor ('*' factor)*        -- explicit '*' required
    factor     :=  '-' factor | atom ['^' exponent]
    atom       :=  INTEGER | NAME | '(' expression ')'
    exponent   :=  ['-'] INTEGER

Division is rejected; negative powers are the only way to denominators and
are allowed exactly on single-term bases (variables, integer literals, and
parenthesized monomials).  The printer emits one Laurent monomial per term
with combined exponents, so parse(print(p)) == p.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import (
    Exponent,
    LaurentPolynomial,
    Polynomial,
    VariableContext,
    laurent_normalize,
)


class ExpressionError(ValueError):
    """Syntax or name error in the expression grammar, with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ExpressionError(f"unexpected character {text[pos:].strip()[0]!r}",
                                      pos)
            break
        if m.group(1):
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, context: VariableContext):
        self.tokens = _tokenize(text)
        self.context = context
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ExpressionError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> LaurentPolynomial:
        value = self.expression()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected trailing {val!r}", pos)
        return value

    def expression(self) -> LaurentPolynomial:
        value = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self) -> LaurentPolynomial:
        value = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = value * self.factor()
            else:
                return value

    def factor(self) -> LaurentPolynomial:
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self) -> LaurentPolynomial:
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            exponent, epos = self.exponent()
            if exponent < 0 and not base.numerator.is_monomial():
                raise ExpressionError(
                    "negative exponents need a variable or parenthesized monomial base",
                    epos)
            return base ** exponent
        return base

    def exponent(self) -> tuple[int, int]:
        kind, val, pos = self.take()
        sign = 1
        if kind == "op" and val == "-":
            sign = -1
            kind, val, pos = self.take()
        if kind != "int":
            raise ExpressionError("exponent must be an integer", pos)
        return sign * int(val), pos

    def atom(self) -> LaurentPolynomial:
        kind, val, pos = self.take()
        if kind == "int":
            return LaurentPolynomial.from_polynomial(
                Polynomial.constant(self.context, int(val)))
        if kind == "name":
            try:
                return LaurentPolynomial.variable(self.context, val)
            except KeyError:
                raise ExpressionError(f"unknown variable {val!r}", pos) from None
        if kind == "op" and val == "(":
            inner = self.expression()
            self.expect_op(")")
            return inner
        raise ExpressionError(f"expected a value, found {val or 'end of input'!r}", pos)


def parse_expression(text: str, context: VariableContext) -> LaurentPolynomial:
    """Parse a grammar string into an exact Laurent polynomial."""
    return _Parser(text, context).parse()


def parse_relation(text: str, context: VariableContext) -> Polynomial:
    """Parse a relation: either a bare expression or 'lhs = rhs'.

    The result is the polynomial lhs - rhs, which must be denominator-free.
    """
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        value = parse_expression(lhs, context) - parse_expression(rhs, context)
    else:
        value = parse_expression(text, context)
    if not value.is_polynomial():
        raise ExpressionError("relation is not denominator-free", 0)
    return value.numerator


def _laurent_terms(p: LaurentPolynomial) -> list[tuple[tuple[int, ...], Fraction]]:
    den = p.denominator
    return [(tuple(a - b for a, b in zip(exps, den)), c)
            for exps, c in p.numerator.terms.items()]


def _term_sort_key(exps: tuple[int, ...]) -> tuple[int, ...]:
    return (sum(exps), *(-e for e in reversed(exps)))


def format_laurent(p: LaurentPolynomial) -> str:
    """Deterministic grammar string; round-trips through parse_expression."""
    names = p.context.names
    terms = _laurent_terms(p)
    if not terms:
        return "0"
    terms.sort(key=lambda t: _term_sort_key(t[0]), reverse=True)
    pieces: list[str] = []
    for exps, coeff in terms:
        factors = []
        num, den = coeff.numerator, coeff.denominator
        if abs(num) != 1 or not any(exps):
            factors.append(str(abs(num)))
        if den != 1:
            factors.append(f"{den}^-1")
        for i, e in enumerate(exps):
            if e == 1:
                factors.append(names[i])
            elif e:
                factors.append(f"{names[i]}^{e}")
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if num >= 0 else "-" + body)
        else:
            pieces.append(("+ " if num >= 0 else "- ") + body)
    return " ".join(pieces)


def format_polynomial(p: Polynomial) -> str:
    return format_laurent(LaurentPolynomial.from_polynomial(p))
