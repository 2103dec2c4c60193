"""Textual polynomial grammar shared by ideal files and the CLI.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] atom ['^' INT]
    atom   := INT | 'tau' | NAME | '(' expr ')'

Printing emits the canonical form: terms descending in the term order,
coefficient 1 omitted, symmetric residues, compound coefficients in
parentheses.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING, List, Optional, Tuple

from src.models.errors import ParseError

if TYPE_CHECKING:
    from src.models.polynomial import Polynomial
    from src.models.ring import RingContext

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    """Split text into (kind, value, column) tokens."""
    tokens: List[Token] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break
        number, name, symbol = match.groups()
        column = match.start(match.lastindex) + 1
        if number is not None:
            tokens.append(('int', number, column))
        elif name is not None:
            tokens.append(('name', name, column))
        elif symbol in '+-*^()':
            tokens.append(('op', symbol, column))
        else:
            raise ParseError(f"Unexpected character {symbol!r} at column {column}")
        pos = match.end()
    return tokens


class _Parser:
    """Recursive-descent evaluator producing a Polynomial."""

    def __init__(self, text: str, ring: 'RingContext'):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError(f"Unexpected end of input in {self.text!r}")
        self.pos += 1
        return token

    def expect(self, symbol: str) -> None:
        kind, value, column = self.take()
        if kind != 'op' or value != symbol:
            raise ParseError(f"Expected {symbol!r} at column {column}, got {value!r}")

    def at_op(self, *symbols: str) -> bool:
        token = self.peek()
        return token is not None and token[0] == 'op' and token[1] in symbols

    def parse(self) -> 'Polynomial':
        if not self.tokens:
            raise ParseError("Empty polynomial")
        result = self.expr()
        token = self.peek()
        if token is not None:
            raise ParseError(f"Unexpected {token[1]!r} at column {token[2]}")
        return result

    def expr(self) -> 'Polynomial':
        negate = False
        if self.at_op('+', '-'):
            negate = self.take()[1] == '-'
        result = self.term()
        if negate:
            result = -result
        while self.at_op('+', '-'):
            op = self.take()[1]
            right = self.term()
            result = result + right if op == '+' else result - right
        return result

    def term(self) -> 'Polynomial':
        result = self.factor()
        while self.at_op('*'):
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> 'Polynomial':
        if self.at_op('-'):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.at_op('^'):
            self.take()
            kind, value, column = self.take()
            if kind != 'int':
                raise ParseError(f"Exponent must be a nonnegative integer at column {column}")
            base = base ** int(value)
        return base

    def atom(self) -> 'Polynomial':
        from src.models.polynomial import Polynomial

        kind, value, column = self.take()
        if kind == 'int':
            return Polynomial.constant(self.ring, int(value))
        if kind == 'name':
            if value == 'tau':
                return Polynomial.constant(self.ring, self.ring.field.tau())
            if value not in self.ring.variables:
                raise ParseError(
                    f"Unknown variable {value!r} at column {column} "
                    f"(ring has {', '.join(self.ring.variables)})"
                )
            return Polynomial.variable(self.ring, value)
        if value == '(':
            inner = self.expr()
            self.expect(')')
            return inner
        raise ParseError(f"Unexpected {value!r} at column {column}")


def parse_polynomial(text: str, ring: 'RingContext') -> 'Polynomial':
    """Parse polynomial text in the given ring.

    Raises:
        ParseError: malformed text or unknown variable
        ExtensionRequired: ``tau`` used over a prime field where it has no root
    """
    return _Parser(text, ring).parse()


def format_term(coefficient, monomial_text: str) -> str:
    """Text of one term; the sign is part of the returned text."""
    text = str(coefficient)
    if monomial_text == '1':
        return text
    if text == '1':
        return monomial_text
    if text == '-1':
        return f"-{monomial_text}"
    if coefficient.a and coefficient.b:
        return f"({text})*{monomial_text}"
    return f"{text}*{monomial_text}"


def format_polynomial(poly: 'Polynomial') -> str:
    """Canonical text of a polynomial (``0`` for zero)."""
    ring = poly.ring
    field_spec = ring.field
    parts: List[str] = []
    for code, c in poly.term_codes():
        term = format_term(field_spec.element_from_code(c), ring.format_monomial(code))
        if not parts:
            parts.append(term)
        elif term.startswith('-'):
            parts.append(f" - {term[1:]}")
        else:
            parts.append(f" + {term}")
    return "".join(parts) if parts else "0"
