"""Recursive-descent parser for polynomial vector expressions.

Grammar (whitespace-insensitive)::

    vector := '[' components ']' | components
    components := expr (',' expr)*
    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('-'|'+')* atom ('^' INT)?
    atom   := INT ('/' INT)? | 's' | '(' expr ')'

Implicit multiplication is rejected: write ``2*s``, not ``2s``.  The ``/``
sign is only a fraction-literal separator between integer literals.
"""

from __future__ import annotations

from .fields import QQ
from .poly import Poly, PolyVec


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_CHARS = {"+", "-", "*", "^", "/", "(", ")", ",", "[", "]"}


def _tokenize(text):
    tokens = []  # (kind, value, position)
    i = 0
    size = len(text)
    while i < size:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < size and text[i].isdigit():
                i += 1
            tokens.append(("int", text[start:i], start))
            continue
        if ch.isalpha():
            start = i
            while i < size and text[i].isalnum():
                i += 1
            name = text[start:i]
            if name != "s":
                raise ParseError(f"unknown variable {name!r}; only 's' is recognized", start)
            tokens.append(("var", name, start))
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", size))
    return tokens


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return self.advance()

    def parse_vector(self) -> PolyVec:
        bracketed = self.peek()[0] == "["
        if bracketed:
            self.advance()
        entries = [self.parse_expr()]
        while self.peek()[0] == ",":
            self.advance()
            entries.append(self.parse_expr())
        if bracketed:
            self.expect("]")
        self._finish()
        return PolyVec(self.field, entries, row=True)

    def parse_single(self) -> Poly:
        poly = self.parse_expr()
        self._finish()
        return poly

    def _finish(self):
        tok = self.peek()
        if tok[0] != "end":
            hint = "; write explicit products like 2*s" if tok[0] in ("int", "var", "(") else ""
            raise ParseError(f"unexpected {tok[1]!r}{hint}", tok[2])

    def parse_expr(self) -> Poly:
        kind, value, pos = self.peek()
        if kind in (",", "]", "end"):
            raise ParseError("empty component", pos)
        acc = self.parse_term()
        while True:
            kind = self.peek()[0]
            if kind == "+":
                self.advance()
                acc = acc + self.parse_term()
            elif kind == "-":
                self.advance()
                acc = acc - self.parse_term()
            else:
                return acc

    def parse_term(self) -> Poly:
        acc = self.parse_factor()
        while self.peek()[0] == "*":
            self.advance()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> Poly:
        negate = False
        while self.peek()[0] in ("+", "-"):
            if self.advance()[0] == "-":
                negate = not negate
        base = self.parse_atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            exponent = int(tok[1])
            base = _power(base, exponent)
        return -base if negate else base

    def parse_atom(self) -> Poly:
        kind, value, pos = self.peek()
        if kind == "int":
            self.advance()
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.expect("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", den_tok[2])
                return Poly.constant(self.field, self.field.from_fraction(int(value), den))
            return Poly.constant(self.field, self.field.from_int(int(value)))
        if kind == "var":
            self.advance()
            return Poly.monomial(self.field, 1)
        if kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"expected a number, 's' or '(', found {value!r}", pos)


def _power(base: Poly, exponent: int) -> Poly:
    acc = Poly.one(base.field)
    for _ in range(exponent):
        acc = acc * base
    return acc


def parse_poly(text: str, field=QQ) -> Poly:
    """Parse a single polynomial in s."""
    return _Parser(text, field).parse_single()


def parse_vector(text: str, field=QQ) -> PolyVec:
    """Parse a comma-separated polynomial vector (optionally bracketed)."""
    return _Parser(text, field).parse_vector()
