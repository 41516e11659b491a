"""Expression parser for polynomial text.

Grammar: integer and a/b rational literals, declared variable names,
operators + - * / ^ with ^ binding tightest, then * and /, then + and -;
parentheses and unary minus; multiplication is always explicit.  Division
is only defined between constants (rational literals); exponents are
non-negative integer literals.
"""

from __future__ import annotations

from .errors import ParseError
from .fields import Field, Scalar
from .poly import DEFAULT_VARS, MultiPoly, PolyRing

_OPS = "+-*/^()"


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val, at = self.advance()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}", at)

    def parse(self) -> MultiPoly:
        p = self.expr()
        kind, val, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing {val!r}", at)
        return p

    def expr(self) -> MultiPoly:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> MultiPoly:
        p = self.factor()
        while True:
            kind, val, at = self.peek()
            if kind == "op" and val in "*/":
                self.advance()
                q = self.factor()
                if val == "*":
                    p = p * q
                else:
                    # constant division only: a/b rational literals
                    if not (p.is_constant() and q.is_constant()):
                        raise ParseError("'/' is only defined between constants", at)
                    d = q.constant_value()
                    if not d:
                        raise ParseError("division by zero literal", at)
                    p = p.scale(self.ring.field.inv(d))
            else:
                return p

    def factor(self) -> MultiPoly:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.advance()
            return -self.factor()
        if kind == "op" and val == "+":
            self.advance()
            return self.factor()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            ekind, exp, at = self.advance()
            if ekind != "int":
                raise ParseError("exponent must be a non-negative integer literal", at)
            return base**exp
        return base

    def atom(self) -> MultiPoly:
        kind, val, at = self.advance()
        if kind == "int":
            return self.ring.const(val)
        if kind == "name":
            if val not in self.ring.vars:
                raise ParseError(f"unknown variable {val!r}", at)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected token {val!r}", at)


def parse_poly(text: str, field_or_ring, vars: tuple[str, ...] = DEFAULT_VARS) -> MultiPoly:
    """Parse expression text into the canonical polynomial."""
    if isinstance(field_or_ring, PolyRing):
        ring = field_or_ring
    elif isinstance(field_or_ring, Field):
        ring = PolyRing(field_or_ring, tuple(vars))
    else:
        raise TypeError("parse_poly needs a Field or PolyRing")
    return _Parser(text, ring).parse()


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse a constant expression (used for witness scalars)."""
    p = parse_poly(text, field, vars=())
    return p.constant_value()
