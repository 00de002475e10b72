"""Recursive-descent parser for rational expressions.

Grammar (``^`` is right associative and binds tighter than unary minus)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom (("^" | "**") exponent)*
    exponent := "-"? INTEGER
    atom   := INTEGER | NAME | "(" expr ")"

Juxtaposition is rejected: ``2s`` must be written ``2*s``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .polycore import MPoly, RatFn

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()])"
)


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.column = col


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, allowed):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.allowed = None if allowed is None else set(allowed)

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(msg, self.text, tok.pos)

    def take(self, *texts):
        if self.tok.kind == "op" and self.tok.text in texts:
            tok = self.tok
            self.i += 1
            return tok
        return None

    def parse(self) -> RatFn:
        if self.tok.kind == "end":
            self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return value

    def expr(self) -> RatFn:
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RatFn:
        value = self.unary()
        while True:
            if self.take("*"):
                value = value * self.unary()
            elif tok := self.take("/"):
                rhs = self.unary()
                if not rhs:
                    self.error("division by zero", tok)
                value = value / rhs
            else:
                if self.tok.kind in ("num", "name") or (self.tok.kind == "op" and self.tok.text == "("):
                    self.error("missing operator (write '*' explicitly)")
                return value

    def unary(self) -> RatFn:
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def power(self) -> RatFn:
        base = self.atom()
        tok = self.take("^", "**")
        if not tok:
            return base
        exps = [self.exponent()]
        while self.take("^", "**"):
            exps.append(self.exponent())
        n = exps.pop()
        while exps:
            e = exps.pop()
            if n < 0:
                self.error("exponent must be an integer literal", tok)
            n = e**n
        if n < 0 and not base:
            self.error("division by zero", tok)
        return base**n

    def exponent(self) -> int:
        sign = -1 if self.take("-") else 1
        if self.tok.kind != "num":
            self.error("exponent must be an integer literal")
        n = sign * int(self.tok.text)
        self.i += 1
        return n

    def atom(self) -> RatFn:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return RatFn(int(tok.text))
        if tok.kind == "name":
            if self.allowed is not None and tok.text not in self.allowed:
                self.error(f"unknown variable {tok.text!r}")
            self.i += 1
            return RatFn(MPoly.var(tok.text))
        if self.take("("):
            value = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return value
        if tok.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {tok.text!r}")


def parse_expr(text: str, allowed=None) -> RatFn:
    """Parse ``text`` into an exact :class:`RatFn`.

    ``allowed`` restricts the variable names; ``None`` accepts any name.
    """
    return _Parser(text, allowed).parse()


def parse_poly(text: str, allowed=None) -> MPoly:
    f = parse_expr(text, allowed)
    if not f.is_polynomial():
        raise ParseError(f"expected a polynomial, got {f}", text, 0)
    return f.as_poly()
