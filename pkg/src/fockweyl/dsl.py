"""Text front end for Weyl-algebra operators and polynomials.

Grammar (whitespace is insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)*
    atom   := NUMBER | 'i' | 'z'INT | 'd'INT | '(' expr ')'
    NUMBER := INT ['/' INT]

``z3`` is multiplication by z_3 and ``d3`` is d/dz_3.  Products are
normal ordered as they are parsed, so ``d1*z1`` reads back as ``1 + z1*d1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from .fock import FockPoly
from .poly import DimensionError
from .scalar import GaussianRational
from .weyl import SymbolPoly, WeylOp, multiply


class DSLSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class Token(NamedTuple):
    kind: str
    value: str
    pos: int

    def show(self) -> str:
        if self.kind == "end":
            return "end of input"
        return self.kind + self.value if self.kind in ("z", "d") else self.value


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[zd])(?P<idx>\d+)|(?P<i>i)"
                       r"|(?P<op>[-+*^()]))")


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise DSLSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
        if m.group("num"):
            tokens.append(Token("num", m.group("num"), m.start("num")))
        elif m.group("var"):
            tokens.append(Token(m.group("var"), m.group("idx"), m.start("var")))
        elif m.group("i"):
            tokens.append(Token("i", "i", m.start("i")))
        else:
            tokens.append(Token(m.group("op"), m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def infer_dimension(text: str) -> int:
    """Largest variable index mentioned in the text (at least 1)."""
    idx = [int(t.value) for t in tokenize(text) if t.kind in ("z", "d")]
    return max(idx, default=1)


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        return DSLSyntaxError(msg, self.text, tok.pos)

    def eat(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            want = "a number" if kind == "num" else repr(kind)
            raise self.error(f"expected {want}, found {tok.show()!r}")
        self.i += 1
        return tok

    def parse(self) -> WeylOp:
        result = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.show()!r}")
        return result

    def expr(self) -> WeylOp:
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.eat(self.tok.kind).kind == "-" else 1
        acc = self.term().scale(sign)
        while self.tok.kind in ("+", "-"):
            op = self.eat(self.tok.kind).kind
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> WeylOp:
        acc = self.factor()
        while self.tok.kind == "*":
            self.eat("*")
            acc = multiply(acc, self.factor())
        return acc

    def factor(self) -> WeylOp:
        base = self.atom()
        while self.tok.kind == "^":
            self.eat("^")
            tok = self.eat("num")
            if "/" in tok.value:
                raise self.error("exponent must be a nonnegative integer", tok)
            base = base ** int(tok.value)
        return base

    def atom(self) -> WeylOp:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return WeylOp.identity(self.n, Fraction(tok.value))
        if tok.kind == "i":
            self.i += 1
            return WeylOp.identity(self.n, GaussianRational(0, 1))
        if tok.kind in ("z", "d"):
            self.i += 1
            j = int(tok.value)
            if j < 1:
                raise self.error("variable indices start at 1", tok)
            if j > self.n:
                raise DimensionError(
                    f"variable {tok.kind}{j} at position {tok.pos} exceeds dimension n={self.n}")
            return WeylOp.z(self.n, j) if tok.kind == "z" else WeylOp.d(self.n, j)
        if tok.kind == "(":
            self.eat("(")
            inner = self.expr()
            self.eat(")")
            return inner
        raise self.error(f"unexpected {tok.show()!r}")


def parse_operator(text: str, n: int = None) -> WeylOp:
    """Parse DSL text into a normal-ordered operator.

    ``n`` defaults to the largest variable index in the text.
    """
    if n is None:
        n = infer_dimension(text)
    return _Parser(text, n).parse()


def parse_poly(text: str, n: int = None) -> FockPoly:
    """Parse a polynomial in z (no derivatives allowed)."""
    op = parse_operator(text, n)
    if not op.is_mult_only():
        raise ValueError(f"{text!r} contains derivatives; expected a polynomial in z")
    return op.to_poly()


def parse_symbol(text: str, n: int = None) -> SymbolPoly:
    """Parse a constant-coefficient differential operator such as ``d1^2 + d2``."""
    op = parse_operator(text, n)
    if not op.is_diff_only():
        raise ValueError(f"{text!r} has variable coefficients; expected a polynomial in d")
    return op.to_symbol()


def parse_family(text: str, n: int = None) -> List[SymbolPoly]:
    """Semicolon-separated symbols, e.g. ``"d1*d2; d1^2 + d2^2"``."""
    parts = [p for p in text.split(";")]
    inferred = max(len(parts), max(infer_dimension(p) for p in parts))
    if n is None:
        n = inferred
    elif inferred > n:
        raise DimensionError(f"family {text!r} needs n >= {inferred}, got n={n}")
    if len(parts) != n:
        raise DimensionError(f"family has {len(parts)} operators but n={n}")
    return [parse_symbol(p, n) if p.strip() else SymbolPoly(n) for p in parts]
