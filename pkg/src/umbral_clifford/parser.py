"""Text form of Clifford polynomials.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | factor
    factor := atom ('^' nat)?
    atom   := rational | 'x' nat | 'e' nat+ | '(' expr ')'

``e12`` is shorthand for ``e1*e2`` (digits strictly increasing, so this form
only names indices 1..9); ``x12`` is the single variable ``x_12``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from gmpy2 import mpq

from .errors import IndexOutOfRange, ParseError
from .poly import CliffordPolynomial, format_rational


@dataclass(frozen=True)
class Num:
    value: object
    pos: int = 0


@dataclass(frozen=True)
class Var:
    index: int
    pos: int = 0


@dataclass(frozen=True)
class Unit:
    indices: tuple[int, ...]
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: int


PolyExpr = Union[Num, Var, Unit, Neg, BinOp, Pow]

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+(?:\s*/\s*\d+)?)|(?P<var>x\d+)|(?P<unit>e\d+)|(?P<op>[-+*^()]))"
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            while text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> PolyExpr:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                node = BinOp(val, node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                node = BinOp("*", node, self.unary())
            else:
                return node

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return Neg(inner) if val == "-" else inner
        return self.factor()

    def factor(self):
        node = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "rat" or "/" in val:
                raise ParseError("exponent must be a non-negative integer", pos)
            node = Pow(node, int(val))
        return node

    def atom(self):
        kind, val, pos = self.take()
        if kind == "rat":
            if "/" in val:
                p, q = (s.strip() for s in val.split("/"))
                if int(q) == 0:
                    raise ParseError("zero denominator", pos)
                return Num(mpq(int(p), int(q)), pos)
            return Num(mpq(int(val)), pos)
        if kind == "var":
            return Var(int(val[1:]), pos)
        if kind == "unit":
            digits = val[1:]
            if len(digits) == 1:
                return Unit((int(digits),), pos)
            idx = tuple(int(d) for d in digits)
            if any(a >= b for a, b in zip(idx, idx[1:])) or idx[0] == 0:
                raise ParseError(f"compact blade {val!r} needs strictly increasing nonzero digits", pos)
            return Unit(idx, pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected token {val or 'end of input'!r}", pos)


def parse_expression(text: str) -> PolyExpr:
    return _Parser(text).parse()


def elaborate(node: PolyExpr, n: int) -> CliffordPolynomial:
    if isinstance(node, Num):
        return CliffordPolynomial.constant(n, node.value)
    if isinstance(node, Var):
        if not 1 <= node.index <= n:
            raise IndexOutOfRange(f"variable x{node.index} outside 1..{n} (at position {node.pos})")
        return CliffordPolynomial.variable(n, node.index)
    if isinstance(node, Unit):
        out = CliffordPolynomial.constant(n, 1)
        for i in node.indices:
            if not 1 <= i <= n:
                raise IndexOutOfRange(f"unit e{i} outside 1..{n} (at position {node.pos})")
            out = out * CliffordPolynomial.unit(n, i)
        return out
    if isinstance(node, Neg):
        return -elaborate(node.operand, n)
    if isinstance(node, Pow):
        return elaborate(node.base, n) ** node.exponent
    left, right = elaborate(node.left, n), elaborate(node.right, n)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def parse_polynomial(text: str, n: int) -> CliffordPolynomial:
    """Parse ``text`` into a canonical ``CliffordPolynomial`` in ``n`` variables."""
    return elaborate(parse_expression(text), n)


def format_polynomial(f: CliffordPolynomial) -> str:
    """Inverse of :func:`parse_polynomial`: ``"x1^2 - 1/2*e1*e2"``."""
    pieces = []
    for alpha, blade, c in f.terms():
        factors = []
        for j, a in enumerate(alpha, start=1):
            if a == 1:
                factors.append(f"x{j}")
            elif a > 1:
                factors.append(f"x{j}^{a}")
        factors.extend(f"e{i}" for i in blade.indices)
        mag = abs(c)
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = format_rational(mag) + "*" + "*".join(factors)
        pieces.append((c < 0, body))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
