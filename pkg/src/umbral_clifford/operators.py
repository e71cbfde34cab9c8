"""Composable linear endomorphisms of the polynomial space.

Composition follows the usual convention ``(A @ B)(f) == A(B(f))``: ``B`` acts
first.  ``*`` is reserved for scalar multiples.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .poly import CliffordPolynomial, Rational, format_rational, rational

PolyMap = Callable[[CliffordPolynomial], CliffordPolynomial]


def _is_scalar(x) -> bool:
    from fractions import Fraction

    return isinstance(x, (int, Rational, Fraction)) and not isinstance(x, bool)


class LinearOperator:
    """A named, R-linear, dimension-preserving map on ``CliffordPolynomial``."""

    __slots__ = ("name", "_fn")

    def __init__(self, name: str, fn: PolyMap):
        self.name = name
        self._fn = fn

    def __call__(self, f: CliffordPolynomial) -> CliffordPolynomial:
        if not f:
            return f
        return self._fn(f)

    def apply(self, f: CliffordPolynomial) -> CliffordPolynomial:
        return self(f)

    def __repr__(self):
        return f"LinearOperator({self.name})"

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        if not isinstance(other, LinearOperator):
            return NotImplemented
        a, b = self, other
        return LinearOperator(f"{a.name}∘{b.name}", lambda f: a(b(f)))

    def __add__(self, other):
        if _is_scalar(other):
            other = scalar_op(other)
        if not isinstance(other, LinearOperator):
            return NotImplemented
        a, b = self, other
        return LinearOperator(f"({a.name} + {b.name})", lambda f: a(f) + b(f))

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            other = scalar_op(other)
        if not isinstance(other, LinearOperator):
            return NotImplemented
        a, b = self, other
        return LinearOperator(f"({a.name} - {b.name})", lambda f: a(f) - b(f))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        a = self
        return LinearOperator(f"-{a.name}", lambda f: -a(f))

    def __mul__(self, c):
        if not _is_scalar(c):
            return NotImplemented
        c = rational(c)
        a = self
        return LinearOperator(f"{format_rational(c)}·{a.name}", lambda f: a(f).scale(c))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LinearOperator":
        if not isinstance(k, int) or k < 0:
            raise ValueError("operator power must be a non-negative integer")
        a = self

        def run(f):
            for _ in range(k):
                if not f:
                    break
                f = a(f)
            return f

        return LinearOperator(f"{a.name}^{k}", run)


IDENTITY = LinearOperator("id", lambda f: f)
ZERO_OP = LinearOperator("0", lambda f: CliffordPolynomial.zero(f.n))


def scalar_op(c) -> LinearOperator:
    c = rational(c)
    if c == 1:
        return IDENTITY
    return LinearOperator(f"{format_rational(c)}·id", lambda f: f.scale(c))


@dataclass(frozen=True)
class OperatorBracket:
    """``[A, B] = AB - BA`` (kind ``commutator``) or ``{A, B} = AB + BA``."""

    kind: str
    left: LinearOperator
    right: LinearOperator

    def __post_init__(self):
        if self.kind not in ("commutator", "anticommutator"):
            raise ValueError(f"unknown bracket kind {self.kind!r}")

    def as_operator(self) -> LinearOperator:
        a, b = self.left, self.right
        if self.kind == "commutator":
            return LinearOperator(f"[{a.name}, {b.name}]", lambda f: a(b(f)) - b(a(f)))
        return LinearOperator(f"{{{a.name}, {b.name}}}", lambda f: a(b(f)) + b(a(f)))


def bracket_apply(b: OperatorBracket, f: CliffordPolynomial) -> CliffordPolynomial:
    return b.as_operator()(f)


def commutator(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return OperatorBracket("commutator", a, b).as_operator()


def anticommutator(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return OperatorBracket("anticommutator", a, b).as_operator()
