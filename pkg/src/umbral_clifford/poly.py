"""Sparse exact-rational Clifford-valued polynomials, R[x_1..x_n] (x) Cl(0, n).

A polynomial is a finite map ``(exponents, blade_mask) -> coefficient`` with
no zero coefficients stored.  Coefficients are ``gmpy2.mpq`` rationals and
multiply from the left of the blade; variables commute with blades.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

from .clifford import Blade, indices_to_mask, mask_product, mask_to_indices
from .errors import DimensionMismatch, IndexOutOfRange

Rational = type(mpq())
ZERO = mpq(0)
ONE = mpq(1)


def rational(value) -> Rational:
    """Coerce ``int``, ``str`` ("p/q"), ``Fraction`` or ``mpq`` to ``mpq``."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                p, q = text.split("/")
                if int(q) == 0:
                    raise ZeroDivisionError
                return mpq(int(p), int(q))
            return mpq(int(text))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not an exact rational: {value!r}") from None
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(c: Rational) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class CliffordPolynomial:
    """Element of the Clifford-valued polynomial algebra in ``n`` variables.

    Treat instances as immutable; every operation returns a new object.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple[tuple[int, ...], int], object] | None = None):
        if n < 1:
            raise ValueError("dimension n must be >= 1")
        self.n = n
        clean: dict[tuple[tuple[int, ...], int], Rational] = {}
        if terms:
            limit = 1 << n
            for (alpha, mask), c in terms.items():
                alpha = tuple(alpha)
                if len(alpha) != n or any(a < 0 for a in alpha):
                    raise DimensionMismatch(f"bad exponent vector {alpha} for n={n}")
                if not 0 <= mask < limit:
                    raise IndexOutOfRange(f"blade mask {mask} outside Cl(0,{n})")
                c = rational(c)
                if c:
                    clean[(alpha, mask)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "CliffordPolynomial":
        # trusted constructor: keys valid, zero coefficients already removed
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "CliffordPolynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c=1) -> "CliffordPolynomial":
        return cls(n, {((0,) * n, 0): c})

    @classmethod
    def monomial(cls, n: int, alpha: Sequence[int], blade: Blade | Sequence[int] = (), coef=1) -> "CliffordPolynomial":
        if not isinstance(blade, Blade):
            blade = Blade(tuple(blade))
        blade.check(n)
        return cls(n, {(tuple(alpha), blade.mask): coef})

    @classmethod
    def variable(cls, n: int, j: int) -> "CliffordPolynomial":
        """The coordinate ``x_j`` (1-based)."""
        _check_axis(n, j)
        alpha = [0] * n
        alpha[j - 1] = 1
        return cls(n, {(tuple(alpha), 0): 1})

    @classmethod
    def unit(cls, n: int, j: int) -> "CliffordPolynomial":
        """The generator ``e_j`` (1-based)."""
        _check_axis(n, j)
        return cls(n, {((0,) * n, 1 << (j - 1)): 1})

    # -- inspection ---------------------------------------------------
    def items(self):
        """Raw ``((alpha, mask), coef)`` pairs in storage order."""
        return self._terms.items()

    def terms(self) -> Iterator[tuple[tuple[int, ...], Blade, Rational]]:
        """``(alpha, blade, coef)`` triples in canonical order."""
        for (alpha, mask), c in sorted(self._terms.items(), key=_term_key):
            yield alpha, Blade.from_mask(mask), c

    def coefficient(self, alpha: Sequence[int], blade: Blade | Sequence[int] = ()) -> Rational:
        if not isinstance(blade, Blade):
            blade = Blade(tuple(blade))
        return self._terms.get((tuple(alpha), blade.mask), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int | None:
        """Total degree; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(alpha) for alpha, _ in self._terms)

    def is_scalar_valued(self) -> bool:
        return all(mask == 0 for _, mask in self._terms)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "CliffordPolynomial") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, CliffordPolynomial):
            if _is_scalar(other):
                other = CliffordPolynomial.constant(self.n, other)
            else:
                return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return CliffordPolynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordPolynomial._raw(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, CliffordPolynomial):
            if _is_scalar(other):
                other = CliffordPolynomial.constant(self.n, other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "CliffordPolynomial":
        c = rational(c)
        if not c:
            return CliffordPolynomial._raw(self.n, {})
        return CliffordPolynomial._raw(self.n, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordPolynomial):
            return poly_mul(self, other)
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.scale(ONE / rational(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = CliffordPolynomial.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CliffordPolynomial):
            return self.n == other.n and self._terms == other._terms
        if _is_scalar(other):
            return self == CliffordPolynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        return f"CliffordPolynomial(n={self.n}, {self})"

    def __str__(self):
        from .parser import format_polynomial

        return format_polynomial(self)


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Rational, Fraction)) and not isinstance(x, bool)


def _check_axis(n: int, j: int) -> None:
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"axis {j} outside 1..{n}")


def _term_key(item):
    (alpha, mask), _ = item
    # graded lexicographic: degree ascending, then x1 before x2 within a degree
    return (sum(alpha), tuple(-a for a in alpha), mask_to_indices(mask))


def poly_add(f: CliffordPolynomial, g: CliffordPolynomial) -> CliffordPolynomial:
    return f + g


def poly_scale(c, f: CliffordPolynomial) -> CliffordPolynomial:
    return f.scale(c)


def poly_mul(f: CliffordPolynomial, g: CliffordPolynomial) -> CliffordPolynomial:
    """Algebra product; exponents add and blades multiply with sign."""
    f._check(g)
    out: dict = {}
    for (a1, m1), c1 in f._terms.items():
        for (a2, m2), c2 in g._terms.items():
            sign, m = mask_product(m1, m2)
            key = (tuple(x + y for x, y in zip(a1, a2)), m)
            v = out.get(key, ZERO) + (c1 * c2 if sign > 0 else -(c1 * c2))
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return CliffordPolynomial._raw(f.n, out)


def homogeneous_components(f: CliffordPolynomial) -> list[tuple[int, CliffordPolynomial]]:
    """Split ``f`` by total degree; returns ``[(degree, component), ...]`` ascending."""
    parts: dict[int, dict] = {}
    for (alpha, mask), c in f.items():
        parts.setdefault(sum(alpha), {})[(alpha, mask)] = c
    return [(d, CliffordPolynomial._raw(f.n, parts[d])) for d in sorted(parts)]


def poly_eval(f: CliffordPolynomial, point: Sequence) -> dict[Blade, Rational]:
    """Substitute rational values for the variables; returns ``{Blade: value}``."""
    if len(point) != f.n:
        raise DimensionMismatch(f"point has length {len(point)}, expected {f.n}")
    pt = [rational(p) for p in point]
    out: dict[int, Rational] = {}
    for (alpha, mask), c in f.items():
        v = c
        for p, a in zip(pt, alpha):
            if a:
                v = v * p**a
        out[mask] = out.get(mask, ZERO) + v
    return {Blade.from_mask(m): v for m, v in sorted(out.items()) if v}


def from_terms(n: int, triples: Iterable[tuple[Sequence[int], Sequence[int] | Blade, object]]) -> CliffordPolynomial:
    """Build a polynomial from ``(alpha, blade_indices, coef)`` triples (summing repeats)."""
    out = CliffordPolynomial.zero(n)
    for alpha, blade, c in triples:
        out = out + CliffordPolynomial.monomial(n, alpha, blade, c)
    return out


__all__ = [
    "CliffordPolynomial",
    "Rational",
    "rational",
    "format_rational",
    "poly_add",
    "poly_scale",
    "poly_mul",
    "homogeneous_components",
    "poly_eval",
    "from_terms",
    "indices_to_mask",
]
