"""Independent reference implementations used to freeze and cross-check values.

Nothing here imports the package's operator code: blades are multiplied by
sorting index lists, and the umbral operators are computed with sympy by
direct substitution (shifts) and linear solving (Pincherle inverses).
"""
from __future__ import annotations

import sympy as sp

from umbral_clifford.poly import CliffordPolynomial


def blade_mul(a, b):
    """Product of two generator words: bubble-sort with a sign flip per swap,
    then contract equal neighbours with e_i e_i = -1."""
    word = list(a) + list(b)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
            elif word[i] == word[i + 1]:
                del word[i:i + 2]
                sign = -sign
                changed = True
                continue
            i += 1
    return sign, tuple(word)


def symbols(n):
    return sp.symbols(f"x1:{n + 1}")


def to_sym(f: CliffordPolynomial) -> dict:
    """``{blade_tuple: sympy expression}``."""
    xs = symbols(f.n)
    out: dict = {}
    for alpha, blade, c in f.terms():
        mono = sp.Rational(int(c.numerator), int(c.denominator))
        for x, a in zip(xs, alpha):
            mono *= x ** a
        out[blade.indices] = out.get(blade.indices, 0) + mono
    return {k: sp.expand(v) for k, v in out.items() if sp.expand(v) != 0}


def sym_equal(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(sp.expand(a.get(k, 0) - b.get(k, 0)) == 0 for k in keys)


def _clean(d):
    return {k: sp.expand(v) for k, v in d.items() if sp.expand(v) != 0}


class SymCalculus:
    """Umbral operators by direct symbolic computation."""

    def __init__(self, n, family="continuum", h=None, variant="plain"):
        self.n = n
        self.family = family
        self.h = sp.Rational(str(h)) if h is not None else None
        self.variant = "plain" if family == "continuum" else variant
        self.xs = symbols(n)

    def delta(self, j, e):
        x, h = self.xs[j - 1], self.h
        if self.family == "continuum":
            return sp.expand(sp.diff(e, x))
        if self.family == "forward":
            return sp.expand((e.subs(x, x + h) - e) / h)
        return sp.expand((e.subs(x, x + h) - e.subs(x, x - h)) / (2 * h))

    def pincherle_inverse(self, j, e):
        x, h = self.xs[j - 1], self.h
        if self.family == "continuum":
            return sp.expand(e)
        if self.family == "forward":
            return sp.expand(e.subs(x, x - h))
        # central: solve (g(x+h) + g(x-h))/2 = e for polynomial g in x
        e = sp.expand(e)
        if e == 0:
            return e
        d = sp.Poly(e, x).degree()
        cs = sp.symbols(f"c0:{d + 1}")
        g = sum(c * x ** k for k, c in enumerate(cs))
        eq = sp.Poly(sp.expand((g.subs(x, x + h) + g.subs(x, x - h)) / 2 - e), x)
        sol = sp.solve(eq.all_coeffs(), cs, dict=True)[0]
        return sp.expand(g.subs(sol))

    def raising(self, j, e):
        x = self.xs[j - 1]
        plain = x * self.pincherle_inverse(j, e)
        if self.variant == "plain":
            return sp.expand(plain)
        return sp.expand((plain + self.pincherle_inverse(j, x * e)) / 2)

    def _clifford(self, f: dict, axis_op) -> dict:
        out: dict = {}
        for j in range(1, self.n + 1):
            for blade, e in f.items():
                img = axis_op(j, e)
                if img == 0:
                    continue
                s, b = blade_mul((j,), blade)
                out[b] = out.get(b, 0) + s * img
        return _clean(out)

    def dirac(self, f):
        return self._clifford(f, self.delta)

    def vector(self, f):
        return self._clifford(f, self.raising)

    def euler(self, f):
        out: dict = {}
        for j in range(1, self.n + 1):
            for blade, e in f.items():
                out[blade] = out.get(blade, 0) + self.raising(j, self.delta(j, e))
        return _clean(out)

    def laplacian(self, f):
        return _clean({b: sum(self.delta(j, self.delta(j, e)) for j in range(1, self.n + 1)) for b, e in f.items()})

    def basic(self, alpha):
        e = sp.Integer(1)
        for j, a in enumerate(alpha, start=1):
            for _ in range(a):
                e = self.raising(j, e)
        return sp.expand(e)
