"""Umbral calculus on polynomials: shifts, delta operators, Pincherle
derivatives, raising operators, basic sequences and the Sheffer map.

Every per-axis operator here acts on a single variable ``x_j`` and leaves the
other variables and the blade alone.  Such an operator is fully described by
its action on univariate monomials ``x^m``; those images are computed once per
calculus and cached, then spliced into multivariate terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .errors import IndexOutOfRange, PreconditionError
from .operators import IDENTITY, LinearOperator
from .poly import ONE, ZERO, CliffordPolynomial, Rational, format_rational, rational

FAMILIES = ("continuum", "forward", "central")
VARIANTS = ("plain", "symmetrized")

UniPoly = dict  # {exponent: coefficient}


@dataclass(frozen=True)
class CalculusConfig:
    """Dimension, delta-operator family, lattice step and raising variant.

    The continuum family ignores ``h`` and always uses the plain raising
    operator (its Pincherle derivative is the identity, so both variants agree).
    """

    n: int
    family: str = "continuum"
    h: Rational | None = None
    raising_variant: str = "plain"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.raising_variant not in VARIANTS:
            raise ValueError(f"unknown raising variant {self.raising_variant!r}")
        if self.family == "continuum":
            object.__setattr__(self, "h", None)
            object.__setattr__(self, "raising_variant", "plain")
        else:
            if self.h is None:
                raise ValueError(f"family {self.family!r} needs a step h")
            h = rational(self.h)
            if h == 0:
                raise ValueError("step h must be nonzero")
            object.__setattr__(self, "h", h)

    @property
    def key(self) -> tuple:
        return (self.family, self.h, self.raising_variant)

    def with_n(self, n: int) -> "CalculusConfig":
        return CalculusConfig(n, self.family, self.h, self.raising_variant)

    def label(self) -> str:
        if self.family == "continuum":
            return f"continuum n={self.n}"
        return f"{self.family} h={format_rational(self.h)} {self.raising_variant} n={self.n}"


def _check_axis(cfg_or_n, j: int) -> None:
    n = cfg_or_n if isinstance(cfg_or_n, int) else cfg_or_n.n
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"axis {j} outside 1..{n}")


# -- univariate helpers --------------------------------------------------

def _u_add(p: UniPoly, q: UniPoly, c=ONE) -> UniPoly:
    out = dict(p)
    for e, v in q.items():
        s = out.get(e, ZERO) + c * v
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _u_scale(p: UniPoly, c) -> UniPoly:
    return {e: c * v for e, v in p.items()} if c else {}


def _u_shift_monomial(m: int, t) -> UniPoly:
    # (x + t)^m
    out = {}
    for i in range(m + 1):
        v = comb(m, i) * t ** (m - i)
        if v:
            out[i] = rational(v)
    return out


def _u_apply(table: Callable[[int], UniPoly], p: UniPoly) -> UniPoly:
    out: UniPoly = {}
    for e, c in p.items():
        out = _u_add(out, table(e), c)
    return out


def _as_unipoly(f: CliffordPolynomial) -> UniPoly:
    return {alpha[0]: c for (alpha, _), c in f.items()}


def _from_unipoly(p: UniPoly) -> CliffordPolynomial:
    return CliffordPolynomial._raw(1, {((e,), 0): c for e, c in p.items() if c})


def axis_apply(f: CliffordPolynomial, j: int, table: Callable[[int], UniPoly]) -> CliffordPolynomial:
    """Apply an operator acting only on ``x_j`` given by ``x_j^m -> table(m)``."""
    i = j - 1
    out: dict = {}
    get = out.get
    for (alpha, mask), c in f.items():
        img = table(alpha[i])
        if not img:
            continue
        head, tail = alpha[:i], alpha[i + 1:]
        for e, v in img.items():
            key = (head + (e,) + tail, mask)
            s = get(key, ZERO) + c * v
            if s:
                out[key] = s
            else:
                del out[key]
    return CliffordPolynomial._raw(f.n, out)


# -- cached univariate action tables -------------------------------------

@lru_cache(maxsize=None)
def _shift_table(t: Rational, m: int) -> UniPoly:
    return _u_shift_monomial(m, t)


@lru_cache(maxsize=None)
def _delta_table(key: tuple, m: int) -> UniPoly:
    family, h, _ = key
    if family == "continuum":
        return {m - 1: rational(m)} if m else {}
    xm = {m: ONE}
    if family == "forward":
        diff = _u_add(_shift_table(h, m), xm, -ONE)
        return _u_scale(diff, ONE / h)
    diff = _u_add(_shift_table(h, m), _shift_table(-h, m), -ONE)
    return _u_scale(diff, ONE / (2 * h))


@lru_cache(maxsize=None)
def _pincherle_table(key: tuple, m: int) -> UniPoly:
    # O(x * x^m) - x * O(x^m)
    x_times = {e + 1: v for e, v in _delta_table(key, m).items()}
    return _u_add(_delta_table(key, m + 1), x_times, -ONE)


@lru_cache(maxsize=None)
def _pincherle_inverse_table(key: tuple, m: int) -> UniPoly:
    op = LinearOperator("O'", lambda f: axis_apply(f, 1, lambda e: _pincherle_table(key, e)))
    g = invert_degree_graded(op, _from_unipoly({m: ONE}))
    return _as_unipoly(g)


@lru_cache(maxsize=None)
def _raising_table(key: tuple, m: int) -> UniPoly:
    inv = _pincherle_inverse_table(key, m)
    x_inv = {e + 1: v for e, v in inv.items()}
    if key[2] == "plain":
        return x_inv
    inv_x = _pincherle_inverse_table(key, m + 1)
    return _u_scale(_u_add(x_inv, inv_x), rational("1/2"))


@lru_cache(maxsize=None)
def _euler_axis_table(key: tuple, m: int) -> UniPoly:
    # x'_j O_j on x_j^m
    return _u_apply(lambda e: _raising_table(key, e), _delta_table(key, m))


@lru_cache(maxsize=None)
def _sheffer_table(key: tuple, m: int) -> UniPoly:
    # univariate basic sequence v_m = (x')^m 1
    if m == 0:
        return {0: ONE}
    return _u_apply(lambda e: _raising_table(key, e), _sheffer_table(key, m - 1))


@lru_cache(maxsize=None)
def _sheffer_inverse_table(key: tuple, m: int) -> UniPoly:
    # triangular solve: v_m = c_m x^m + sum_{i<m} a_i x^i
    v = _sheffer_table(key, m)
    lead = v.get(m, ZERO)
    if not lead or any(e > m for e in v):
        raise PreconditionError(f"basic sequence element of degree {m} is not triangular", v)
    out = {m: ONE}
    for i, a in v.items():
        if i < m:
            out = _u_add(out, _sheffer_inverse_table(key, i), -a)
    return _u_scale(out, ONE / lead)


# -- public operations ----------------------------------------------------

def apply_shift(f: CliffordPolynomial, j: int, t) -> CliffordPolynomial:
    """Substitute ``x_j -> x_j + t``."""
    _check_axis(f.n, j)
    t = rational(t)
    if t == 0:
        return f
    return axis_apply(f, j, lambda m: _shift_table(t, m))


def apply_delta(cfg: CalculusConfig, j: int, f: CliffordPolynomial) -> CliffordPolynomial:
    """Delta operator ``O_j``: derivative, forward or central difference."""
    _check_axis(cfg, j)
    key = cfg.key
    return axis_apply(f, j, lambda m: _delta_table(key, m))


def delta_op(cfg: CalculusConfig, j: int) -> LinearOperator:
    _check_axis(cfg, j)
    return LinearOperator(f"O{j}", lambda f: apply_delta(cfg, j, f))


def multiply_by_variable(f: CliffordPolynomial, j: int) -> CliffordPolynomial:
    i = j - 1
    return CliffordPolynomial._raw(
        f.n, {(alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:], mask): c for (alpha, mask), c in f.items()}
    )


def pincherle_of(cfg: CalculusConfig, j: int) -> LinearOperator:
    """The Pincherle derivative ``O'_j = [O_j, x_j]``, built from its definition."""
    _check_axis(cfg, j)

    def run(f):
        return apply_delta(cfg, j, multiply_by_variable(f, j)) - multiply_by_variable(apply_delta(cfg, j, f), j)

    return LinearOperator(f"O'{j}", run)


def invert_degree_graded(op: LinearOperator, f: CliffordPolynomial) -> CliffordPolynomial:
    """Solve ``op(g) = f`` for ``op = id + N`` with ``N`` strictly degree-lowering.

    Uses the terminating Neumann sum ``g = sum_m (id - op)^m f``.  Raises
    :class:`PreconditionError` if ``(id - op)`` fails to annihilate ``f`` after
    ``deg f + 1`` steps.
    """
    if not f:
        return f
    nil = IDENTITY - op
    term = f
    total = f
    for _ in range(f.degree):
        term = nil(term)
        if not term:
            return total
        total = total + term
    term = nil(term)
    if term:
        raise PreconditionError(
            f"{op.name} is not unitriangular on the degree grading: (id - op)^{f.degree + 1} f != 0", term
        )
    return total


def pincherle_inverse_op(cfg: CalculusConfig, j: int) -> LinearOperator:
    _check_axis(cfg, j)
    key = cfg.key
    return LinearOperator(f"(O'{j})^-1", lambda f: axis_apply(f, j, lambda m: _pincherle_inverse_table(key, m)))


def apply_raising(cfg: CalculusConfig, j: int, f: CliffordPolynomial) -> CliffordPolynomial:
    """Raising operator ``x'_j``: ``x_j (O'_j)^-1`` or its symmetrization."""
    _check_axis(cfg, j)
    key = cfg.key
    return axis_apply(f, j, lambda m: _raising_table(key, m))


def raising_op(cfg: CalculusConfig, j: int) -> LinearOperator:
    _check_axis(cfg, j)
    return LinearOperator(f"x'{j}", lambda f: apply_raising(cfg, j, f))


def basic_sequence(cfg: CalculusConfig, alpha: Sequence[int]) -> CliffordPolynomial:
    """``V_alpha = (x'_1)^a1 ... (x'_n)^an 1``."""
    alpha = tuple(alpha)
    if len(alpha) != cfg.n or any(a < 0 for a in alpha):
        raise ValueError(f"multi-index {alpha} does not fit n={cfg.n}")
    f = CliffordPolynomial.constant(cfg.n, 1)
    for j in range(cfg.n, 0, -1):
        for _ in range(alpha[j - 1]):
            f = apply_raising(cfg, j, f)
    return f


def sheffer_apply(cfg: CalculusConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    """Sheffer map: ``x^alpha e_A -> V_alpha e_A``, extended linearly."""
    key = cfg.key
    if cfg.family == "continuum":
        return f
    for j in range(1, f.n + 1):
        f = axis_apply(f, j, lambda m: _sheffer_table(key, m))
    return f


def sheffer_inverse_apply(cfg: CalculusConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    key = cfg.key
    if cfg.family == "continuum":
        return f
    for j in range(1, f.n + 1):
        f = axis_apply(f, j, lambda m: _sheffer_inverse_table(key, m))
    return f


def sheffer_op(cfg: CalculusConfig) -> LinearOperator:
    return LinearOperator("Ψ", lambda f: sheffer_apply(cfg, f))


def sheffer_inverse_op(cfg: CalculusConfig) -> LinearOperator:
    return LinearOperator("Ψ^-1", lambda f: sheffer_inverse_apply(cfg, f))


def euler_axis_apply(cfg: CalculusConfig, j: int, f: CliffordPolynomial) -> CliffordPolynomial:
    """``x'_j O_j f`` in one pass."""
    key = cfg.key
    return axis_apply(f, j, lambda m: _euler_axis_table(key, m))
