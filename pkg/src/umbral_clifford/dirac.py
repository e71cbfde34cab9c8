"""Clifford-valued umbral operators: D', x', E', Laplacian and Gamma'.

Blades multiply from the LEFT in ``D' = sum e_j O_j`` and ``x' = sum e_j x'_j``.
"""
from __future__ import annotations

from .clifford import mask_product
from .operators import IDENTITY, LinearOperator
from .poly import ZERO, CliffordPolynomial, format_rational, rational
from .umbral import (
    CalculusConfig,
    _delta_table,
    _raising_table,
    apply_delta,
    apply_shift,
    euler_axis_apply,
)


def left_unit_multiply(f: CliffordPolynomial, j: int) -> CliffordPolynomial:
    """``e_j * f``."""
    ej = 1 << (j - 1)
    out = {}
    for (alpha, mask), c in f.items():
        sign, m = mask_product(ej, mask)
        out[(alpha, m)] = c if sign > 0 else -c
    return CliffordPolynomial._raw(f.n, out)


def _clifford_sum(cfg: CalculusConfig, f: CliffordPolynomial, table) -> CliffordPolynomial:
    # sum_j e_j * T_j f where T_j acts on x_j via table(key, m)
    key = cfg.key
    out: dict = {}
    get = out.get
    for j in range(cfg.n):
        ej = 1 << j
        for (alpha, mask), c in f.items():
            img = table(key, alpha[j])
            if not img:
                continue
            sign, m = mask_product(ej, mask)
            sc = c if sign > 0 else -c
            head, tail = alpha[:j], alpha[j + 1:]
            for e, v in img.items():
                k = (head + (e,) + tail, m)
                s = get(k, ZERO) + sc * v
                if s:
                    out[k] = s
                else:
                    del out[k]
    return CliffordPolynomial._raw(f.n, out)


def apply_dirac(cfg: CalculusConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    """Umbral Dirac operator ``D' = sum_j e_j O_j``."""
    return _clifford_sum(cfg, f, _delta_table)


def apply_vector(cfg: CalculusConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    """Umbral vector variable ``x' = sum_j e_j x'_j``."""
    return _clifford_sum(cfg, f, _raising_table)


def apply_euler(cfg: CalculusConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    """Umbral Euler operator ``E' = sum_j x'_j O_j``."""
    out = CliffordPolynomial.zero(f.n)
    for j in range(1, cfg.n + 1):
        out = out + euler_axis_apply(cfg, j, f)
    return out


def apply_laplacian(cfg: CalculusConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    """``Delta' = sum_j O_j^2`` (equal to ``-(D')^2``)."""
    out = CliffordPolynomial.zero(f.n)
    for j in range(1, cfg.n + 1):
        out = out + apply_delta(cfg, j, apply_delta(cfg, j, f))
    return out


def apply_gamma(cfg: CalculusConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    """Spherical Dirac operator ``Gamma' = -x'D' - E'``."""
    return -(apply_vector(cfg, apply_dirac(cfg, f)) + apply_euler(cfg, f))


def apply_star_laplacian(cfg: CalculusConfig, f: CliffordPolynomial, step=None) -> CliffordPolynomial:
    """``sum_j (T_{+s} - 2 id + T_{-s}) f / s^2`` for lattice step ``s`` (default ``2h``)."""
    s = rational(step) if step is not None else 2 * cfg.h
    out = CliffordPolynomial.zero(f.n)
    for j in range(1, cfg.n + 1):
        out = out + apply_shift(f, j, s) + apply_shift(f, j, -s) - f.scale(2)
    return out.scale(1 / (s * s))


def dirac_op(cfg: CalculusConfig) -> LinearOperator:
    return LinearOperator("D'", lambda f: apply_dirac(cfg, f))


def vector_op(cfg: CalculusConfig) -> LinearOperator:
    return LinearOperator("x'", lambda f: apply_vector(cfg, f))


def euler_op(cfg: CalculusConfig) -> LinearOperator:
    return LinearOperator("E'", lambda f: apply_euler(cfg, f))


def laplacian_op(cfg: CalculusConfig) -> LinearOperator:
    return LinearOperator("Δ'", lambda f: apply_laplacian(cfg, f))


def gamma_op(cfg: CalculusConfig) -> LinearOperator:
    return LinearOperator("Γ'", lambda f: apply_gamma(cfg, f))


def shifted_euler_op(cfg: CalculusConfig, s=None) -> LinearOperator:
    """``E' + s id``; ``s`` defaults to ``n/2``."""
    s = rational(s) if s is not None else rational(cfg.n) / 2
    name = "(E' + n/2)" if s == rational(cfg.n) / 2 else f"(E' + {format_rational(s)})"
    return LinearOperator(name, lambda f: apply_euler(cfg, f) + f.scale(s))


__all__ = [
    "IDENTITY",
    "left_unit_multiply",
    "apply_dirac",
    "apply_vector",
    "apply_euler",
    "apply_laplacian",
    "apply_gamma",
    "apply_star_laplacian",
    "dirac_op",
    "vector_op",
    "euler_op",
    "laplacian_op",
    "gamma_op",
    "shifted_euler_op",
]
