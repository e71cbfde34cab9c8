"""Harmonic-oscillator operators built from the umbral Clifford calculus.

    V(x')  = -1/2 (x')^2 - (hbar/2) x' + (hbar^2/8) (Gamma' - n/2)
    J'     = (hbar/4) D' + 1/2 (E' + n/2)
    H'     = -1/2 Laplacian' + V(x')
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .almansi import almansi_decompose
from .dirac import (
    apply_dirac,
    apply_euler,
    apply_gamma,
    apply_laplacian,
    apply_vector,
    dirac_op,
    euler_op,
    gamma_op,
    laplacian_op,
)
from .errors import PreconditionError
from .operators import IDENTITY, LinearOperator, commutator
from .poly import CliffordPolynomial, format_rational, rational
from .sampling import random_homogeneous, random_polynomial, trial_rng
from .umbral import CalculusConfig, sheffer_apply
from .verify import IdentityReport, check_identity


@dataclass(frozen=True)
class OscillatorConfig:
    base: CalculusConfig
    hbar: object = 0

    def __post_init__(self):
        object.__setattr__(self, "hbar", rational(self.hbar))

    @property
    def n(self) -> int:
        return self.base.n

    def label(self) -> str:
        return f"{self.base.label()}, hbar={format_rational(self.hbar)}"


def apply_potential(ocfg: OscillatorConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    cfg, hb = ocfg.base, ocfg.hbar
    xf = apply_vector(cfg, f)
    out = apply_vector(cfg, xf).scale(rational(-1) / 2)
    if hb:
        out = out - xf.scale(hb / 2)
        out = out + (apply_gamma(cfg, f) - f.scale(rational(cfg.n) / 2)).scale(hb * hb / 8)
    return out


def apply_J(ocfg: OscillatorConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    cfg, hb = ocfg.base, ocfg.hbar
    out = (apply_euler(cfg, f) + f.scale(rational(cfg.n) / 2)).scale(rational(1) / 2)
    if hb:
        out = out + apply_dirac(cfg, f).scale(hb / 4)
    return out


def apply_H(ocfg: OscillatorConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    return apply_laplacian(ocfg.base, f).scale(rational(-1) / 2) + apply_potential(ocfg, f)


def potential_op(ocfg: OscillatorConfig) -> LinearOperator:
    return LinearOperator("V(x')", lambda f: apply_potential(ocfg, f))


def J_op(ocfg: OscillatorConfig) -> LinearOperator:
    return LinearOperator("J'", lambda f: apply_J(ocfg, f))


def H_op(ocfg: OscillatorConfig) -> LinearOperator:
    return LinearOperator("H'", lambda f: apply_H(ocfg, f))


def exp_locally_finite(op: LinearOperator, f: CliffordPolynomial) -> CliffordPolynomial:
    """``sum_m op^m f / m!`` for a degree-lowering ``op``.

    The series must terminate by ``m = deg f + 1``; otherwise
    ``PreconditionError`` is raised with the surviving term.
    """
    if not f:
        return f
    out = f
    term = f
    for m in range(1, f.degree + 2):
        term = op(term)
        if not term:
            return out
        out = out + term.scale(rational(1) / math.factorial(m))
    raise PreconditionError(f"{op.name} is not nilpotent on this input", term)


def exp_op(op: LinearOperator) -> LinearOperator:
    return LinearOperator(f"exp({op.name})", lambda f: exp_locally_finite(op, f))


def generate_harmonic(cfg: CalculusConfig, degree: int, seed: int, homogeneous: bool = False, max_terms: int = 4) -> CliffordPolynomial:
    """Random polynomial in the kernel of the umbral Laplacian.

    Takes the Almansi pieces ``f_0 + x' f_1`` of a random polynomial, which
    together span the even-power (harmonic) part.  With ``homogeneous`` the
    seed polynomial is an image of a homogeneous polynomial under the Sheffer
    map, so the result is ``E'``-homogeneous of degree ``degree``.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    rng = trial_rng(seed, 0)
    if homogeneous:
        g = sheffer_apply(cfg, random_homogeneous(cfg.n, degree, rng, max_terms=max_terms))
    else:
        g = random_polynomial(cfg.n, degree, rng, max_terms=max_terms)
    comps = almansi_decompose(cfg, g, degree + 1).components
    out = comps[0]
    if len(comps) > 1:
        out = out + apply_vector(cfg, comps[1])
    return out


def fischer_pair_image(ocfg: OscillatorConfig, k: int, f: CliffordPolynomial) -> CliffordPolynomial:
    """``(Laplacian')^k (2 V(x'))^k f``."""
    g = f
    for _ in range(k):
        g = apply_potential(ocfg, g).scale(2)
    for _ in range(k):
        g = apply_laplacian(ocfg.base, g)
    return g


def check_fischer_pair_mapping(ocfg: OscillatorConfig, k: int, f: CliffordPolynomial, seed: int = 0) -> IdentityReport:
    """Report whether ``(Laplacian')^k (2V)^k`` maps the harmonic ``f`` to a harmonic polynomial."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lap = apply_laplacian(ocfg.base, f)
    if lap:
        raise PreconditionError("input is not umbral harmonic", lap)
    image = fischer_pair_image(ocfg, k, f)
    residue = apply_laplacian(ocfg.base, image)
    bad = None if not residue else (f, residue, CliffordPolynomial.zero(f.n))
    deg = f.degree or 0
    return IdentityReport(
        f"Laplacian'^{k}(2V)^{k} keeps harmonics harmonic (hbar={format_rational(ocfg.hbar)})",
        ocfg.base, 1, deg, seed, bad is None, bad,
    )


def _half_shifted_euler(cfg: CalculusConfig) -> LinearOperator:
    return (euler_op(cfg) + rational(cfg.n) / 2) * (rational(1) / 2)


def oscillator_identities(ocfg: OscillatorConfig) -> list[tuple[str, LinearOperator, LinearOperator]]:
    """(name, lhs, rhs) triples for the oscillator layer, as stated."""
    cfg, hb = ocfg.base, ocfg.hbar
    tag = f" (hbar={format_rational(hb)})"
    D, E, G, L = dirac_op(cfg), euler_op(cfg), gamma_op(cfg), laplacian_op(cfg)
    V, J = potential_op(ocfg), J_op(ocfg)
    half_lap = L * (rational(1) / 2)
    zero = IDENTITY * 0
    down = exp_op(D * (-hb / 2))
    up = exp_op(D * (hb / 2))
    A = _half_shifted_euler(cfg)
    return [
        ("[E', Gamma'] = 0", commutator(E, G), zero),
        ("[Laplacian', Gamma'] = 0", commutator(L, G), zero),
        ("[Laplacian'/2, V] = J'" + tag, commutator(half_lap, V), J),
        ("[J', V] = V" + tag, commutator(J, V), V),
        ("[J', Laplacian'/2] = Laplacian'/2" + tag, commutator(J, half_lap), half_lap),
        ("1/2(E'+n/2) exp(-hbar/2 D') = exp(-hbar/2 D') J'" + tag, A @ down, down @ J),
        ("[1/2(E'+n/2), exp(hbar/2 D')] = -hbar/4 D' exp(hbar/2 D')" + tag,
         commutator(A, up), (D @ up) * (-hb / 4)),
    ]


def graded_relation_half_factor(ocfg: OscillatorConfig) -> tuple[str, LinearOperator, LinearOperator]:
    """The graded relation with factor ``-hbar/2``; it only holds at ``hbar = 0``."""
    cfg, hb = ocfg.base, ocfg.hbar
    D = dirac_op(cfg)
    up = exp_op(D * (hb / 2))
    return (
        f"[1/2(E'+n/2), exp(hbar/2 D')] = -hbar/2 D' exp(hbar/2 D') (hbar={format_rational(hb)})",
        commutator(_half_shifted_euler(cfg), up),
        (D @ up) * (-hb / 2),
    )


def sl2_reference_identities(ocfg: OscillatorConfig) -> list[tuple[str, LinearOperator, LinearOperator]]:
    """sl2 relations that do hold at ``hbar = 0``: with ``K = E' + n/2``,
    ``[Laplacian'/2, V_0] = K``, ``[K/2, V_0] = V_0``, ``[K/2, Laplacian'/2] = -Laplacian'/2``."""
    cfg = ocfg.base
    V0 = potential_op(OscillatorConfig(cfg, 0))
    half_lap = laplacian_op(cfg) * (rational(1) / 2)
    K = euler_op(cfg) + rational(cfg.n) / 2
    halfK = K * (rational(1) / 2)
    return [
        ("[Laplacian'/2, V_0] = E' + n/2", commutator(half_lap, V0), K),
        ("[(E'+n/2)/2, V_0] = V_0", commutator(halfK, V0), V0),
        ("[(E'+n/2)/2, Laplacian'/2] = -Laplacian'/2", commutator(halfK, half_lap), half_lap * -1),
    ]


def oscillator_reports(ocfg: OscillatorConfig, max_degree: int, trials: int, seed: int) -> list[IdentityReport]:
    cfg = ocfg.base
    reports = [
        check_identity(name, lhs, rhs, cfg, max_degree, trials, seed)
        for name, lhs, rhs in oscillator_identities(ocfg)
    ]
    for k in (1, 2):
        bad = None
        for t in range(trials):
            f = generate_harmonic(cfg, max_degree, seed * 7919 + t)
            rep = check_fischer_pair_mapping(ocfg, k, f, seed)
            if not rep.passed:
                bad = rep.counterexample
                break
        reports.append(IdentityReport(
            f"Laplacian'^{k}(2V)^{k} keeps harmonics harmonic (hbar={format_rational(ocfg.hbar)})",
            cfg, trials, max_degree, seed, bad is None, bad,
        ))
    return reports
