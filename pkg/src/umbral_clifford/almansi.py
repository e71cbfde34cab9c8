"""Almansi decomposition of umbral polymonogenic polynomials.

A polynomial ``f`` with ``(D')^k f = 0`` splits uniquely as

    f = f_0 + x' f_1 + (x')^2 f_2 + ... + (x')^(k-1) f_(k-1),   D' f_s = 0,

and the pieces are peeled off from the top using the right inverses
``Q'_s`` of ``(D')^s (x')^s`` on ``ker D'``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from .dirac import apply_dirac, apply_euler, apply_vector
from .errors import PreconditionError
from .poly import CliffordPolynomial, homogeneous_components, rational
from .sampling import random_polynomial, trial_rng
from .umbral import CalculusConfig, sheffer_apply, sheffer_inverse_apply


@dataclass(frozen=True)
class AlmansiResult:
    cfg: CalculusConfig
    k: int
    components: tuple[CliffordPolynomial, ...]
    source: str = field(default="almansi_decompose", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.k != len(self.components):
            raise ValueError(f"k={self.k} but {len(self.components)} components given")

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, s: int) -> CliffordPolynomial:
        return self.components[s]


def dirac_power(cfg: CalculusConfig, k: int, f: CliffordPolynomial) -> CliffordPolynomial:
    for _ in range(k):
        if not f:
            break
        f = apply_dirac(cfg, f)
    return f


def vector_power(cfg: CalculusConfig, k: int, f: CliffordPolynomial) -> CliffordPolynomial:
    for _ in range(k):
        if not f:
            break
        f = apply_vector(cfg, f)
    return f


def apply_U(cfg: CalculusConfig, s: int, f: CliffordPolynomial) -> CliffordPolynomial:
    """``U'_{2k} = k id`` and ``U'_{2k+1} = E' + (n/2 + k) id``."""
    if s < 0:
        raise ValueError("s must be non-negative")
    k, odd = divmod(s, 2)
    if not odd:
        return f.scale(k)
    return apply_euler(cfg, f) + f.scale(rational(cfg.n) / 2 + k)


def apply_euler_inverse(cfg: CalculusConfig, s, f: CliffordPolynomial) -> CliffordPolynomial:
    """Inverse of ``E' + s id`` for ``s > 0``.

    The ``E'``-eigenspaces are the images under the Sheffer map of the
    homogeneous components, on which ``E' + s`` acts as ``d + s``.
    """
    s = rational(s)
    if s <= 0:
        raise ValueError(f"I'_s needs s > 0, got {s}")
    g = sheffer_inverse_apply(cfg, f)
    out = CliffordPolynomial.zero(f.n)
    for d, part in homogeneous_components(g):
        out = out + part.scale(1 / (d + s))
    return sheffer_apply(cfg, out)


def apply_U_inverse(cfg: CalculusConfig, s: int, f: CliffordPolynomial) -> CliffordPolynomial:
    if s < 1:
        raise ValueError("U'_0 = 0 has no inverse; s must be >= 1")
    k, odd = divmod(s, 2)
    if not odd:
        return f.scale(rational(1) / k)
    return apply_euler_inverse(cfg, rational(cfg.n) / 2 + k, f)


def apply_Q(cfg: CalculusConfig, k: int, f: CliffordPolynomial, scale=1) -> CliffordPolynomial:
    """``Q'_k = (-1/2)^k (U'_k)^-1 ... (U'_1)^-1``, divided by ``scale``.

    With ``scale = a`` this is the right inverse of ``(D')^k a (x')^k`` on
    ``ker D'``.  ``Q'_0`` is the identity.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    a = rational(scale)
    if a == 0:
        raise ValueError("scale must be nonzero")
    for s in range(1, k + 1):
        f = apply_U_inverse(cfg, s, f)
    return f.scale(mpq(-1, 2) ** k / a)


def is_polymonogenic(cfg: CalculusConfig, f: CliffordPolynomial, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be >= 1")
    return not dirac_power(cfg, k, f)


def polymonogenic_order(cfg: CalculusConfig, f: CliffordPolynomial) -> int:
    """Smallest ``k >= 1`` with ``(D')^k f = 0``."""
    k = 1
    g = apply_dirac(cfg, f)
    while g:
        g = apply_dirac(cfg, g)
        k += 1
    return k


def almansi_decompose(cfg: CalculusConfig, f: CliffordPolynomial, k: int) -> AlmansiResult:
    if k < 1:
        raise ValueError("k must be >= 1")
    witness = dirac_power(cfg, k, f)
    if witness:
        order = polymonogenic_order(cfg, f)
        raise PreconditionError(
            f"input is not polymonogenic of degree {k}: (D')^{k} f != 0 (smallest annihilating power is {order})",
            witness,
        )
    comps: list[CliffordPolynomial] = [CliffordPolynomial.zero(f.n)] * k
    g = f
    for m in range(k - 1, 0, -1):
        top = apply_Q(cfg, m, dirac_power(cfg, m, g))
        comps[m] = top
        g = g - vector_power(cfg, m, top)
    comps[0] = g
    residue = apply_dirac(cfg, g)
    if residue:
        raise AssertionError("Almansi peel left a non-monogenic remainder")
    return AlmansiResult(cfg, k, tuple(comps))


def almansi_reconstruct(result: AlmansiResult) -> CliffordPolynomial:
    cfg = result.cfg
    out = None
    for s, comp in enumerate(result.components):
        bad = apply_dirac(cfg, comp)
        if bad:
            raise PreconditionError(f"component f_{s} is not umbral monogenic", bad)
        term = vector_power(cfg, s, comp)
        out = term if out is None else out + term
    if out is None:
        raise ValueError("empty component list")
    return out


def euler_degree(cfg: CalculusConfig, f: CliffordPolynomial) -> int | None:
    """``d`` if ``E' f = d f`` for nonzero ``f``, else ``None``."""
    parts = homogeneous_components(sheffer_inverse_apply(cfg, f))
    if len(parts) != 1:
        return None
    return parts[0][0]


def fischer_decompose(cfg: CalculusConfig, f: CliffordPolynomial, degree: int | None = None) -> AlmansiResult:
    """Fischer pieces of an ``E'``-homogeneous polynomial of degree ``d``.

    Component ``f_s`` lies in the ``E'``-eigenspace of degree ``d - s``.
    """
    if not f:
        d = 0 if degree is None else degree
        return AlmansiResult(cfg, d + 1, (f,) * (d + 1), source="fischer_decompose")
    d = euler_degree(cfg, f)
    if d is None:
        raise PreconditionError("input is not E'-homogeneous", f)
    if degree is not None and degree != d:
        raise PreconditionError(f"input has E'-degree {d}, not {degree}", f)
    res = almansi_decompose(cfg, f, d + 1)
    return AlmansiResult(cfg, res.k, res.components, source="fischer_decompose")


def generate_monogenic(cfg: CalculusConfig, degree: int, seed: int, max_terms: int = 4) -> CliffordPolynomial:
    """Random element of ``ker D'`` of degree at most ``degree``.

    Draws a random polynomial ``g`` (every polynomial of degree ``d`` lies in
    ``ker (D')^(d+1)``) and keeps its monogenic Almansi component ``f_0``.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    g = random_polynomial(cfg.n, degree, trial_rng(seed, 0), max_terms=max_terms)
    return almansi_decompose(cfg, g, degree + 1).components[0]
