"""Named identity suites, as exposed by ``umbral-clifford verify``."""
from __future__ import annotations

import itertools
from math import comb
from typing import Callable

from .almansi import apply_Q, apply_U, apply_euler_inverse, dirac_power, generate_monogenic, vector_power
from .dirac import (
    apply_star_laplacian,
    dirac_op,
    euler_op,
    gamma_op,
    laplacian_op,
    vector_op,
)
from .clifford import Blade
from .operators import IDENTITY, LinearOperator, anticommutator, commutator
from .poly import CliffordPolynomial, poly_eval, rational
from .sampling import trial_rng
from .umbral import CalculusConfig, basic_sequence, delta_op, raising_op, sheffer_op
from .verify import IdentityReport, check_exhaustive, check_identity

Identity = tuple[str, LinearOperator, LinearOperator]
ZERO = IDENTITY * 0


def weyl_identities(cfg: CalculusConfig) -> list[Identity]:
    out = []
    n = cfg.n
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            O_j, O_k = delta_op(cfg, j), delta_op(cfg, k)
            X_j, X_k = raising_op(cfg, j), raising_op(cfg, k)
            if j < k:
                out.append((f"[O_{j}, O_{k}] = 0", commutator(O_j, O_k), ZERO))
                out.append((f"[x'_{j}, x'_{k}] = 0", commutator(X_j, X_k), ZERO))
            out.append((f"[O_{j}, x'_{k}] = {int(j == k)}", commutator(O_j, X_k), IDENTITY if j == k else ZERO))
    return out


def anticommutator_identities(cfg: CalculusConfig) -> list[Identity]:
    D, X, E = dirac_op(cfg), vector_op(cfg), euler_op(cfg)
    n = cfg.n
    sum_sq = ZERO
    for j in range(1, n + 1):
        sum_sq = sum_sq + raising_op(cfg, j) @ raising_op(cfg, j)
    return [
        ("{x', x'} = -2 sum_j x'_j^2", anticommutator(X, X), sum_sq * -2),
        ("{D', D'} = -2 Laplacian'", anticommutator(D, D), laplacian_op(cfg) * -2),
        ("{x', D'} = -2E' - n", anticommutator(X, D), E * -2 - n),
    ]


def osp12_bracket_identities(cfg: CalculusConfig, as_printed: bool = False) -> list[Identity]:
    """The nine even/odd brackets among x', D', (x')^2, Laplacian' and E' + n/2.

    ``as_printed`` flips the two signs ``[x', -L] = -2D'`` and
    ``[(x')^2, -L] = +4(E' + n/2)``; those forms are refuted by the suite.
    """
    D, X = dirac_op(cfg), vector_op(cfg)
    X2 = X @ X
    negL = laplacian_op(cfg) * -1
    K = euler_op(cfg) + rational(cfg.n) / 2
    s = -1 if as_printed else 1
    out = [
        ("[x', (x')^2] = 0", commutator(X, X2), ZERO),
        (f"[x', -Laplacian'] = {'-' if as_printed else ''}2D'", commutator(X, negL), D * (2 * s)),
        ("[E'+n/2, x'] = x'", commutator(K, X), X),
        ("[D', (x')^2] = -2x'", commutator(D, X2), X * -2),
        ("[D', -Laplacian'] = 0", commutator(D, negL), ZERO),
        ("[E'+n/2, D'] = -D'", commutator(K, D), D * -1),
        (f"[(x')^2, -Laplacian'] = {'' if as_printed else '-'}4(E'+n/2)", commutator(X2, negL), K * (-4 * s)),
        ("[E'+n/2, -(x')^2] = -2(x')^2", commutator(K, X2 * -1), X2 * -2),
        ("[E'+n/2, -Laplacian'] = 2Laplacian'", commutator(K, negL), laplacian_op(cfg) * 2),
    ]
    if as_printed:
        return [out[1], out[6]]
    return out


def osp12_identities(cfg: CalculusConfig) -> list[Identity]:
    return anticommutator_identities(cfg) + osp12_bracket_identities(cfg)


def intertwining_identities(cfg: CalculusConfig) -> list[Identity]:
    base = CalculusConfig(cfg.n)
    psi = sheffer_op(cfg)
    return [
        ("Psi D = D' Psi", psi @ dirac_op(base), dirac_op(cfg) @ psi),
        ("Psi x = x' Psi", psi @ vector_op(base), vector_op(cfg) @ psi),
        ("Psi E = E' Psi", psi @ euler_op(base), euler_op(cfg) @ psi),
    ]


def gamma_identities(cfg: CalculusConfig) -> list[Identity]:
    G = gamma_op(cfg)
    return [
        ("[Gamma', E'] = 0", commutator(G, euler_op(cfg)), ZERO),
        ("[Gamma', Laplacian'] = 0", commutator(G, laplacian_op(cfg)), ZERO),
    ]


def laplacian_identities(cfg: CalculusConfig) -> list[Identity]:
    D = dirac_op(cfg)
    out = [("Laplacian' = -(D')^2", laplacian_op(cfg), (D @ D) * -1)]
    if cfg.family == "central":
        star = LinearOperator("star Laplacian (step 2h)", lambda f: apply_star_laplacian(cfg, f))
        out.append(("-(D')^2 = star Laplacian with step 2h", (D @ D) * -1, star))
    return out


def _monogenic_sampler(cfg: CalculusConfig, max_degree: int, seed: int):
    def sample(t):
        return generate_monogenic(cfg, max_degree, seed * 1_000_033 + t)
    return sample


def almansi_identities(cfg: CalculusConfig, max_s: int = 4) -> list[Identity]:
    """Identities that hold on ``ker D'``; run them with monogenic inputs."""
    D, X = dirac_op(cfg), vector_op(cfg)
    out: list[Identity] = []
    for s in range(1, max_s + 1):
        Xs = X ** s
        rhs = LinearOperator(
            f"-2 x'^{s-1} U'_{s}",
            lambda f, s=s: vector_power(cfg, s - 1, apply_U(cfg, s, f)).scale(-2),
        )
        # the (-1)^s (x')^s D' f term vanishes on monogenic inputs
        out.append((f"D'(x')^{s} = -2(x')^{s-1}U'_{s} on ker D'", D @ Xs, rhs))
    for s in range(1, max_s + 1):
        for k in range(1, max_s + 1):
            if k <= s:
                def rhs(f, k=k, s=s):
                    for r in range(s, s - k, -1):
                        f = apply_U(cfg, r, f)
                    return vector_power(cfg, s - k, f).scale(rational(-2) ** k)
                out.append((f"(D')^{k}(x')^{s} = (-2)^{k}(x')^{s-k}U'_{s-k+1}..U'_{s} on ker D'",
                            LinearOperator("", lambda f, k=k, s=s: dirac_power(cfg, k, vector_power(cfg, s, f))),
                            LinearOperator("", rhs)))
            else:
                out.append((f"(D')^{k}(x')^{s} = 0 on ker D' (k > s)",
                            LinearOperator("", lambda f, k=k, s=s: dirac_power(cfg, k, vector_power(cfg, s, f))),
                            ZERO))
    for k in range(1, max_s + 1):
        for a in (1, 2, -3):
            out.append((f"(D')^{k} {a}(x')^{k} Q'_{k}/{a} = id on ker D'",
                        LinearOperator("", lambda f, k=k, a=a: dirac_power(cfg, k, vector_power(cfg, k, apply_Q(cfg, k, f, a).scale(a)))),
                        IDENTITY))
    return out


def euler_inverse_identities(cfg: CalculusConfig) -> list[Identity]:
    """Inverse of ``E' + s`` and its commutation with ``D'`` (any input)."""
    D, E = dirac_op(cfg), euler_op(cfg)
    half_n = rational(cfg.n) / 2
    out: list[Identity] = []
    for s in (rational(1) / 2, rational(1), half_n, half_n + 2):
        inv = LinearOperator(f"I'_{s}", lambda f, s=s: apply_euler_inverse(cfg, s, f))
        out.append((f"(E'+{s}) I'_{s} = id", (E + s) @ inv, IDENTITY))
        out.append((f"I'_{s} (E'+{s}) = id", inv @ (E + s), IDENTITY))
    for s in (half_n, half_n + 1):
        inv = LinearOperator("", lambda f, s=s: apply_euler_inverse(cfg, s, f))
        inv1 = LinearOperator("", lambda f, s=s: apply_euler_inverse(cfg, s + 1, f))
        out.append((f"D' I'_{s} = I'_{s + 1} D'", D @ inv, inv1 @ D))
    return out


def _run(identities, cfg, max_degree, trials, seed, sampler=None) -> list[IdentityReport]:
    return [check_identity(name, a, b, cfg, max_degree, trials, seed, sampler) for name, a, b in identities]


def run_suite(name: str, cfg: CalculusConfig, max_degree: int, trials: int, seed: int, hbar=None) -> list[IdentityReport]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    return SUITES[name](cfg, max_degree, trials, seed, hbar)


def _suite_weyl(cfg, d, t, seed, hbar):
    return _run(weyl_identities(cfg), cfg, d, t, seed)


def _suite_anticommutators(cfg, d, t, seed, hbar):
    return _run(anticommutator_identities(cfg), cfg, d, t, seed)


def _suite_osp12(cfg, d, t, seed, hbar):
    # the nine brackets only; the anticommutators have their own suite
    return _run(osp12_bracket_identities(cfg), cfg, d, t, seed)


def _suite_intertwining(cfg, d, t, seed, hbar):
    return [check_exhaustive(name, a, b, cfg, d, seed) for name, a, b in intertwining_identities(cfg)]


def _suite_gamma(cfg, d, t, seed, hbar):
    return _run(gamma_identities(cfg), cfg, d, t, seed)


def _suite_star(cfg, d, t, seed, hbar):
    return _run(laplacian_identities(cfg), cfg, d, t, seed)


def _suite_almansi(cfg, d, t, seed, hbar):
    reports = _run(almansi_identities(cfg), cfg, d, t, seed, _monogenic_sampler(cfg, d, seed))
    return reports + _run(euler_inverse_identities(cfg), cfg, d, t, seed)


def _suite_oscillator(cfg, d, t, seed, hbar):
    from .oscillator import OscillatorConfig, oscillator_reports

    hbars = [rational(hbar)] if hbar is not None else [rational(0), rational(1) / 2, rational(1)]
    reports = []
    for hb in hbars:
        reports.extend(oscillator_reports(OscillatorConfig(cfg, hb), d, t, seed))
    return reports


SUITES: dict[str, Callable[..., list[IdentityReport]]] = {
    "weyl": _suite_weyl,
    "lemma-x-D": _suite_anticommutators,
    "osp12": _suite_osp12,
    "intertwining": _suite_intertwining,
    "gamma-commute": _suite_gamma,
    "star-laplacian": _suite_star,
    "almansi": _suite_almansi,
    "oscillator": _suite_oscillator,
}


def binomial_type_reports(cfg: CalculusConfig, max_degree: int, trials: int, seed: int) -> list[IdentityReport]:
    """``V_b(x + y) = sum_{a <= b} C(b, a) V_a(x) V_{b-a}(y)`` at random rational points.

    Only expected for the plain raising variant.
    """
    def value(p, point):
        return poly_eval(p, point).get(Blade(), rational(0))

    n = cfg.n
    reports = []
    betas = [b for d in range(max_degree + 1) for b in itertools.product(range(d + 1), repeat=n) if sum(b) == d]
    for beta in betas:
        vb = basic_sequence(cfg, beta)
        bad = None
        for t in range(trials):
            rng = trial_rng(seed, t)
            x = [rational(f"{rng.randint(-9, 9)}/{rng.randint(1, 4)}") for _ in range(n)]
            y = [rational(f"{rng.randint(-9, 9)}/{rng.randint(1, 4)}") for _ in range(n)]
            lhs = value(vb, [a + b for a, b in zip(x, y)])
            rhs = rational(0)
            for alpha in itertools.product(*(range(b + 1) for b in beta)):
                c = 1
                for a, b in zip(alpha, beta):
                    c *= comb(b, a)
                rest = tuple(b - a for a, b in zip(alpha, beta))
                rhs += c * value(basic_sequence(cfg, alpha), x) * value(basic_sequence(cfg, rest), y)
            if lhs != rhs:
                bad = (vb, CliffordPolynomial.constant(n, lhs), CliffordPolynomial.constant(n, rhs))
                break
        reports.append(IdentityReport(f"V_{beta} is of binomial type", cfg, trials, sum(beta), seed, bad is None, bad))
    return reports


def _suite_binomial(cfg, d, t, seed, hbar):
    return binomial_type_reports(cfg, d, t, seed)


SUITES["binomial"] = _suite_binomial
