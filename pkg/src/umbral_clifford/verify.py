"""Exact operator-identity checking on seeded random or enumerated inputs."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .operators import LinearOperator
from .poly import ONE, CliffordPolynomial
from .sampling import random_polynomial, trial_rng
from .umbral import CalculusConfig


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    config: CalculusConfig
    trials: int
    max_degree: int
    seed: int
    passed: bool
    counterexample: Optional[tuple] = None  # (input, lhs, rhs)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("passed must be True exactly when no counterexample is recorded")

    def summary(self) -> str:
        status = "ok  " if self.passed else "FAIL"
        line = f"{status} {self.identity_name} [{self.config.label()}] trials={self.trials} deg<={self.max_degree} seed={self.seed}"
        if self.counterexample is not None:
            f, lhs, rhs = self.counterexample
            line += f"\n     input: {f}\n     lhs:   {lhs}\n     rhs:   {rhs}"
        return line


Sampler = Callable[[int], CliffordPolynomial]


def _first_mismatch(lhs, rhs, inputs: Iterable[CliffordPolynomial]):
    for f in inputs:
        a, b = lhs(f), rhs(f)
        if a != b:
            return (f, a, b)
    return None


def check_identity(
    name: str,
    lhs: LinearOperator,
    rhs: LinearOperator,
    cfg: CalculusConfig,
    max_degree: int,
    trials: int,
    seed: int,
    sampler: Sampler | None = None,
) -> IdentityReport:
    """Compare ``lhs(f)`` and ``rhs(f)`` exactly on ``trials`` seeded inputs.

    ``sampler(trial)`` overrides the default random polynomial source, e.g.
    to restrict to monogenic inputs.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if sampler is None:
        def sampler(t):
            return random_polynomial(cfg.n, max_degree, trial_rng(seed, t))
    bad = _first_mismatch(lhs, rhs, (sampler(t) for t in range(trials)))
    return IdentityReport(name, cfg, trials, max_degree, seed, bad is None, bad)


def monomial_blade_inputs(n: int, max_degree: int):
    """Every ``x^alpha e_A`` with ``|alpha| <= max_degree``."""
    for d in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), d):
            alpha = [0] * n
            for j in combo:
                alpha[j] += 1
            for mask in range(1 << n):
                yield CliffordPolynomial._raw(n, {(tuple(alpha), mask): ONE})


def check_exhaustive(name: str, lhs, rhs, cfg: CalculusConfig, max_degree: int, seed: int = 0) -> IdentityReport:
    """Compare on all monomial-blade inputs up to ``max_degree``."""
    inputs = list(monomial_blade_inputs(cfg.n, max_degree))
    bad = _first_mismatch(lhs, rhs, inputs)
    return IdentityReport(name, cfg, len(inputs), max_degree, seed, bad is None, bad)


def all_passed(reports: Iterable[IdentityReport]) -> bool:
    return all(r.passed for r in reports)
