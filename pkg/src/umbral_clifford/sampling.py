"""Seeded random polynomials for identity fuzzing.

Distribution (fixed so failures replay from ``(seed, trial)``):

* 1 to ``max_terms`` terms; the first term has degree exactly ``max_degree``,
  the others a degree drawn uniformly from ``0..max_degree``;
* exponents by distributing the degree over uniformly chosen variables;
* blade uniform over all ``2**n`` basis blades;
* coefficient ``p/q`` with ``p`` uniform in ``[-9, 9] \\ {0}`` and ``q`` in ``{1, 2, 3}``.
"""
from __future__ import annotations

import random

from gmpy2 import mpq

from .poly import CliffordPolynomial


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * 1_000_003 + trial)


def random_polynomial(n: int, max_degree: int, rng: random.Random, max_terms: int = 4) -> CliffordPolynomial:
    f = CliffordPolynomial.zero(n)
    count = rng.randint(1, max_terms)
    for t in range(count):
        deg = max_degree if t == 0 else rng.randint(0, max_degree)
        alpha = [0] * n
        for _ in range(deg):
            alpha[rng.randrange(n)] += 1
        mask = rng.randrange(1 << n)
        p = rng.choice([v for v in range(-9, 10) if v])
        q = rng.choice((1, 2, 3))
        f = f + CliffordPolynomial._raw(n, {(tuple(alpha), mask): mpq(p, q)})
    if not f:
        return CliffordPolynomial.constant(n, 1)
    return f


def random_homogeneous(n: int, degree: int, rng: random.Random, max_terms: int = 4) -> CliffordPolynomial:
    """Random polynomial whose terms all have total degree ``degree``."""
    f = CliffordPolynomial.zero(n)
    while not f:
        for _ in range(rng.randint(1, max_terms)):
            alpha = [0] * n
            for _ in range(degree):
                alpha[rng.randrange(n)] += 1
            mask = rng.randrange(1 << n)
            p = rng.choice([v for v in range(-9, 10) if v])
            q = rng.choice((1, 2, 3))
            f = f + CliffordPolynomial._raw(n, {(tuple(alpha), mask): mpq(p, q)})
    return f
