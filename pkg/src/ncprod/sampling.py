"""Seeded random generators for scalars, exponent vectors and elements.

Everything takes an explicit ``random.Random`` so suites are reproducible.
"""

import random
from fractions import Fraction

from .cyclo import CycNum
from .twisted import AlgebraConfig, TwistedElement

STANDARD_CONFIGS = ((2,), (3,), (2, 2), (2, 3), (3, 3), (4, 2))


def random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_cyc(rng: random.Random, m: int, nonzero: bool = False) -> CycNum:
    while True:
        c = CycNum(m, [random_rational(rng) if rng.random() < 0.6 else 0 for _ in range(m)])
        if not (nonzero and c.is_zero()):
            return c


def random_vector(rng: random.Random, dim: int, low: int = -3, high: int = 3):
    return tuple(rng.randint(low, high) for _ in range(dim))


def random_cone_vector(rng: random.Random, dim: int, max_degree: int, positive: bool = False):
    """Nonnegative vector of total degree <= max_degree (>= 1 when ``positive``)."""
    lo = 1 if positive else 0
    target = rng.randint(lo, max(lo, max_degree))
    v = [0] * dim
    for _ in range(target):
        v[rng.randrange(dim)] += 1
    return tuple(v)


def random_laurent(rng: random.Random, config: AlgebraConfig, max_terms: int = 4, spread: int = 3,
                   nonzero: bool = True) -> TwistedElement:
    """EXACT element with a few terms and exponents in [-spread, spread]."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            terms[random_vector(rng, config.dim, -spread, spread)] = random_cyc(rng, config.m, True)
        f = TwistedElement(config, terms)
        if f or not nonzero:
            return f


def random_cone_tail(rng: random.Random, config: AlgebraConfig, max_degree: int, max_terms: int = 3):
    """EXACT element supported in the cone, without constant term (may be zero)."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        alpha = random_cone_vector(rng, config.dim, max_degree, positive=True)
        terms[alpha] = random_cyc(rng, config.m, True)
    return TwistedElement(config, terms)


def random_cone_unit(rng: random.Random, config: AlgebraConfig, max_degree: int = 3, max_terms: int = 3):
    """c * (1 + t) with c nonzero scalar and t a cone tail."""
    c = random_cyc(rng, config.m, nonzero=True)
    return (TwistedElement.one(config) + random_cone_tail(rng, config, max_degree, max_terms)).scale(c)


def random_central_one_plus(rng: random.Random, config: AlgebraConfig, max_degree: int, max_terms: int = 3):
    """1 + g with g built from the central monomials x_i^n_i, y_i^n_i."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        v = [0] * config.dim
        budget = rng.randint(1, max_degree)
        deg = 0
        while True:
            k = rng.randrange(config.dim)
            step = config.blocks[k // 2]
            if deg + step > budget:
                break
            v[k] += step
            deg += step
        if any(v):
            terms[tuple(v)] = CycNum.rational(config.m, random_rational(rng))
    return TwistedElement.one(config) + TwistedElement(config, terms)
