"""Shared fixtures and random generators for the test suite.

Randomized tests use explicitly seeded `random.Random` instances so every
run exercises the same inputs.
"""

import random
from fractions import Fraction

import pytest

from polydegen import build_family
from polydegen.laurent import LaurentPoly
from polydegen.multipoly import MultiPoly

_FAMILY_CACHE: dict[int, object] = {}


def family(l):
    """Build (and cache) the degeneration family for a given l."""
    if l not in _FAMILY_CACHE:
        _FAMILY_CACHE[l] = build_family(l)
    return _FAMILY_CACHE[l]


@pytest.fixture(scope="session")
def families():
    """The family instances for l = 1..4, keyed by l."""
    return {l: family(l) for l in (1, 2, 3, 4)}


def rand_rational(rng, max_num=9, max_den=5):
    num = rng.randint(-max_num, max_num)
    den = rng.randint(1, max_den)
    return Fraction(num, den)


def rand_laurent(rng, min_exp=-3, max_exp=3, terms=4):
    """A random Laurent polynomial, possibly zero."""
    out = LaurentPoly.zero()
    for _ in range(rng.randint(0, terms)):
        exp = rng.randint(min_exp, max_exp)
        out = out + LaurentPoly.t_power(exp, rand_rational(rng))
    return out


def rand_poly(rng, arity=3, max_degree=3, terms=5, min_t=-2, max_t=2):
    """A random multivariate polynomial, possibly zero."""
    out = MultiPoly.zero(arity)
    for _ in range(rng.randint(0, terms)):
        budget = rng.randint(0, max_degree)
        powers = [0] * arity
        for _ in range(budget):
            powers[rng.randrange(arity)] += 1
        coeff = LaurentPoly.t_power(rng.randint(min_t, max_t), rand_rational(rng))
        out = out + MultiPoly.monomial(arity, powers, coeff)
    return out


def rand_poly_nonzero(rng, **kwargs):
    while True:
        p = rand_poly(rng, **kwargs)
        if not p.is_zero():
            return p
