"""Polynomial endomorphisms: composition, triangularity, inversion."""

import random
from fractions import Fraction

import pytest

from conftest import rand_poly
from polydegen import parse_poly
from polydegen.endo import PolyEndo
from polydegen.errors import ArityMismatch, NotTriangular
from polydegen.laurent import RingMode
from polydegen.multipoly import MultiPoly


def endo(*texts, arity=None):
    n = arity or len(texts)
    return PolyEndo(tuple(parse_poly(s, arity=n) for s in texts))


def test_identity_and_apply():
    e = PolyEndo.identity(3)
    assert e.is_identity()
    p = parse_poly("x1*x3 + t", arity=3)
    assert e.apply(p) == p
    shift = endo("x1 + 1", "x2", "x3")
    assert shift.apply(parse_poly("x1^2", arity=3)) == parse_poly(
        "x1^2 + 2*x1 + 1", arity=3
    )


def test_compose_convention():
    # as ring maps: (phi o psi)(q) = phi(psi(q)), so the images of the
    # composite are phi applied to psi's images
    phi = endo("x1 + 1", "x2")
    psi = endo("2*x1", "x2")
    assert phi.compose(psi) == endo("2*x1 + 2", "x2")
    assert psi.compose(phi) == endo("2*x1 + 1", "x2")
    q = parse_poly("x1^2", arity=2)
    assert phi.compose(psi).apply(q) == phi.apply(psi.apply(q))


def test_compose_is_associative_on_random_endos():
    rng = random.Random(71)
    for _ in range(10):
        a = PolyEndo(tuple(rand_poly(rng, terms=2, max_degree=2) for _ in range(3)))
        b = PolyEndo(tuple(rand_poly(rng, terms=2, max_degree=2) for _ in range(3)))
        c = PolyEndo(tuple(rand_poly(rng, terms=2, max_degree=2) for _ in range(3)))
        assert a.compose(b).compose(c) == a.compose(b.compose(c))


def test_compose_chain_matches_pairwise():
    rng = random.Random(73)
    factors = [
        PolyEndo(tuple(rand_poly(rng, terms=2, max_degree=2) for _ in range(3)))
        for _ in range(4)
    ]
    chained = PolyEndo.compose_chain(factors)
    paired = factors[0].compose(factors[1]).compose(factors[2]).compose(factors[3])
    assert chained == paired
    assert PolyEndo.compose_chain([factors[0]]) == factors[0]


def test_arity_checks():
    with pytest.raises(ArityMismatch):
        endo("x1", "x2").compose(PolyEndo.identity(3))
    with pytest.raises(ArityMismatch):
        endo("x1", "x2").apply(parse_poly("x1", arity=3))
    with pytest.raises(ArityMismatch):
        PolyEndo((parse_poly("x1", arity=2), parse_poly("x1", arity=3)))


def test_permutation_and_reversal():
    swap = PolyEndo.permutation(3, (2, 1, 3))
    assert swap.apply(parse_poly("x1", arity=3)) == parse_poly("x2", arity=3)
    rev = PolyEndo.reversal(3)
    assert rev == PolyEndo.permutation(3, (3, 2, 1))
    with pytest.raises(ValueError):
        PolyEndo.permutation(3, (1, 1, 2))


def test_linear_part_and_affine():
    aff = endo("x1 + x2 + 1", "x2 - 1")
    assert aff.is_affine()
    assert not endo("x1^2", "x2").is_affine()
    # degenerate linear part is not invertible, hence not affine
    assert not endo("x1 + x2", "x1 + x2").is_affine()


def test_triangular_detection():
    tri = endo("2*x1 + 1", "x2 + x1^5", "x3 + x1*x2")
    assert tri.is_triangular(RingMode.LAURENT)
    assert tri.is_triangular(RingMode.POLY)
    laurent_only = endo("t*x1", "x2", "x3")
    assert laurent_only.is_triangular(RingMode.LAURENT)
    assert not laurent_only.is_triangular(RingMode.POLY)
    assert not endo("x1 + x2", "x2", "x3").is_triangular()
    assert not endo("x1*x2", "x2", "x3").is_triangular()


def test_elementary_detection():
    assert endo("x1 + x2^2", "x2", "x3").is_elementary()
    assert endo("x1", "x2", "x3 + t*x1").is_elementary()
    assert PolyEndo.identity(3).is_elementary()
    assert not endo("x1 + x2", "x2 + 1", "x3").is_elementary()
    assert not endo("2*x1", "x2", "x3").is_elementary()
    # the shift may not involve its own variable
    assert not endo("x1 + x1*x2", "x2", "x3").is_elementary()


def test_triangular_after_reordering():
    # shifting x1 by later variables becomes triangular once the variable
    # order is reversed
    shift = endo("x1 + x2*x3^2", "x2", "x3")
    assert not shift.is_triangular()
    assert shift.is_triangular_up_to_permutation(RingMode.LAURENT)
    # every diagonal entry of the linear part is zero here, and conjugating
    # by a permutation cannot repair that
    cycle = endo("x2 + x3^2", "x3", "x1 + 1")
    assert not cycle.is_triangular_up_to_permutation(RingMode.LAURENT)
    assert not endo("x1 + x2", "x2 + x1", "x3").is_triangular_up_to_permutation(
        RingMode.LAURENT
    )


def test_invert_triangular():
    tri = endo("2*x1 + 1", "x2 + x1^5", "x3 + x1*x2")
    inv = tri.invert_triangular(RingMode.LAURENT)
    assert tri.verify_inverse_pair(inv)
    assert inv.compose(tri).is_identity()
    # over Q[t] the scale t is not a unit, so the map is not triangular there
    with pytest.raises(NotTriangular):
        endo("t*x1", "x2", "x3").invert_triangular(RingMode.POLY)


def test_invert_triangular_random():
    rng = random.Random(79)
    for _ in range(8):
        images = []
        for i in range(3):
            scale = Fraction(rng.choice((1, 2, -1, 3)))
            lower = rand_poly(rng, arity=i, terms=2, max_degree=2) if i else None
            img = MultiPoly.variable(3, i + 1) * scale
            if lower is not None and not lower.is_zero():
                img = img + lower.extend_arity(3)
            images.append(img)
        tri = PolyEndo(tuple(images))
        inv = tri.invert_triangular(RingMode.LAURENT)
        assert tri.verify_inverse_pair(inv)


def test_specialize_and_extend():
    e = endo("t*x1", "x2 + t^-1", "x3")
    at2 = e.specialize(2)
    assert at2 == endo("2*x1", "x2 + 1/2", "x3")
    wide = endo("x1 + x2", "x2").extend_arity(4)
    assert wide.arity == 4
    assert wide.apply(parse_poly("x3*x4", arity=4)) == parse_poly("x3*x4", arity=4)


def test_str():
    # non-rational coefficients stay parenthesized in canonical text
    assert str(endo("x1 + t", "x2")) == "(x1 + (t), x2)"
