"""The degeneration family and its t = 0 limit."""

from fractions import Fraction

import pytest

from polydegen import build_family, check_limit, parse_poly, slice_coefficients
from polydegen.family import limit_shape_problems
from polydegen.laurent import LaurentPoly, RingMode


def test_slice_coefficients_recurrence():
    for l in range(1, 8):
        c = slice_coefficients(l)
        assert len(c) == l + 1
        assert c[0] == l + 1
        for i in range(1, l + 1):
            assert (2 * i + 1) * c[i] == -(l - i + 1) * c[i - 1]


def test_slice_coefficients_frozen_values():
    assert slice_coefficients(1) == (Fraction(2), Fraction(-2, 3))
    assert slice_coefficients(2) == (Fraction(3), Fraction(-2), Fraction(2, 5))
    assert slice_coefficients(3) == (
        Fraction(4),
        Fraction(-4),
        Fraction(8, 5),
        Fraction(-8, 35),
    )


def test_l_must_be_positive():
    with pytest.raises(ValueError):
        build_family(0)
    with pytest.raises(ValueError):
        slice_coefficients(-1)


def test_build_family_l1_frozen(families):
    fam = families[1]
    assert fam.l == 1
    assert fam.coefficients == (Fraction(2), Fraction(-2, 3))
    assert str(fam.g2) == "(-1/2*t^-1)*x1^2 + x2"
    assert str(fam.g3) == "(-2/3*t^-2)*x1^3 + (2*t^-1)*x1*x2 + x3"
    assert str(fam.h_limit) == "x1^3*x3 + x1^2*x2^2"
    assert str(fam.slice_potential) == "(-8/3*t)*x2^3 + (-3/4*t^2)*x3^2"
    phi_x1 = fam.automorphism.images[0]
    assert phi_x1 == parse_poly("x1", arity=3) + fam.h * parse_poly("t", arity=3)


def test_derivation_images(families):
    for l, fam in families.items():
        f1, f2, f3 = fam.delta.images
        assert f1 == parse_poly("t", arity=3)
        assert f2 == parse_poly("x1", arity=3)
        assert f3 == parse_poly(f"-{l + 1}*x2^{l}", arity=3)


def test_kernel_identities(families):
    for fam in families.values():
        assert fam.delta.apply(fam.g2).is_zero()
        assert fam.delta.apply(fam.g3).is_zero()
        assert fam.delta.apply(fam.h).is_zero()


def test_tau_is_triangular_with_inverse(families):
    for fam in families.values():
        assert fam.tau.is_triangular(RingMode.LAURENT)
        assert fam.tau.verify_inverse_pair(fam.tau_inv)


def test_slice_potential_recovers_h(families):
    for fam in families.values():
        assert fam.tau.apply(fam.slice_potential) == fam.h
        # p is h with x1 frozen to zero
        x = [parse_poly(s, arity=3) for s in ("0", "x2", "x3")]
        assert fam.h.substitute(x) == fam.slice_potential


def test_limit_check(families):
    for fam in families.values():
        result = check_limit(fam)
        assert result.ok, result.problems
        assert fam.h.is_t_regular()
        assert fam.h.specialize_t(0) == fam.h_limit


def test_h_limit_closed_form(families):
    for l, fam in families.items():
        expected = parse_poly(f"x1^{2 * l}*(x1*x3 + x2^{l + 1})", arity=3)
        assert fam.h_limit == expected


def test_h_shape_split(families):
    for l, fam in families.items():
        assert limit_shape_problems(fam.h, l, fam.coefficients[-1]) == ()
    # a wrong x3^2 coefficient is reported
    fam = families[1]
    broken = fam.h + parse_poly("x3^2", arity=3)
    problems = limit_shape_problems(broken, 1, fam.coefficients[-1])
    assert problems


def test_fiber_specializations(families):
    fam = families[2]
    for alpha in (1, Fraction(1, 2)):
        fiber = fam.fiber(alpha)
        direct = fam.delta.specialize(alpha).exp(fam.h.specialize_t(alpha))
        assert fiber == direct
    assert fam.fiber(0) == fam.fiber_zero


def test_fiber_zero_is_exp_of_limit(families):
    for fam in families.values():
        assert fam.fiber_zero == fam.delta_zero.exp(fam.h_limit)
        assert fam.delta_zero.images[0].is_zero()


def test_check_limit_flags_tampering(families):
    fam = families[1]
    tampered = fam.__class__(
        l=fam.l,
        coefficients=fam.coefficients,
        delta=fam.delta,
        g2=fam.g2,
        g3=fam.g3,
        tau=fam.tau,
        tau_inv=fam.tau_inv,
        slice_potential=fam.slice_potential,
        epsilon=fam.epsilon,
        h=fam.h,
        automorphism=fam.automorphism,
        delta_zero=fam.delta_zero,
        h_limit=fam.h_limit + parse_poly("x2", arity=3),
        fiber_zero=fam.fiber_zero,
    )
    result = check_limit(tampered)
    assert not result.ok
    assert any("h_limit" in p or "limit" in p for p in result.problems)


def test_epsilon_shifts_x1_by_t_times_potential(families):
    for fam in families.values():
        t = parse_poly("t", arity=3)
        assert fam.epsilon.images[0] == parse_poly("x1", arity=3) + t * fam.slice_potential
        assert fam.epsilon.images[1] == parse_poly("x2", arity=3)
        assert fam.epsilon.images[2] == parse_poly("x3", arity=3)


def test_g2_leading_structure(families):
    for l, fam in families.items():
        # g2 = x2 - x1^2/(2t) for every l
        expected = parse_poly("x2", arity=3) + parse_poly("x1^2", arity=3) * (
            LaurentPoly.t_power(-1, Fraction(-1, 2))
        )
        assert fam.g2 == expected
