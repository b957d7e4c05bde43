"""The degenerating family.

For each l >= 1 there is a triangular derivation

    delta = (t, x1, -(l+1)*x2^l)

over Q[t], a kernel element h built from a slice potential p, and the
automorphism phi = exp(h*delta) of Q[t,t^-1][x1,x2,x3].  Away from t = 0
phi is conjugate to the elementary shift (x1 + t*p, x2, x3) by the
triangular map tau = (x1, g2, g3), so every fiber there is tame.  All the
data is regular at t = 0, and the limit fiber is exp(h_limit * delta_0)
with delta_0 = (0, x1, -(l+1)*x2^l), which fails to be tame (see
certificates.check_wild_at_zero).

build_family constructs all of this exactly and cross-checks every identity
it states; a FamilyInstance that comes out of it is fully verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .derivation import TriangularDerivation
from .endo import PolyEndo
from .errors import CheckFailed, PolydegenError
from .laurent import LaurentPoly
from .multipoly import MultiPoly


@dataclass(frozen=True)
class FamilyInstance:
    """All exact data attached to one value of l."""

    l: int
    coefficients: tuple[Fraction, ...]
    delta: TriangularDerivation
    g2: MultiPoly
    g3: MultiPoly
    tau: PolyEndo
    tau_inv: PolyEndo
    slice_potential: MultiPoly
    epsilon: PolyEndo
    h: MultiPoly
    automorphism: PolyEndo
    delta_zero: TriangularDerivation
    h_limit: MultiPoly
    fiber_zero: PolyEndo

    def fiber(self, alpha: int | Fraction) -> PolyEndo:
        """The specialized automorphism at t = alpha."""
        return self.automorphism.specialize(alpha)


def slice_coefficients(l: int) -> tuple[Fraction, ...]:
    """The coefficients (c_0,...,c_l) of g3, from the recurrence
    c_0 = l+1 and (2i+1)*c_i = -(l-i+1)*c_{i-1}.

    >>> slice_coefficients(1)
    (Fraction(2, 1), Fraction(-2, 3))
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    coeffs = [Fraction(l + 1)]
    for i in range(1, l + 1):
        coeffs.append(Fraction(-(l - i + 1), 2 * i + 1) * coeffs[i - 1])
    return tuple(coeffs)


def build_family(l: int) -> FamilyInstance:
    """Construct and verify the family member for a given l >= 1.

    Every stated identity is checked exactly during construction, so a
    returned instance needs no further trust.
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    n = 3
    x1 = MultiPoly.variable(n, 1)
    x2 = MultiPoly.variable(n, 2)
    x3 = MultiPoly.variable(n, 3)
    t = MultiPoly.parameter(n)

    delta = TriangularDerivation((t, x1, -(l + 1) * x2**l))
    coeffs = slice_coefficients(l)

    g2 = x2 - x1**2 * MultiPoly.constant(n, LaurentPoly.t_power(-1, Fraction(1, 2)))
    g3 = x3
    for i in range(l + 1):
        g3 = g3 + MultiPoly.monomial(
            n, (2 * i + 1, l - i, 0), LaurentPoly.t_power(-(i + 1), coeffs[i])
        )

    sigma2, sigma3 = delta.kernel_generators()
    if (sigma2, sigma3) != (g2, g3):
        raise CheckFailed("closed formulas for g2, g3 disagree with the slice images")
    for name, poly in (("g2", g2), ("g3", g3)):
        if not delta.apply(poly).is_zero():
            raise CheckFailed(f"{name} is not killed by the derivation")

    tau = PolyEndo((x1, g2, g3))
    tau_inv = tau.invert_triangular()
    if not tau.verify_inverse_pair(tau_inv):
        raise CheckFailed("tau_inv failed the two-sided inverse check")

    c_l = coeffs[l]
    p = (
        ((2 * x2) ** (2 * l + 1) + t * (x3 / c_l) ** 2)
        * MultiPoly.constant(n, LaurentPoly.t_power(l, c_l / 2))
    )
    h = tau.apply(p)
    if not delta.apply(h).is_zero():
        raise CheckFailed("h = tau(p) is not killed by the derivation")
    zero = MultiPoly.zero(n)
    if h.substitute([zero, x2, x3]) != p:
        raise CheckFailed("p does not match h restricted to x1 = 0")

    epsilon = PolyEndo((x1 + t * p, x2, x3))
    automorphism = delta.exp(h)
    if PolyEndo.compose_chain((tau, epsilon, tau_inv)) != automorphism:
        raise CheckFailed("conjugation identity tau o epsilon o tau_inv = exp(h*delta) failed")

    if not h.is_t_regular():
        raise CheckFailed("h is not regular at t = 0")
    h_limit = h.specialize_t(0)
    if h_limit != x1 ** (2 * l) * (x1 * x3 + x2 ** (l + 1)):
        raise CheckFailed("h at t = 0 does not match its closed form")

    delta_zero = delta.specialize(0)
    fiber_zero = automorphism.specialize(0)
    if fiber_zero != delta_zero.exp(h_limit):
        raise CheckFailed("the t = 0 fiber is not exp(h_limit * delta_0)")

    return FamilyInstance(
        l=l,
        coefficients=coeffs,
        delta=delta,
        g2=g2,
        g3=g3,
        tau=tau,
        tau_inv=tau_inv,
        slice_potential=p,
        epsilon=epsilon,
        h=h,
        automorphism=automorphism,
        delta_zero=delta_zero,
        h_limit=h_limit,
        fiber_zero=fiber_zero,
    )


@dataclass(frozen=True)
class LimitCheck:
    """Outcome of check_limit; problems name the offending monomials."""

    ok: bool
    problems: tuple[str, ...]


def check_limit(fam: FamilyInstance) -> LimitCheck:
    """Recheck the degeneration data of a family instance.

    Works from the stored fields rather than rebuilding, so it also serves
    to detect tampering: regularity of h, the value and closed form of the
    limit, the leading-term decomposition of h, and the exponential shape
    of the fiber at zero are all recomputed.
    """
    problems: list[str] = []
    n = 3
    x1 = MultiPoly.variable(n, 1)
    x2 = MultiPoly.variable(n, 2)
    x3 = MultiPoly.variable(n, 3)
    l = fam.l

    for key, _ in fam.h.terms():
        if key[n] < 0:
            problems.append(f"h has a pole at t = 0 in the term {_term_name(key)}")
    if not problems:
        if fam.h.specialize_t(0) != fam.h_limit:
            problems.append("stored h_limit differs from h at t = 0")
    if fam.h_limit != x1 ** (2 * l) * (x1 * x3 + x2 ** (l + 1)):
        problems.append("h_limit does not equal x1^(2l)*(x1*x3 + x2^(l+1))")

    problems.extend(limit_shape_problems(fam.h, l, fam.coefficients[l]))

    if fam.delta_zero.images != tuple(img.specialize_t(0) for img in fam.delta.images):
        problems.append("stored delta_zero differs from the derivation at t = 0")
    try:
        if fam.automorphism.specialize(0) != fam.fiber_zero:
            problems.append("stored fiber at zero differs from the automorphism at t = 0")
    except PolydegenError as exc:
        problems.append(str(exc))
    try:
        if fam.fiber_zero != fam.delta_zero.exp(fam.h_limit):
            problems.append("fiber at zero is not exp(h_limit * delta_zero)")
    except PolydegenError as exc:
        problems.append(str(exc))

    return LimitCheck(ok=not problems, problems=tuple(problems))


def limit_shape_problems(h: MultiPoly, l: int, c_l: Fraction) -> tuple[str, ...]:
    """Check the leading-term decomposition that forces the degeneration.

    h must split as t^(l+1)/(2*c_l) * x3^2 + x1^(2l+1)*x3 + q where q lies
    in x2*Q[t,t^-1][x1,x2] + t*x3*Q[t][x1,x2].  Returns one message per
    violating term, empty when the shape holds.
    """
    n = 3
    lead = MultiPoly.monomial(n, (0, 0, 2), LaurentPoly.t_power(l + 1, Fraction(1, 2) / c_l))
    lead = lead + MultiPoly.monomial(n, (2 * l + 1, 0, 1))
    problems: list[str] = []
    q = h - lead
    for key, _ in sorted(q.terms()):
        e3 = key[2]
        if e3 == 0:
            if key[1] == 0:
                problems.append(f"remainder term {_term_name(key)} misses the x2 factor")
        elif e3 == 1:
            if key[n] < 1:
                problems.append(f"remainder term {_term_name(key)} misses the t factor")
        else:
            problems.append(f"remainder term {_term_name(key)} has x3 degree {e3}")
    return tuple(problems)


def _term_name(key: tuple) -> str:
    pieces = []
    for i, e in enumerate(key[:-1], start=1):
        if e == 1:
            pieces.append(f"x{i}")
        elif e:
            pieces.append(f"x{i}^{e}")
    e = key[-1]
    if e == 1:
        pieces.insert(0, "t")
    elif e:
        pieces.insert(0, f"t^{e}")
    return "*".join(pieces) if pieces else "1"
