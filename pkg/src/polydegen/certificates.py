"""Tameness and wildness certificates.

Three independent pieces of evidence about phi = exp(h*delta):

* a :class:`ConjugationCertificate` factors phi as tau o epsilon o tau_inv
  over Q[t,t^-1], which makes every fiber away from the poles of tau tame;
* a :class:`WildnessReport` decides wildness of the t = 0 fiber for arity
  three, through three residue conditions that together are equivalent to
  wildness under the stated hypotheses;
* a :class:`StabilizationCertificate` writes the arity n+1 extension of phi
  as a commutator of two triangular-type maps, a four-factor word that
  survives every specialization, t = 0 included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .derivation import TriangularDerivation
from .endo import PolyEndo
from .errors import (
    CheckFailed,
    HypothesisViolation,
    KernelViolation,
    NonUnit,
)
from .laurent import RingMode
from .multipoly import MultiPoly

WILD = "wild"
TAME = "tame"


@dataclass(frozen=True)
class WildnessReport:
    """Outcome of the three residue conditions at t = 0.

    The fiber is wild exactly when all three flags hold; with any flag
    false it is tame.  Residues are the specializations at t = 0 that the
    flags were read from.
    """

    f2_residue_nonzero: bool
    h_residue_not_in_x1: bool
    derivative_outside_ideal: bool
    f2_residue: MultiPoly
    h_residue: MultiPoly
    derivative_residue: MultiPoly
    verdict: str

    @property
    def flags(self) -> tuple[bool, bool, bool]:
        return (
            self.f2_residue_nonzero,
            self.h_residue_not_in_x1,
            self.derivative_outside_ideal,
        )


def check_wild_at_zero(delta: TriangularDerivation, h: MultiPoly) -> WildnessReport:
    """Decide wildness of the t = 0 fiber of exp(h*delta) for arity 3.

    Hypotheses (violations raise): the derivation and h are regular at
    t = 0, delta(x1) is a scalar vanishing at t = 0, and delta kills h.
    Writing bars for specialization at t = 0, the fiber is wild if and only
    if f2bar is nonzero, hbar involves x2 or x3, and the x2 derivative of
    f3bar lies outside the ideal generated by f2bar in Q[x1,x2].
    """
    if delta.arity != 3:
        raise HypothesisViolation(f"the wildness test needs arity 3, got {delta.arity}")
    if h.arity != 3:
        raise HypothesisViolation(f"h has arity {h.arity}, expected 3")
    f1, f2, f3 = delta.images
    for name, poly in (("delta(x1)", f1), ("delta(x2)", f2), ("delta(x3)", f3), ("h", h)):
        if not poly.is_t_regular():
            raise HypothesisViolation(f"{name} is not regular at t = 0")
    if not f1.is_constant():
        raise HypothesisViolation("delta(x1) must be a scalar")
    if not f1.specialize_t(0).is_zero():
        raise HypothesisViolation("delta(x1) must vanish at t = 0")
    if not delta.apply(h).is_zero():
        raise KernelViolation("h is not killed by the derivation")

    f2_bar = f2.specialize_t(0)
    f3_bar = f3.specialize_t(0)
    h_bar = h.specialize_t(0)

    flag_f2 = not f2_bar.is_zero()
    flag_h = h_bar.involves(2) or h_bar.involves(3)
    derivative = f3_bar.diff(2)
    flag_derivative = not _in_principal_ideal(derivative, f2_bar)

    verdict = WILD if (flag_f2 and flag_h and flag_derivative) else TAME
    return WildnessReport(
        f2_residue_nonzero=flag_f2,
        h_residue_not_in_x1=flag_h,
        derivative_outside_ideal=flag_derivative,
        f2_residue=f2_bar,
        h_residue=h_bar,
        derivative_residue=derivative,
        verdict=verdict,
    )


def _in_principal_ideal(poly: MultiPoly, gen: MultiPoly) -> bool:
    # membership in gen*Q[x1,x2]: with gen in Q[x1] by triangularity, divide
    # the coefficient of each power of x2 separately
    if poly.is_zero():
        return True
    if gen.is_zero():
        return False
    n = poly.arity
    slices: dict[int, MultiPoly] = {}
    for key, c in poly.terms():
        e2 = key[1]
        flat = (key[0], 0) + key[2:]
        slices[e2] = slices.get(e2, MultiPoly.zero(n)) + MultiPoly._raw(n, {flat: c})
    return all(part.exact_divide(gen) is not None for part in slices.values())


# --------------------------------------------------------------- conjugation


@dataclass(frozen=True)
class ConjugationCertificate:
    """phi = tau o epsilon o tau_inv over Q[t,t^-1], all stored exactly."""

    delta: TriangularDerivation
    h: MultiPoly
    tau: PolyEndo
    tau_inv: PolyEndo
    epsilon: PolyEndo
    slice_potential: MultiPoly
    automorphism: PolyEndo


def build_conjugation(delta: TriangularDerivation, h: MultiPoly) -> ConjugationCertificate:
    """Factor exp(h*delta) through an elementary map.

    Needs delta(x1) to be a unit scalar of Q[t,t^-1] and delta(h) = 0.
    tau collects the slice images, p is h with x1 sent to zero, and the
    identity tau o epsilon o tau_inv = exp(h*delta) is checked exactly
    before the certificate is returned.
    """
    n = delta.arity
    if h.arity != n:
        raise KernelViolation(f"h has arity {h.arity}, derivation has {n}")
    f1 = delta.images[0]
    if not f1.is_constant() or not f1.as_laurent().is_unit(RingMode.LAURENT):
        raise NonUnit(f"delta(x1) = {f1} is not a unit scalar of Q[t,t^-1]")
    if not delta.apply(h).is_zero():
        raise KernelViolation("h is not killed by the derivation")

    variables = [MultiPoly.variable(n, i) for i in range(1, n + 1)]
    tau = PolyEndo((variables[0], *delta.kernel_generators()))
    tau_inv = tau.invert_triangular()
    if not tau.verify_inverse_pair(tau_inv):
        raise CheckFailed("tau_inv failed the two-sided inverse check")

    p = h.substitute([MultiPoly.zero(n)] + variables[1:])
    if tau.apply(p) != h:
        raise CheckFailed("tau does not send the slice potential back to h")

    epsilon = PolyEndo((variables[0] + f1 * p, *variables[1:]))
    automorphism = delta.exp(h)
    if PolyEndo.compose_chain((tau, epsilon, tau_inv)) != automorphism:
        raise CheckFailed("tau o epsilon o tau_inv does not equal exp(h*delta)")

    return ConjugationCertificate(
        delta=delta,
        h=h,
        tau=tau,
        tau_inv=tau_inv,
        epsilon=epsilon,
        slice_potential=p,
        automorphism=automorphism,
    )


TRIANGULAR = "triangular"
REORDERED = "triangular-after-reordering"
OPAQUE = "opaque"

_TAME_KINDS = (TRIANGULAR, REORDERED)


def factor_kind(factor: PolyEndo, mode: RingMode) -> str:
    """Classify one factor of a tameness word.

    "triangular" in the standard variable order, "triangular-after-
    reordering" when some relabeling of the variables makes it triangular
    (elementary maps always are), "opaque" otherwise.
    """
    if factor.is_triangular(mode):
        return TRIANGULAR
    if factor.is_triangular_up_to_permutation(mode) is not None:
        return REORDERED
    return OPAQUE


@dataclass(frozen=True)
class TamenessWord:
    """A factorization of one fiber into tame-certifying factors."""

    alpha: Fraction
    factors: tuple[PolyEndo, ...]
    fiber: PolyEndo
    factor_kinds: tuple[str, ...]

    def composed(self) -> PolyEndo:
        return PolyEndo.compose_chain(self.factors)


def specialized_tameness(cert: ConjugationCertificate, alpha: int | Fraction) -> TamenessWord:
    """Specialize the conjugation at t = alpha into a three-factor word.

    The factors are (tau, epsilon, tau_inv) at alpha; their composite is
    checked against the specialized automorphism, and each factor must be
    triangular over Q, possibly after reordering the variables.  A pole of
    tau at alpha surfaces as the usual specialization error.
    """
    alpha = Fraction(alpha)
    factors = tuple(
        endo.specialize(alpha) for endo in (cert.tau, cert.epsilon, cert.tau_inv)
    )
    fiber = cert.automorphism.specialize(alpha)
    word = TamenessWord(
        alpha=alpha,
        factors=factors,
        fiber=fiber,
        factor_kinds=tuple(factor_kind(f, RingMode.POLY) for f in factors),
    )
    if word.composed() != fiber:
        raise CheckFailed(f"word at alpha = {alpha} does not compose to the fiber")
    if any(kind not in _TAME_KINDS for kind in word.factor_kinds):
        raise CheckFailed(f"word at alpha = {alpha} has a non-triangular factor")
    return word


# -------------------------------------------------------------- stabilization


@dataclass(frozen=True)
class StabilizationCertificate:
    """The arity n+1 extension of exp(h*delta) as a four-factor commutator.

    gamma shifts the fresh variable by h, rho = exp(x_{n+1}*delta), and

        extension = gamma_inv o rho_inv o gamma o rho

    holds over Q[t] and survives every specialization of t, zero included.
    The zero fiber therefore becomes a product of four tame factors one
    variable up, even when it is wild in its own arity.
    """

    delta: TriangularDerivation
    h: MultiPoly
    base: PolyEndo
    extension: PolyEndo
    gamma: PolyEndo
    rho: PolyEndo

    @property
    def factor_count(self) -> int:
        return 4

    def factor_word(self) -> tuple[PolyEndo, PolyEndo, PolyEndo, PolyEndo]:
        """(gamma_inv, rho_inv, gamma, rho), composing to the extension."""
        m = self.gamma.arity
        extended = self.delta.extend_arity(m)
        h_lift = self.h.extend_arity(m)
        new_var = MultiPoly.variable(m, m)
        gamma_inv = PolyEndo(self.gamma.images[:-1] + (new_var - h_lift,))
        rho_inv = extended.exp(-new_var)
        return (gamma_inv, rho_inv, self.gamma, self.rho)


def build_stabilization(delta: TriangularDerivation, h: MultiPoly) -> StabilizationCertificate:
    """Build and verify the commutator word one variable up.

    Works for any triangular derivation with delta(h) = 0; no unit
    condition on delta(x1) is needed, so the t = 0 data of the family is
    accepted directly.
    """
    n = delta.arity
    if h.arity != n:
        raise KernelViolation(f"h has arity {h.arity}, derivation has {n}")
    if not delta.apply(h).is_zero():
        raise KernelViolation("h is not killed by the derivation")
    m = n + 1
    extended_delta = delta.extend_arity(m)
    h_lift = h.extend_arity(m)
    new_var = MultiPoly.variable(m, m)

    base = delta.exp(h)
    extension = base.extend_arity(m)
    gamma = PolyEndo(
        tuple(MultiPoly.variable(m, i) for i in range(1, m)) + (new_var + h_lift,)
    )
    rho = extended_delta.exp(new_var)

    cert = StabilizationCertificate(
        delta=delta, h=h, base=base, extension=extension, gamma=gamma, rho=rho
    )
    gamma_inv, rho_inv, _, _ = cert.factor_word()
    if not gamma.verify_inverse_pair(gamma_inv):
        raise CheckFailed("gamma inverse check failed")
    if not rho.verify_inverse_pair(rho_inv):
        raise CheckFailed("rho inverse check failed")
    word = PolyEndo.compose_chain((gamma_inv, rho_inv, gamma, rho))
    if word != extension:
        raise CheckFailed("the four-factor word does not compose to the extension")
    return cert


# -------------------------------------------------------------- length bounds


@dataclass(frozen=True)
class LengthBounds:
    """Factor counts certified by the two constructions.

    nonzero_alpha comes from the conjugation word (three factors, valid at
    every alpha where tau stays regular); zero_alpha comes from the
    stabilization word (four factors, valid at every alpha).  That the
    bound 4 is attained at alpha = 0, in other words that three factors
    never suffice there, is a reported fact this package does not verify.
    """

    nonzero_alpha: int
    zero_alpha: int
    conjugation: ConjugationCertificate
    stabilization: StabilizationCertificate
    zero_alpha_exactness: str = "claimed"


def length_bounds(delta: TriangularDerivation, h: MultiPoly) -> LengthBounds:
    """Certify factor-count bounds for the fibers of exp(h*delta)."""
    conjugation = build_conjugation(delta, h)
    stabilization = build_stabilization(delta, h)
    return LengthBounds(
        nonzero_alpha=3,
        zero_alpha=4,
        conjugation=conjugation,
        stabilization=stabilization,
    )
