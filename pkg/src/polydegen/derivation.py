"""Triangular derivations and their exponentials.

A derivation here is determined by the images f_i of the variables, with
the triangularity constraint that f_i only involves x_1..x_{i-1}.  Repeated
application therefore strictly lowers a weighted degree, every orbit of a
polynomial terminates at zero, and exponential sums are finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch, KernelViolation, NonUnit, NotTriangular
from .laurent import LaurentPoly, RingMode
from .multipoly import MultiPoly

# Triangularity bounds every nilpotency index that can occur here by a
# product of per-variable degrees; anything past this cap is a logic error,
# not a big example.
_NILPOTENCY_CAP = 10_000


@dataclass(frozen=True)
class TriangularDerivation:
    """The derivation sending x_i to images[i-1].

    >>> t = MultiPoly.constant(3, LaurentPoly.t_power(1))
    >>> x1 = MultiPoly.variable(3, 1)
    >>> x2 = MultiPoly.variable(3, 2)
    >>> delta = TriangularDerivation((t, x1, -2 * x2))
    >>> print(delta.apply(x2 * x2))
    2*x1*x2
    """

    images: tuple[MultiPoly, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise ArityMismatch("a derivation needs at least one image")
        for i, img in enumerate(self.images, start=1):
            if not isinstance(img, MultiPoly):
                raise TypeError("images must be MultiPoly instances")
            if img.arity != n:
                raise ArityMismatch(f"image arity {img.arity} does not match count {n}")
            for j in range(i, n + 1):
                if img.involves(j):
                    raise NotTriangular(f"image of x{i} involves x{j}")
        object.__setattr__(self, "images", tuple(self.images))

    @property
    def arity(self) -> int:
        return len(self.images)

    # ------------------------------------------------------------- application

    def apply(self, poly: MultiPoly) -> MultiPoly:
        """Leibniz extension: sum of f_i * d(poly)/dx_i."""
        if poly.arity != self.arity:
            raise ArityMismatch(f"polynomial arity {poly.arity} vs derivation arity {self.arity}")
        total = MultiPoly.zero(self.arity)
        for i, f in enumerate(self.images, start=1):
            if not f.is_zero():
                total = total + f * poly.diff(i)
        return total

    def nilpotency_exponent(self, poly: MultiPoly) -> int:
        """Smallest k with delta^k(poly) = 0.

        >>> t = MultiPoly.constant(3, LaurentPoly.t_power(1))
        >>> x1 = MultiPoly.variable(3, 1)
        >>> x2 = MultiPoly.variable(3, 2)
        >>> delta = TriangularDerivation((t, x1, -2 * x2))
        >>> delta.nilpotency_exponent(MultiPoly.variable(3, 3))
        4
        """
        current = poly
        k = 0
        while not current.is_zero():
            current = self.apply(current)
            k += 1
            if k > _NILPOTENCY_CAP:
                raise RuntimeError("derivation does not appear nilpotent; triangularity broken")
        return k

    # ------------------------------------------------------------ exponential

    def exp(self, h: MultiPoly | None = None):
        """The automorphism exp(h*delta), with h in the kernel of delta.

        Omitting h means h = 1.  Images are the finite sums
        sum_k h^k delta^k(x_i) / k!, and the result is returned as a
        PolyEndo.

        >>> t = MultiPoly.constant(3, LaurentPoly.t_power(1))
        >>> x1 = MultiPoly.variable(3, 1)
        >>> x2 = MultiPoly.variable(3, 2)
        >>> delta = TriangularDerivation((t, x1, -2 * x2))
        >>> print(delta.exp().images[1])
        x1 + x2 + (1/2*t)
        """
        from .endo import PolyEndo

        n = self.arity
        if h is None:
            h = MultiPoly.one(n)
        if h.arity != n:
            raise ArityMismatch(f"h has arity {h.arity}, derivation has {n}")
        if not self.apply(h).is_zero():
            raise KernelViolation("h is not killed by the derivation")
        images = []
        for i in range(1, n + 1):
            term = MultiPoly.variable(n, i)
            total = term
            k = 0
            h_power = MultiPoly.one(n)
            while True:
                term = self.apply(term)
                if term.is_zero():
                    break
                k += 1
                h_power = h_power * h
                if h_power.is_zero():
                    break
                total = total + h_power * term * Fraction(1, math.factorial(k))
            images.append(total)
        return PolyEndo(tuple(images))

    # ------------------------------------------------------------------ slice

    def sigma(self, poly: MultiPoly) -> MultiPoly:
        """Projection onto the kernel along the slice variable x1.

        Requires f1 = delta(x1) to be a scalar unit of Q[t,t^-1].  The value
        is sum_k delta^k(poly)/k! * (-x1/f1)^k, which kills x1, fixes the
        kernel pointwise, and is a ring homomorphism onto the kernel.

        >>> t = MultiPoly.constant(3, LaurentPoly.t_power(1))
        >>> x1 = MultiPoly.variable(3, 1)
        >>> x2 = MultiPoly.variable(3, 2)
        >>> delta = TriangularDerivation((t, x1, -2 * x2))
        >>> print(delta.sigma(x2))
        (-1/2*t^-1)*x1^2 + x2
        """
        n = self.arity
        if poly.arity != n:
            raise ArityMismatch(f"polynomial arity {poly.arity} vs derivation arity {n}")
        f1 = self.images[0]
        if not f1.is_constant():
            raise NonUnit("delta(x1) must be a scalar to define the slice")
        f1_scalar = f1.as_laurent()
        if not f1_scalar.is_unit(RingMode.LAURENT):
            raise NonUnit(f"delta(x1) = {f1_scalar} is not a unit of Q[t,t^-1]")
        ratio = MultiPoly.monomial(n, (1,) + (0,) * (n - 1), f1_scalar.unit_inverse(RingMode.LAURENT))
        total = poly
        term = poly
        power = MultiPoly.one(n)
        k = 0
        while True:
            term = self.apply(term)
            if term.is_zero():
                break
            k += 1
            power = power * ratio
            sign = Fraction(-1, 1) ** k
            total = total + term * power * (sign / math.factorial(k))
        return total

    def kernel_generators(self) -> tuple[MultiPoly, ...]:
        """The slice images (sigma(x2),...,sigma(xn)).

        Together with the scalars these generate the kernel of the
        derivation, and substituting them for x2..xn is exactly sigma.
        """
        return tuple(self.sigma(MultiPoly.variable(self.arity, i)) for i in range(2, self.arity + 1))

    # ------------------------------------------------------------------ misc

    def specialize(self, alpha: int | Fraction) -> TriangularDerivation:
        return TriangularDerivation(tuple(img.specialize_t(alpha) for img in self.images))

    def extend_arity(self, arity: int) -> TriangularDerivation:
        """Extend by later variables that map to zero."""
        if arity < self.arity:
            raise ArityMismatch(f"cannot shrink arity {self.arity} to {arity}")
        images = [img.extend_arity(arity) for img in self.images]
        images += [MultiPoly.zero(arity)] * (arity - self.arity)
        return TriangularDerivation(tuple(images))

    def __str__(self) -> str:
        return "(" + ", ".join(str(img) for img in self.images) + ")"

    def __repr__(self) -> str:
        return f"TriangularDerivation{self}"
