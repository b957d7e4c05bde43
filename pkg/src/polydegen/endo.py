"""Endomorphisms of Q[t,t^-1][x1,...,xn] given by their variable images.

A :class:`PolyEndo` stores the tuple (phi(x1),...,phi(xn)).  Composition
follows the usual convention (phi o psi)(xi) = phi(psi(xi)): psi's images
are rewritten through phi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ArityMismatch, NotTriangular
from .laurent import LaurentPoly, RingMode
from .multipoly import MultiPoly


@dataclass(frozen=True)
class PolyEndo:
    """An endomorphism, determined by where each variable goes.

    >>> x1 = MultiPoly.variable(2, 1)
    >>> x2 = MultiPoly.variable(2, 2)
    >>> tau = PolyEndo((x1, x2 + x1**2))
    >>> print(tau)
    (x1, x1^2 + x2)
    """

    images: tuple[MultiPoly, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise ArityMismatch("an endomorphism needs at least one image")
        for img in self.images:
            if not isinstance(img, MultiPoly):
                raise TypeError("images must be MultiPoly instances")
            if img.arity != n:
                raise ArityMismatch(f"image arity {img.arity} does not match count {n}")
        object.__setattr__(self, "images", tuple(self.images))

    @property
    def arity(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, arity: int) -> PolyEndo:
        return cls(tuple(MultiPoly.variable(arity, i) for i in range(1, arity + 1)))

    @classmethod
    def permutation(cls, arity: int, perm: Sequence[int]) -> PolyEndo:
        """The linear map x_i -> x_perm[i-1] for a permutation of 1..n."""
        if sorted(perm) != list(range(1, arity + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{arity}")
        return cls(tuple(MultiPoly.variable(arity, p) for p in perm))

    @classmethod
    def reversal(cls, arity: int) -> PolyEndo:
        """The involution x_i -> x_{n+1-i}."""
        return cls.permutation(arity, range(arity, 0, -1))

    # ------------------------------------------------------------- application

    def apply(self, poly: MultiPoly) -> MultiPoly:
        if poly.arity != self.arity:
            raise ArityMismatch(f"polynomial arity {poly.arity} vs map arity {self.arity}")
        return poly.substitute(self.images)

    def compose(self, other: PolyEndo) -> PolyEndo:
        """self o other, so (self.compose(other)).apply == apply through both."""
        if other.arity != self.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        return PolyEndo(tuple(self.apply(img) for img in other.images))

    @staticmethod
    def compose_chain(factors: Sequence[PolyEndo]) -> PolyEndo:
        """Compose factors left to right as maps: factors[0] o ... o factors[-1].

        Folds from the right, which keeps intermediates small when the
        outer factors have large images: each step substitutes the next
        factor's images into the accumulated ones, never the reverse.
        """
        if not factors:
            raise ArityMismatch("at least one factor is required")
        result = factors[-1]
        for factor in reversed(factors[:-1]):
            result = factor.compose(result)
        return result

    def is_identity(self) -> bool:
        return self == PolyEndo.identity(self.arity)

    def specialize(self, alpha: int | Fraction) -> PolyEndo:
        return PolyEndo(tuple(img.specialize_t(alpha) for img in self.images))

    def extend_arity(self, arity: int) -> PolyEndo:
        """The same map on a ring with extra later variables, fixed."""
        if arity < self.arity:
            raise ArityMismatch(f"cannot shrink arity {self.arity} to {arity}")
        images = [img.extend_arity(arity) for img in self.images]
        images += [MultiPoly.variable(arity, i) for i in range(self.arity + 1, arity + 1)]
        return PolyEndo(tuple(images))

    # ------------------------------------------------------------------ shape

    def linear_part(self) -> list[list[LaurentPoly]]:
        """Matrix of degree-one coefficients, rows indexed by images."""
        n = self.arity
        unit = [tuple(1 if j == k else 0 for j in range(n)) for k in range(n)]
        return [[img.coefficient(unit[j]) for j in range(n)] for img in self.images]

    def is_affine(self) -> bool:
        """Total degree at most one in every image, invertible linear part."""
        for img in self.images:
            if not img.is_zero() and img.total_degree() > 1:
                return False
        return not _det(self.linear_part()).is_zero()

    def is_triangular(self, mode: RingMode = RingMode.LAURENT) -> bool:
        """x_i maps to u_i*x_i + (terms in x1..x_{i-1}) with u_i a unit.

        The mode picks where the leading coefficients must be invertible.

        >>> x1 = MultiPoly.variable(2, 1)
        >>> x2 = MultiPoly.variable(2, 2)
        >>> PolyEndo((x1, x2 + x1**3)).is_triangular()
        True
        >>> PolyEndo((x1 + x2, x2)).is_triangular()
        False
        """
        n = self.arity
        for i in range(1, n + 1):
            img = self.images[i - 1]
            unit_vec = tuple(1 if j == i - 1 else 0 for j in range(n))
            lead = img.coefficient(unit_vec)
            if not lead.is_unit(mode):
                return False
            rest = img - MultiPoly.monomial(n, unit_vec, lead)
            for key, _ in rest.terms():
                if any(key[j] for j in range(i - 1, n)):
                    return False
        return True

    def is_elementary(self) -> bool:
        """At most one variable moves, and its shift avoids that variable.

        >>> x1 = MultiPoly.variable(2, 1)
        >>> x2 = MultiPoly.variable(2, 2)
        >>> PolyEndo((x1 + x2**2, x2)).is_elementary()
        True
        >>> PolyEndo((x1 + x1 * x2, x2)).is_elementary()
        False
        """
        n = self.arity
        moved = [
            i
            for i in range(1, n + 1)
            if self.images[i - 1] != MultiPoly.variable(n, i)
        ]
        if not moved:
            return True
        if len(moved) > 1:
            return False
        i = moved[0]
        shift = self.images[i - 1] - MultiPoly.variable(n, i)
        return not shift.involves(i)

    def is_triangular_up_to_permutation(
        self, mode: RingMode = RingMode.LAURENT
    ) -> tuple[int, ...] | None:
        """A variable order making the map triangular, or None.

        Returns a permutation p of 1..n such that conjugating by the linear
        map x_i -> x_{p_i} is triangular in the standard order.  Arity stays
        small here (at most five), so trying every order is fine.
        """
        for perm in itertools.permutations(range(1, self.arity + 1)):
            inverse = [0] * self.arity
            for i, p in enumerate(perm):
                inverse[p - 1] = i + 1
            front = PolyEndo.permutation(self.arity, inverse)
            back = PolyEndo.permutation(self.arity, perm)
            if front.compose(self).compose(back).is_triangular(mode):
                return perm
        return None

    # ---------------------------------------------------------------- inverses

    def invert_triangular(self, mode: RingMode = RingMode.LAURENT) -> PolyEndo:
        """Exact inverse of a triangular map by back substitution.

        >>> x1 = MultiPoly.variable(2, 1)
        >>> x2 = MultiPoly.variable(2, 2)
        >>> tau = PolyEndo((x1, x2 + x1**2))
        >>> print(tau.invert_triangular())
        (x1, -x1^2 + x2)
        """
        n = self.arity
        inverse: list[MultiPoly] = []
        for i in range(1, n + 1):
            img = self.images[i - 1]
            unit_vec = tuple(1 if j == i - 1 else 0 for j in range(n))
            lead = img.coefficient(unit_vec)
            if not lead.is_unit(mode):
                raise NotTriangular(
                    f"image {i} has non-unit leading coefficient {lead} in {mode.value}"
                )
            rest = img - MultiPoly.monomial(n, unit_vec, lead)
            for key, _ in rest.terms():
                if any(key[j] for j in range(i - 1, n)):
                    raise NotTriangular(
                        f"image {i} involves x{1 + next(j for j in range(i - 1, n) if key[j])}"
                    )
            # x_i = (phi(x_i) - rest) / lead, then push the earlier inverse
            # images through rest.
            filler = inverse + [
                MultiPoly.variable(n, j) for j in range(i, n + 1)
            ]
            shifted = rest.substitute(filler)
            inv_lead = lead.unit_inverse(mode)
            inverse.append(
                (MultiPoly.variable(n, i) - shifted)
                * MultiPoly.constant(n, inv_lead)
            )
        return PolyEndo(tuple(inverse))

    def verify_inverse_pair(self, other: PolyEndo) -> bool:
        """True when both composites are the identity, checked exactly."""
        ident = PolyEndo.identity(self.arity)
        return self.compose(other) == ident and other.compose(self) == ident

    # --------------------------------------------------------------- rendering

    def __str__(self) -> str:
        return "(" + ", ".join(str(img) for img in self.images) + ")"

    def __repr__(self) -> str:
        return f"PolyEndo{self}"


def _det(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = LaurentPoly.zero()
    sign = 1
    for j in range(n):
        entry = matrix[0][j]
        if not entry.is_zero():
            minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
            total = total + entry * _det(minor) * sign
        sign = -sign
    return total
