"""Exact scalars: rationals and Laurent polynomials in one parameter t.

Every coefficient in this package is either a ``Rational`` (an alias for
:class:`fractions.Fraction`, which already gives exact normalized arithmetic,
total ordering, and hashing) or a :class:`LaurentPoly`, a finitely supported
map from integer exponents of t to nonzero rationals.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import NonUnit, PoleAtZero, ZeroPolynomial

Rational = Fraction

ScalarLike = Union[int, Fraction, "LaurentPoly"]


class RingMode(enum.Enum):
    """Which base ring the coefficients are read in.

    The distinction only matters for unit tests and inverses: the units of
    Q[t] are the nonzero rationals, the units of Q[t,t^-1] are the single
    terms c*t^k with c a nonzero rational.
    """

    POLY = "Q[t]"
    LAURENT = "Q[t,t^-1]"


def format_rational(q: Fraction) -> str:
    """Canonical text for a rational: lowest terms, sign up front.

    >>> format_rational(Fraction(-4, 6))
    '-2/3'
    """
    return str(q)


class LaurentPoly:
    """A Laurent polynomial in t with rational coefficients.

    Internally a dict from exponent to nonzero coefficient; zero is the
    empty dict.  Instances are immutable and hashable.

    >>> a = LaurentPoly({-2: Fraction(-2, 3), 0: 1, 3: 5})
    >>> print(a)
    -2/3*t^-2 + 1 + 5*t^3
    >>> print(a * LaurentPoly.t_power(2))
    -2/3 + t^2 + 5*t^5
    >>> a.valuation()
    -2
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int | Fraction] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[int(exp)] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ---------------------------------------------------------------- basics

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def constant(cls, value: int | Fraction) -> LaurentPoly:
        return cls({0: Fraction(value)})

    @classmethod
    def t_power(cls, exponent: int, coeff: int | Fraction = 1) -> LaurentPoly:
        """The single term coeff * t^exponent."""
        return cls({exponent: Fraction(coeff)})

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient.

        >>> LaurentPoly({-1: 2, 4: 1}).valuation()
        -1
        """
        if not self._terms:
            raise ZeroPolynomial("the zero Laurent polynomial has no valuation")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("the zero Laurent polynomial has no degree")
        return max(self._terms)

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_regular(self) -> bool:
        """True when no negative power of t appears, so t = 0 is allowed."""
        return all(e >= 0 for e in self._terms)

    def is_rational_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def as_rational(self) -> Fraction:
        if not self.is_rational_constant():
            raise ValueError(f"{self} is not a rational constant")
        return self._terms.get(0, Fraction(0))

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _make(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return _make({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = ea + eb
                s = out.get(e, _ZERO) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _make(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            return self.unit_inverse(RingMode.LAURENT) ** (-exponent)
        result = LaurentPoly.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ----------------------------------------------------- units and division

    def is_unit(self, mode: RingMode) -> bool:
        """Unit test in the chosen base ring.

        >>> LaurentPoly.t_power(-3, 2).is_unit(RingMode.LAURENT)
        True
        >>> LaurentPoly.t_power(-3, 2).is_unit(RingMode.POLY)
        False
        """
        if len(self._terms) != 1:
            return False
        if mode is RingMode.POLY:
            return 0 in self._terms
        return True

    def unit_inverse(self, mode: RingMode) -> LaurentPoly:
        if not self.is_unit(mode):
            raise NonUnit(f"{self} is not a unit of {mode.value}")
        ((e, c),) = self._terms.items()
        return _make({-e: Fraction(1) / c})

    def exact_divide(self, divisor: LaurentPoly) -> LaurentPoly | None:
        """Exact quotient in Q[t,t^-1], or None when the division leaves a
        remainder.

        >>> num = LaurentPoly({0: 1, 2: -1})
        >>> den = LaurentPoly({-1: 1, 0: 1})
        >>> print(num.exact_divide(den))
        t - t^2
        >>> num.exact_divide(LaurentPoly({0: 1, 1: 1, 2: 1})) is None
        True
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        shift = self.valuation() - divisor.valuation()
        # After factoring out t^valuation both operands are ordinary
        # polynomials with nonzero constant term, where exactness is decided
        # by plain long division.
        rem = {e - self.valuation(): c for e, c in self._terms.items()}
        den = {e - divisor.valuation(): c for e, c in divisor._terms.items()}
        dd = max(den)
        dc = den[dd]
        quot: dict[int, Fraction] = {}
        while rem:
            rd = max(rem)
            if rd < dd:
                return None
            qe = rd - dd
            qc = rem[rd] / dc
            quot[qe] = qc
            for e, c in den.items():
                s = rem.get(e + qe, _ZERO) - qc * c
                if s:
                    rem[e + qe] = s
                else:
                    rem.pop(e + qe, None)
        return _make({e + shift: c for e, c in quot.items()})

    # ------------------------------------------------------------ evaluation

    def evaluate(self, alpha: int | Fraction) -> Fraction:
        """Value at t = alpha, exactly.

        Evaluation at 0 requires the polynomial to be regular there.

        >>> LaurentPoly({-1: 1, 1: 4}).evaluate(Fraction(1, 2))
        Fraction(4, 1)
        """
        alpha = Fraction(alpha)
        total = Fraction(0)
        for e, c in self._terms.items():
            if alpha == 0:
                if e < 0:
                    raise PoleAtZero(f"{self} has a pole at t = 0")
                if e == 0:
                    total += c
            else:
                total += c * alpha**e
        return total

    # -------------------------------------------------------------- rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                body = format_rational(abs(c))
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if abs(c) == 1 else f"{format_rational(abs(c))}*{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


_ZERO = Fraction(0)


def _make(terms: dict[int, Fraction]) -> LaurentPoly:
    out = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(out, "_terms", terms)
    return out


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    return NotImplemented
