"""Sparse multivariate polynomials over Q[t,t^-1].

A :class:`MultiPoly` of arity n lives in Q[t,t^-1][x1,...,xn].  Terms are
stored flat: the key is a tuple (e1,...,en,et) where the first n entries are
the (nonnegative) variable exponents and the last entry is the exponent of
t, which may be negative.  Folding t into the key keeps multiplication a
single merge loop, which is what the compiled kernel accelerates.

Variables are numbered from 1, matching the text form x1, x2, ...  The
monomial order used for rendering and for division is graded lexicographic
with x1 > x2 > ... > xn, higher total degree first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

from . import _kernel as K
from .errors import ArityMismatch, NonUnit, PoleAtZero, ZeroPolynomial
from .laurent import LaurentPoly, RingMode, format_rational

PolyLike = Union[int, Fraction, LaurentPoly, "MultiPoly"]


class MultiPoly:
    """An element of Q[t,t^-1][x1,...,xn], immutable and hashable.

    >>> x1 = MultiPoly.variable(2, 1)
    >>> x2 = MultiPoly.variable(2, 2)
    >>> t = MultiPoly.parameter(2)
    >>> print(x2 - x1**2 * t**-1 * Fraction(1, 2))
    (-1/2*t^-1)*x1^2 + x2
    >>> print((x1 + x2) * (x1 - x2))
    x1^2 - x2^2
    """

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[tuple, int | Fraction] | None = None):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        clean: dict[tuple, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                key = tuple(int(e) for e in key)
                if len(key) != arity + 1:
                    raise ArityMismatch(
                        f"term key {key} has length {len(key)}, expected {arity + 1}"
                    )
                if any(e < 0 for e in key[:arity]):
                    raise ValueError(f"negative variable exponent in {key}")
                c = Fraction(coeff)
                if c:
                    clean[key] = clean.get(key, _ZERO) + c
                    if not clean[key]:
                        del clean[key]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @staticmethod
    def _raw(arity: int, terms: dict[tuple, Fraction]) -> MultiPoly:
        # internal fast path: terms already canonical
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "arity", arity)
        object.__setattr__(out, "_terms", terms)
        return out

    # ------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, arity: int) -> MultiPoly:
        return cls(arity)

    @classmethod
    def one(cls, arity: int) -> MultiPoly:
        return cls.constant(arity, 1)

    @classmethod
    def constant(cls, arity: int, value: int | Fraction | LaurentPoly) -> MultiPoly:
        """Embed a scalar, so the variables do not occur.

        >>> print(MultiPoly.constant(2, LaurentPoly({-1: 1, 2: 3})))
        (t^-1 + 3*t^2)
        """
        if isinstance(value, LaurentPoly):
            zeros = (0,) * arity
            return cls._raw(arity, {zeros + (e,): c for e, c in value.items()})
        c = Fraction(value)
        if not c:
            return cls(arity)
        return cls._raw(arity, {(0,) * arity + (0,): c})

    @classmethod
    def variable(cls, arity: int, index: int) -> MultiPoly:
        """The variable x_index, with 1 <= index <= arity."""
        if not 1 <= index <= arity:
            raise ArityMismatch(f"variable index {index} out of range for arity {arity}")
        key = tuple(1 if i == index - 1 else 0 for i in range(arity)) + (0,)
        return cls._raw(arity, {key: Fraction(1)})

    @classmethod
    def parameter(cls, arity: int) -> MultiPoly:
        """The parameter t as a constant polynomial."""
        return cls._raw(arity, {(0,) * arity + (1,): Fraction(1)})

    @classmethod
    def monomial(
        cls,
        arity: int,
        powers: Sequence[int],
        coeff: int | Fraction | LaurentPoly = 1,
    ) -> MultiPoly:
        """coeff * x1^p1 * ... * xn^pn.

        >>> print(MultiPoly.monomial(3, (2, 0, 1), Fraction(-1, 3)))
        -1/3*x1^2*x3
        """
        if len(powers) != arity:
            raise ArityMismatch(f"{len(powers)} powers for arity {arity}")
        base = cls.constant(arity, coeff)
        xs = tuple(int(p) for p in powers)
        if any(p < 0 for p in xs):
            raise ValueError("variable exponents must be nonnegative")
        return cls._raw(
            arity, {tuple(a + b for a, b in zip(key, xs + (0,))): c for key, c in base._terms.items()}
        )

    # ---------------------------------------------------------------- queries

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = self._coerce_eq(other)
        if other is NotImplemented:
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._terms.items())))

    def _coerce_eq(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return MultiPoly.constant(self.arity, other)
        return NotImplemented

    def term_count(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[tuple, Fraction]]:
        """Flat terms ((e1,...,en,et), coefficient), unordered."""
        return iter(self._terms.items())

    def laurent_terms(self) -> list[tuple[tuple, LaurentPoly]]:
        """Terms grouped by variable monomial, graded-lex descending.

        Each entry is ((e1,...,en), coefficient in Q[t,t^-1]).
        """
        grouped: dict[tuple, dict[int, Fraction]] = {}
        n = self.arity
        for key, c in self._terms.items():
            grouped.setdefault(key[:n], {})[key[n]] = c
        ordered = sorted(grouped, key=lambda p: (sum(p), p), reverse=True)
        from .laurent import _make as _laurent_make

        return [(p, _laurent_make(grouped[p])) for p in ordered]

    def coefficient(self, powers: Sequence[int]) -> LaurentPoly:
        """The Q[t,t^-1] coefficient of x1^p1*...*xn^pn.

        >>> p = MultiPoly(2, {(1, 0, -1): Fraction(1, 2), (1, 0, 0): 3})
        >>> print(p.coefficient((1, 0)))
        1/2*t^-1 + 3
        """
        if len(powers) != self.arity:
            raise ArityMismatch(f"{len(powers)} powers for arity {self.arity}")
        xs = tuple(int(p) for p in powers)
        out = {key[self.arity]: c for key, c in self._terms.items() if key[: self.arity] == xs}
        from .laurent import _make as _laurent_make

        return _laurent_make(out)

    def constant_laurent(self) -> LaurentPoly:
        """Coefficient of the empty monomial."""
        return self.coefficient((0,) * self.arity)

    def is_constant(self) -> bool:
        """True when no variable occurs (scalars in t are allowed)."""
        n = self.arity
        return all(not any(key[:n]) for key in self._terms)

    def as_laurent(self) -> LaurentPoly:
        if not self.is_constant():
            raise ValueError(f"{self} involves variables")
        return self.constant_laurent()

    def degree_in(self, index: int) -> int:
        """Degree in the variable x_index; the zero polynomial has none.

        >>> MultiPoly(2, {(2, 1, 0): 1, (0, 3, -1): 2}).degree_in(2)
        3
        """
        if not 1 <= index <= self.arity:
            raise ArityMismatch(f"variable index {index} out of range for arity {self.arity}")
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(key[index - 1] for key in self._terms)

    def total_degree(self) -> int:
        """Total degree in the variables (t does not count)."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        n = self.arity
        return max(sum(key[:n]) for key in self._terms)

    def involves(self, index: int) -> bool:
        """True when x_index occurs in some term."""
        if not 1 <= index <= self.arity:
            raise ArityMismatch(f"variable index {index} out of range for arity {self.arity}")
        return any(key[index - 1] for key in self._terms)

    def is_t_regular(self) -> bool:
        """True when no negative power of t occurs anywhere."""
        n = self.arity
        return all(key[n] >= 0 for key in self._terms)

    # ------------------------------------------------------------- arithmetic

    def _coerce(self, other) -> MultiPoly:
        other = self._coerce_eq(other)
        if other is NotImplemented:
            return NotImplemented
        if other.arity != self.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        return other

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return MultiPoly._raw(self.arity, K.add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.arity, K.neg_terms(self._terms))

    def __sub__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return MultiPoly._raw(self.arity, K.sub_terms(self._terms, other._terms))

    def __rsub__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return MultiPoly._raw(self.arity, K.sub_terms(other._terms, self._terms))

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            return MultiPoly._raw(self.arity, K.scale_terms(self._terms, Fraction(other)))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return MultiPoly._raw(self.arity, K.mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __truediv__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / c)
        if isinstance(other, LaurentPoly):
            return self * MultiPoly.constant(self.arity, other.unit_inverse(RingMode.LAURENT))
        return NotImplemented

    def __pow__(self, exponent: int) -> MultiPoly:
        if exponent < 0:
            if self.is_constant():
                inv = self.as_laurent().unit_inverse(RingMode.LAURENT)
                return MultiPoly.constant(self.arity, inv) ** (-exponent)
            raise NonUnit("negative powers need a unit base")
        result = MultiPoly.one(self.arity)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ------------------------------------------------------------- operations

    def diff(self, index: int) -> MultiPoly:
        """Partial derivative with respect to x_index.

        >>> p = MultiPoly(2, {(2, 1, 0): 1, (0, 0, 3): 5})
        >>> print(p.diff(1))
        2*x1*x2
        """
        if not 1 <= index <= self.arity:
            raise ArityMismatch(f"variable index {index} out of range for arity {self.arity}")
        i = index - 1
        out: dict[tuple, Fraction] = {}
        for key, c in self._terms.items():
            e = key[i]
            if e:
                out[key[:i] + (e - 1,) + key[i + 1 :]] = c * e
        return MultiPoly._raw(self.arity, out)

    def substitute(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Evaluate at x_i = images[i-1]; t is carried along unchanged.

        All images must share one arity, which becomes the arity of the
        result.  Terms are grouped one variable at a time and each image's
        powers are computed once per call, shared across all groups; that
        keeps repeated substitution of large images linear in the number
        of groups rather than quadratic.

        >>> p = MultiPoly(2, {(2, 0, 0): 1, (0, 1, 0): 1})
        >>> y1 = MultiPoly.variable(1, 1)
        >>> print(p.substitute([y1 + 1, y1 * y1]))
        2*x1^2 + 2*x1 + 1
        """
        if len(images) != self.arity:
            raise ArityMismatch(f"{len(images)} images for arity {self.arity}")
        if not images:
            raise ArityMismatch("at least one image is required")
        m = images[0].arity
        for img in images:
            if not isinstance(img, MultiPoly):
                raise TypeError("images must be MultiPoly instances")
            if img.arity != m:
                raise ArityMismatch("images have mixed arities")
        if not self._terms:
            return MultiPoly.zero(m)
        return _Substitution(self.arity, images, m).run(self._terms, 0)

    def exact_divide(self, divisor: MultiPoly) -> MultiPoly | None:
        """Exact quotient with coefficients in Q[t,t^-1], or None.

        Division eliminates leading terms in graded-lex order; a leading
        monomial that is not componentwise divisible, or a leading Laurent
        coefficient that does not divide exactly, means no quotient exists
        in this module and None is returned.

        >>> x1 = MultiPoly.variable(2, 1)
        >>> x2 = MultiPoly.variable(2, 2)
        >>> q = (x1**2 - x2**2).exact_divide(x1 + x2)
        >>> print(q)
        x1 - x2
        >>> (x1**2 + x2).exact_divide(x1 + x2) is None
        True
        """
        other = self._coerce(divisor)
        if other is NotImplemented:
            raise TypeError("divisor must be a polynomial")
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return MultiPoly.zero(self.arity)
        d_x, d_c = other._leading_laurent()
        quotient = MultiPoly.zero(self.arity)
        rem = self
        while not rem.is_zero():
            r_x, r_c = rem._leading_laurent()
            gap = tuple(a - b for a, b in zip(r_x, d_x))
            if any(g < 0 for g in gap):
                return None
            qc = r_c.exact_divide(d_c)
            if qc is None:
                return None
            mono = MultiPoly.monomial(self.arity, gap, qc)
            quotient = quotient + mono
            rem = rem - mono * other
        return quotient

    def _leading_laurent(self) -> tuple[tuple, LaurentPoly]:
        n = self.arity
        lead = max((key[:n] for key in self._terms), key=lambda p: (sum(p), p))
        return lead, self.coefficient(lead)

    def specialize_t(self, alpha: int | Fraction) -> MultiPoly:
        """Substitute a rational value for t.

        Specializing at 0 requires every coefficient to be regular there;
        otherwise the offending monomial is named in the error.

        >>> p = MultiPoly(2, {(1, 0, 1): 1, (0, 1, 0): 2})
        >>> print(p.specialize_t(Fraction(1, 2)))
        1/2*x1 + 2*x2
        """
        alpha = Fraction(alpha)
        n = self.arity
        out: dict[tuple, Fraction] = {}
        for key, c in self._terms.items():
            e = key[n]
            if alpha == 0:
                if e < 0:
                    raise PoleAtZero(
                        f"coefficient of {_monomial_str(key[:n]) or '1'} has a pole at t = 0"
                    )
                if e > 0:
                    continue
                value = c
            else:
                value = c * alpha**e
            flat = key[:n] + (0,)
            s = out.get(flat, _ZERO) + value
            if s:
                out[flat] = s
            else:
                out.pop(flat, None)
        return MultiPoly._raw(n, out)

    def extend_arity(self, arity: int) -> MultiPoly:
        """View this polynomial inside a ring with extra later variables."""
        if arity < self.arity:
            raise ArityMismatch(f"cannot shrink arity {self.arity} to {arity}")
        if arity == self.arity:
            return self
        pad = (0,) * (arity - self.arity)
        n = self.arity
        return MultiPoly._raw(
            arity, {key[:n] + pad + (key[n],): c for key, c in self._terms.items()}
        )

    # -------------------------------------------------------------- rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for powers, lc in self.laurent_terms():
            mono = _monomial_str(powers)
            negative = False
            if lc.is_rational_constant():
                q = lc.as_rational()
                negative = q < 0
                if mono and abs(q) == 1:
                    body = mono
                elif mono:
                    body = f"{format_rational(abs(q))}*{mono}"
                else:
                    body = format_rational(abs(q))
            else:
                body = f"({lc})*{mono}" if mono else f"({lc})"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f" - {body}" if negative else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}, '{self}')"


def _monomial_str(powers: tuple) -> str:
    pieces = []
    for i, e in enumerate(powers, start=1):
        if e == 1:
            pieces.append(f"x{i}")
        elif e:
            pieces.append(f"x{i}^{e}")
    return "*".join(pieces)


class _Substitution:
    """One substitution pass; power tables are shared across all groups."""

    def __init__(self, n: int, images: Sequence[MultiPoly], m: int):
        self.n = n
        self.images = images
        self.m = m
        self._tables: list[list[MultiPoly]] = [[MultiPoly.one(m), img] for img in images]

    def power(self, i: int, e: int) -> MultiPoly:
        table = self._tables[i]
        while len(table) <= e:
            table.append(table[-1] * self.images[i])
        return table[e]

    def run(self, terms: dict[tuple, Fraction], i: int) -> MultiPoly:
        n = self.n
        if i == n:
            out: dict[tuple, Fraction] = {}
            zeros = (0,) * self.m
            for key, c in terms.items():
                flat = zeros + (key[n],)
                s = out.get(flat, _ZERO) + c
                if s:
                    out[flat] = s
                else:
                    out.pop(flat, None)
            return MultiPoly._raw(self.m, out)
        groups: dict[int, dict[tuple, Fraction]] = {}
        for key, c in terms.items():
            groups.setdefault(key[i], {})[key[:i] + (0,) + key[i + 1 :]] = c
        total = MultiPoly.zero(self.m)
        for e in sorted(groups, reverse=True):
            part = self.run(groups[e], i + 1)
            total = total + (part if e == 0 else part * self.power(i, e))
        return total


_ZERO = Fraction(0)
