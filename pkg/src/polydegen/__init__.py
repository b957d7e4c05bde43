"""Exact certificates for a degenerating family of polynomial automorphisms.

The library builds automorphisms of Q[t,t^-1][x1,...,xn] as exponentials of
triangular derivations, factors each fiber at t = alpha != 0 into triangular
pieces, decides wildness of the fiber at t = 0, and writes the wild fiber as
a four-factor commutator word one variable up.  Everything is computed over
exact rationals; there is no floating point anywhere.
"""

from ._kernel import kernel_backend
from .certificates import (
    ConjugationCertificate,
    LengthBounds,
    StabilizationCertificate,
    TamenessWord,
    WildnessReport,
    build_conjugation,
    build_stabilization,
    check_wild_at_zero,
    factor_kind,
    length_bounds,
    specialized_tameness,
)
from .derivation import TriangularDerivation
from .endo import PolyEndo
from .errors import (
    ArityMismatch,
    CheckFailed,
    HypothesisViolation,
    KernelViolation,
    NonUnit,
    NotTriangular,
    ParseError,
    PoleAtZero,
    PolydegenError,
    ZeroPolynomial,
)
from .family import FamilyInstance, LimitCheck, build_family, check_limit, slice_coefficients
from .laurent import LaurentPoly, Rational, RingMode
from .multipoly import MultiPoly
from .parsing import parse_laurent, parse_poly, parse_rational

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "CheckFailed",
    "ConjugationCertificate",
    "FamilyInstance",
    "HypothesisViolation",
    "KernelViolation",
    "LaurentPoly",
    "LengthBounds",
    "LimitCheck",
    "MultiPoly",
    "NonUnit",
    "NotTriangular",
    "ParseError",
    "PoleAtZero",
    "PolyEndo",
    "PolydegenError",
    "Rational",
    "RingMode",
    "StabilizationCertificate",
    "TamenessWord",
    "TriangularDerivation",
    "WildnessReport",
    "ZeroPolynomial",
    "build_conjugation",
    "build_family",
    "build_stabilization",
    "check_limit",
    "check_wild_at_zero",
    "factor_kind",
    "kernel_backend",
    "length_bounds",
    "parse_laurent",
    "parse_poly",
    "parse_rational",
    "slice_coefficients",
    "specialized_tameness",
]
