"""Exception types shared across the package."""


class PolydegenError(Exception):
    """Base class for every error raised by this package."""


class ArityMismatch(PolydegenError, ValueError):
    """Operands live over polynomial rings in different numbers of variables."""


class ZeroPolynomial(PolydegenError, ValueError):
    """A degree or valuation was requested for the zero element."""


class PoleAtZero(PolydegenError, ArithmeticError):
    """Evaluation at t = 0 hit a negative power of t."""


class NonUnit(PolydegenError, ValueError):
    """An inverse was requested for a coefficient that is not a unit."""


class NotTriangular(PolydegenError, ValueError):
    """An operation that needs a triangular map received something else."""


class KernelViolation(PolydegenError, ValueError):
    """A polynomial that must be killed by the derivation is not."""


class HypothesisViolation(PolydegenError, ValueError):
    """Input data does not satisfy the hypotheses of the requested test."""


class CheckFailed(PolydegenError, RuntimeError):
    """An internal consistency check that should never fail did fail."""


class ParseError(PolydegenError, ValueError):
    """Malformed polynomial, rational, or document text."""
