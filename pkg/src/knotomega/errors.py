"""Exception hierarchy shared across the package.

Domain errors all derive from :class:`KnotomegaError` so the CLI can map them
to exit code 1 uniformly; argument/parse problems raise :class:`ParseError`
(exit code 2 at the CLI boundary).
"""


class KnotomegaError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(KnotomegaError):
    """Malformed textual input; carries the offending position when known."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


# ---------------------------------------------------------------- polynomial algebra

class UnsupportedRing(KnotomegaError):
    """Operation not defined over this coefficient ring or in this arity."""


class MixedRings(KnotomegaError):
    """Operands live over different coefficient rings."""


class DimensionMismatch(KnotomegaError):
    """Exponent dimensions of the operands disagree."""


class ZeroPolynomial(KnotomegaError):
    """The zero polynomial was passed where a nonzero one is required."""


class DegreeCapExceeded(KnotomegaError):
    """Univariate degree exceeds the configured factorization cap."""


class NonPrimitiveVector(KnotomegaError):
    """Exponent vector is zero or its entries have a common factor."""


class InexactDivision(KnotomegaError):
    """An exact-division step left a remainder; signals an upstream bug."""


# ---------------------------------------------------------------- braids and knots

class IndexOutOfRange(KnotomegaError):
    """Braid generator index outside 1..n-1."""


class NotAKnot(KnotomegaError):
    """The closure has more than one component."""


class NegativeGenus(KnotomegaError):
    """Euler characteristic above 1 for a connected surface; inconsistent input."""


# ---------------------------------------------------------------- grid homology

class SizeMismatch(KnotomegaError):
    """Grid state and diagram sizes disagree."""


class TooLarge(KnotomegaError):
    """Grid size exceeds the configured cap for full-complex operations."""


class GradingMismatch(KnotomegaError):
    """Chain is not homogeneous, or its grading does not match the diagram."""


# ---------------------------------------------------------------- certificates

class InvalidSeifertMatrix(KnotomegaError):
    """V - V^T is not unimodular."""


class NotNormalized(KnotomegaError):
    """Polynomial is not symmetric with value 1 at t = 1."""


class NonPrimitiveCurve(KnotomegaError):
    """Curve class is zero or non-primitive; rim surgery requires an embedded curve."""


class NegativeBase(KnotomegaError):
    """Base surface invariant is -infinity; the family formula does not apply."""


class GenusZero(KnotomegaError):
    """The surface invariant is only defined for genus at least one."""
