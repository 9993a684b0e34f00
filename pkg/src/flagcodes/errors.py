"""Exception types shared across the package.

Each class names one failure mode of the public operations, so callers can
catch precisely and the CLI can map failures onto stable exit codes.
"""

from __future__ import annotations


class FlagCodesError(Exception):
    """Base class for all package-specific errors."""


class ResourceBudgetExceeded(FlagCodesError):
    """A configurable work budget ran out before the computation finished."""


# field construction and arithmetic

class NotPrime(FlagCodesError):
    """The requested characteristic is not a prime number."""


class ReducibleModulus(FlagCodesError):
    """The supplied extension modulus factors over the prime field."""


class DegreeMismatch(FlagCodesError):
    """A polynomial degree does not match what the operation requires."""


class FieldMismatch(FlagCodesError):
    """Operands belong to different fields."""


class DivisionByZero(FlagCodesError, ZeroDivisionError):
    """Division or inversion of the zero element."""


class NonMonic(FlagCodesError):
    """The operation requires a monic polynomial."""


class Reducible(FlagCodesError):
    """The operation requires an irreducible polynomial."""


class FactorizationTooLarge(ResourceBudgetExceeded):
    """Trial division could not certify a factorization within its budget."""


# matrices

class DimMismatch(FlagCodesError):
    """Matrix dimensions are incompatible with the operation."""


class SliceOutOfRange(FlagCodesError):
    """A 1-based row-slice request falls outside the matrix."""


class BlockDimMismatch(FlagCodesError):
    """Block assembly received cells with inconsistent dimensions."""


class Singular(FlagCodesError):
    """The matrix must be invertible."""


class OrderCapExceeded(ResourceBudgetExceeded):
    """Multiplicative-order search exceeded its iteration cap."""


# subspaces and codes

class ZeroRank(FlagCodesError):
    """A subspace needs a generator matrix of nonzero rank."""


class AmbientMismatch(FlagCodesError):
    """Subspaces live in different ambient spaces."""


class TooFewWords(FlagCodesError):
    """A subspace code needs at least two words for this operation."""


class NotConstantDim(FlagCodesError):
    """The operation is defined only for constant dimension codes."""


class HypothesisUnmet(FlagCodesError):
    """The closed-form bound does not apply to these parameters."""


# flags

class RankDeficientPrefix(FlagCodesError):
    """Some row prefix of the generator matrix has deficient rank."""


class TooFewRows(FlagCodesError):
    """The generator matrix has fewer rows than the type vector needs."""


class TypeMismatch(FlagCodesError):
    """Flags have different type vectors."""


class TooFewFlags(FlagCodesError):
    """A flag code needs at least two flags for this operation."""


class IndexOutOfRange(FlagCodesError):
    """A projected-code index falls outside the type vector."""


class NotASubsequence(FlagCodesError):
    """The requested type vector is not a subsequence of the code's type."""


class EllOutOfRange(FlagCodesError):
    """The split depth falls outside the admissible range."""


# constructions

class TheoremViolated(FlagCodesError):
    """A property the construction guarantees failed to hold; this signals
    an implementation bug or an input outside the guaranteed range."""


class CardinalityMismatch(TheoremViolated):
    """A constructed family has a different size than its closed form."""
