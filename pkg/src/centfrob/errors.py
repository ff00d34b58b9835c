"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(AlgebraError):
    """Operands carry different field specs."""


class UnsupportedField(AlgebraError):
    """Field spec is invalid (non-prime modulus, unknown kind)."""


class ZeroPolynomial(AlgebraError):
    """The zero polynomial was passed where a nonzero one is required."""


class DivisionByZeroPoly(AlgebraError):
    """Polynomial division by the zero polynomial."""


class BothZero(AlgebraError):
    """gcd(0, 0) is undefined."""


class IndexOutOfRange(AlgebraError, IndexError):
    """Matrix position outside the stated shape."""


class NonSquare(AlgebraError):
    """A square matrix was required."""


class SizeMismatch(AlgebraError):
    """Matrix or map shapes are incompatible for the requested operation."""


class Singular(AlgebraError):
    """Matrix is not invertible."""


class NotABasis(AlgebraError):
    """Elements fail a basis requirement (dependence, missing identity)."""


class NotClosed(AlgebraError):
    """A pairwise product escapes the span of the elements."""


class NotSplit(AlgebraError):
    """The characteristic polynomial does not split over the base field."""


class BaseMismatch(AlgebraError):
    """Embedded image of the inner algebra does not match the outer base."""


class NonGroundBase(AlgebraError):
    """Operation requires systems whose base is the ground field."""


class UnverifiedSystem(AlgebraError):
    """Operation requires a system that has passed verification."""


class DimensionTooLarge(AlgebraError):
    """Symbolic determinant refused above the supported dimension."""


class ParseError(AlgebraError):
    """Malformed JSON input."""


class ConsistencyError(AlgebraError):
    """Two internally redundant computations disagreed; indicates a bug."""
