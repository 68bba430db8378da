"""Exception types shared across the package."""


class KnotObsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(KnotObsError):
    """An input violates a documented precondition."""


class ParseError(ValidationError):
    """Text could not be parsed as a polynomial or knot expression."""


class ZeroPolynomialError(ValidationError):
    """Operation (breadth, factor, Fox-Milnor) is undefined for the zero polynomial."""


class NormalizationError(ValidationError):
    """Input is not a normalized Alexander representative (requires f(1) = +-1)."""


class NotLSpaceFormError(ValidationError):
    """Polynomial does not have alternating +-1 coefficients, so it carries no staircase."""


class UnsupportedExpressionError(ValidationError):
    """Knot expression lies outside the class supported by the requested invariant."""


class UnsupportedOrientationError(ValidationError):
    """Cable with non-positive meridian winding; no verified convention for these."""


class InsufficientDataError(KnotObsError):
    """A partial data record (germ, epsilon class) cannot answer the query."""


class RuleNotApplicableError(KnotObsError):
    """Comparison or obstruction rule's hypotheses are not met by the record."""


class JumpEvaluationError(KnotObsError):
    """Signature queried exactly at a discontinuity; carries both one-sided values."""

    def __init__(self, point, left, right):
        self.point = point
        self.left = left
        self.right = right
        super().__init__(
            f"signature has a jump at {point}: left limit {left}, right limit {right}"
        )


class AmbiguousSignatureError(KnotObsError):
    """Numeric signature could not be certified even at escalated precision."""


class FactorizationComplexityError(KnotObsError):
    """Interpolation factoring exceeded its search budget."""
