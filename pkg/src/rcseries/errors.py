"""Exception hierarchy shared by all rcseries modules."""


class RCSeriesError(Exception):
    """Base class for all library-specific errors."""


class StructuralError(RCSeriesError):
    """Operands are structurally incompatible (rank or group mismatch)."""


class PrecisionError(RCSeriesError):
    """A question is undecidable at the current truncation or refinement cap.

    Raised instead of ever returning a possibly-wrong answer.
    """


class DomainError(RCSeriesError):
    """An argument is outside the mathematical domain of the operation."""


class RegularityError(RCSeriesError):
    """The distinguished-variable regularity needed by preparation is absent."""
