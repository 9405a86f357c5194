"""Exception types raised by the library's validation layers."""


class DimensionError(ValueError):
    """Operands or data have incompatible dimensions/shapes."""


class DegenerateVectorError(ValueError):
    """A zero-length vector was given where a direction is required."""


class NonDifferentiableError(ValueError):
    """Derivative requested for an activation that has none (step, signum)."""


class EmptyDataError(ValueError):
    """A training operation received an empty dataset."""


class LabelDomainError(ValueError):
    """A target label lies outside the activation's output alphabet."""


class DataFormatError(ValueError):
    """A data or model file could not be parsed."""


class GenerationError(RuntimeError):
    """A synthetic-data generator exhausted its retry budget."""


class InsufficientHistoryError(ValueError):
    """A report does not span enough epochs for the requested analysis."""
