"""Exception hierarchy shared by all modules."""


class VermaError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(VermaError, ValueError):
    """Malformed or out-of-range arguments."""


class NotInParabolicError(VermaError, ValueError):
    """A Lie algebra element was expected to lie in the parabolic subalgebra."""


class TruncationError(VermaError):
    """An action would leave the truncated module it was applied to."""


class DependencyError(VermaError):
    """A prerequisite computation is missing or was done at too low a level."""


class CapacityError(VermaError):
    """An ambient dimension exceeds the configured cap."""


class InvariantViolation(VermaError):
    """A runtime identity that must hold by theory failed on computed data."""
