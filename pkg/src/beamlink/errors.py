"""Exception types shared across the package."""


class BeamlinkError(Exception):
    """Base class for all package-specific errors."""


class RejectedInputError(BeamlinkError, ValueError):
    """An argument violates a documented precondition (shape, range, name)."""


class RankDeficiencyError(BeamlinkError, ValueError):
    """A channel or gain vector is (numerically) rank deficient."""


class NumericalFailureError(BeamlinkError, RuntimeError):
    """An iterative numerical routine failed to converge."""


class OutOfRangeError(BeamlinkError, ValueError):
    """A requested value lies outside the range covered by the data."""
