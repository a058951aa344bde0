"""Exception types shared across the package."""


class NotPeriodicError(ValueError):
    """Unit-cell entries do not match on opposite edges."""


class ResolutionError(ValueError):
    """Grid spacing too coarse for the requested operation."""


class DomainError(ValueError):
    """Requested region is not inside the field's grid."""


class SolverFailure(RuntimeError):
    """Linear solve did not reach the requested residual."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DegenerateFunctionError(ValueError):
    """Operation undefined for an (essentially) vanishing function."""


class PositivityViolation(ValueError):
    """Positivity hypothesis fails at some grid node."""


class HypothesisViolation(ValueError):
    """A stated hypothesis of the operation does not hold for the input."""
