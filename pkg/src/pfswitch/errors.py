"""Exception types shared across the package."""


class PFSwitchError(Exception):
    """Base class for all package-specific errors."""


class InvalidDimensionError(PFSwitchError):
    """Operator or Hilbert-space dimension is invalid or mismatched."""


class AmbiguousLabelingError(PFSwitchError):
    """Dressed-state labeling cannot be decided within tolerance."""


class SingularPointError(PFSwitchError):
    """A perturbative formula was evaluated at one of its resonance poles."""


class HybridizationError(PFSwitchError):
    """States are too strongly hybridized for block identification."""


class ConvergenceError(PFSwitchError):
    """An iterative routine exceeded its iteration budget."""


class UnsupportedParametersError(PFSwitchError):
    """Closed-form expressions do not apply to the given parameter set."""


class StepSizeError(PFSwitchError):
    """Time integration accuracy target violated (e.g. trace drift)."""


class SchemaError(PFSwitchError):
    """Device file violates the documented schema."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field
