"""Exception types shared across the package."""


class AvemError(Exception):
    """Base class for all package errors."""


class MeshFileError(AvemError):
    """Initial mesh file is malformed or describes an invalid triangulation."""


class ProblemFileError(AvemError):
    """Problem data file is malformed."""


class DataValidationError(AvemError):
    """Coefficient data violates symmetry, positivity or degree constraints."""


class InvalidElementError(AvemError):
    """Operation requested on an element that is not active."""


class MeshConsistencyError(AvemError):
    """Internal mesh invariant violated (corrupt topology)."""


class AdmissibilityError(AvemError):
    """Admissibility enforcement failed to terminate within its iteration cap."""

    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic


class UnsupportedDegreeError(AvemError):
    """Polynomial degree outside the supported range 2 <= k <= 4."""


class IllConditionedElementError(AvemError):
    """A local Gram system is numerically singular."""


class SolverConvergenceError(AvemError):
    """Iterative solver failed to reach the requested tolerance."""

    def __init__(self, message, residual_history=None):
        super().__init__(message)
        self.residual_history = list(residual_history or [])


class ConfigError(AvemError):
    """Run configuration violates a documented constraint."""
