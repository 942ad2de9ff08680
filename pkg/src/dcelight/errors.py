"""Exception hierarchy.

Everything the library raises on purpose derives from DcelightError so a
front end can map library failures to a single exit class, distinct from
argument-parsing problems.
"""
from __future__ import annotations


class DcelightError(Exception):
    """Base class for all library-raised failures."""


class DomainError(DcelightError, ValueError):
    """An input is outside the physical domain of the operation."""


class DegenerateProfileError(DomainError):
    """n_in equals n_out where a genuine index change is required."""


class QuadratureError(DcelightError):
    """Adaptive quadrature ran out of subdivision budget.

    Carries the best partial result so callers can decide whether the
    achieved accuracy is still usable.
    """

    def __init__(self, message: str, partial: float, error_estimate: float):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate


class HardCoreViolationError(DomainError):
    """Density at or above the hard-core maximum of the model."""


class NoHardCoreError(DomainError):
    """The model has no maximum density, so the operation is undefined."""


class ThermodynamicInstabilityError(DcelightError):
    """Squared sound speed came out negative.

    Carries the squared value for diagnostics.
    """

    def __init__(self, message: str, v_squared: float):
        super().__init__(message)
        self.v_squared = v_squared


class DifferentiationError(DcelightError):
    """Sampled data cannot support the requested derivative stencil."""


class MissingPeriodError(DcelightError):
    """A per-cycle integral was requested on a trajectory with no period."""


class TrajectoryFormatError(DcelightError, ValueError):
    """Trajectory CSV does not match the required schema."""


class NoSolutionError(DcelightError):
    """The inversion target cannot be met at the given known index.

    min_achievable is the smallest photon count reachable by varying the
    unknown index, when that bound is meaningful.
    """

    def __init__(self, message: str, min_achievable: float | None = None):
        super().__init__(message)
        self.min_achievable = min_achievable
