"""Exception types shared across the package."""


class RotHypError(Exception):
    """Base class for all package errors."""


class DomainError(RotHypError):
    """Parameter outside the profile's radial domain."""


class DegenerateChartError(RotHypError):
    """Chart angles too close to a coordinate singularity."""


class SingularProfileError(RotHypError):
    """Profile speed vanishes, so the immersion is not regular."""


class UnitSpeedError(RotHypError):
    """Operation requires an arclength-parametrized profile."""


class SingularFormulaError(RotHypError):
    """Closed form undefined at this point (negative power of a zero)."""


class ConventionMismatchError(RotHypError):
    """Sign-convention flag is not constant where it should be."""


class UnderdeterminedFitError(RotHypError):
    """Normal equations of the eigen-matrix fit are rank deficient."""

    def __init__(self, message, deficient_directions=None):
        super().__init__(message)
        self.deficient_directions = deficient_directions


class InvalidOrderError(RotHypError, ValueError):
    """Symmetric-function or transform order out of range."""


class InvalidDimensionError(RotHypError, ValueError):
    """Ambient dimension below 3 or otherwise unusable."""


class SpecDocumentError(RotHypError, ValueError):
    """Profile description document malformed or inconsistent."""


class ToleranceError(RotHypError):
    """A verification run exceeded its stated tolerance."""
