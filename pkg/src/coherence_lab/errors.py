"""Exception hierarchy shared by the whole package.

Validation failures (bad user input) derive from both the package base and
ValueError so callers may catch either; numerical-invariant violations signal
an internal inconsistency and derive from the base only.
"""


class CoherenceLabError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(CoherenceLabError, ValueError):
    """Invalid input: rejected before any computation runs."""


class NotHermitianError(ValidationError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NotPSDError(ValidationError):
    """Matrix has an eigenvalue below the negative tolerance."""


class TraceNotOneError(ValidationError):
    """Density matrix trace deviates from 1 beyond tolerance."""


class UnphysicalStateError(ValidationError):
    """Correlation coefficients lie outside the physical tetrahedron."""


class NotBellDiagonalError(ValidationError):
    """Density matrix is too far from the Bell-diagonal family."""


class ParameterRangeError(ValidationError):
    """Scalar parameter (probability, iteration count, grid size) out of range."""


class MissingGammaError(ValidationError):
    """Damping parameter required for this channel but not supplied."""


class IncoherentStateError(ValidationError):
    """Initial coherence is (numerically) zero, so a decay ratio is undefined."""


class InternalNumericalError(CoherenceLabError):
    """A computation violated an invariant it is supposed to preserve."""
