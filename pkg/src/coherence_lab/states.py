"""Two-qubit Bell-diagonal states.

A state in this family is fixed by three correlation coefficients
(c1, c2, c3):

    rho = (1/4) (I (x) I + sum_i c_i sigma_i (x) sigma_i)

Its eigenvalues are q_i/4 for the four parity combinations
q = 1 -+ c1 -+ c2 -+ c3, so the physical region is the tetrahedron with
vertices (1,-1,1), (-1,1,1), (1,1,-1), (-1,-1,-1).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (
    NotBellDiagonalError,
    NotPSDError,
    UnphysicalStateError,
    ValidationError,
)
from .linalg import PSD_TOL, TRACE_TOL, require_hermitian, TraceNotOneError

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
IDENTITY_2 = np.eye(2, dtype=np.complex128)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

# sigma_i (x) sigma_i observables whose expectations are the c_i
_CORRELATORS = tuple(np.kron(s, s) for s in PAULI)

PHYSICAL_TOL = 1e-12


class BellCoefficients(NamedTuple):
    """Correlation coefficients (c1, c2, c3) of a Bell-diagonal state."""

    c1: float
    c2: float
    c3: float

    @classmethod
    def from_text(cls, text: str) -> "BellCoefficients":
        """Parse the textual form 'c1,c2,c3' (whitespace around commas ok)."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValidationError(
                f"expected three comma-separated coefficients, got {text!r}"
            )
        try:
            values = [float(part.strip()) for part in parts]
        except ValueError as exc:
            raise ValidationError(f"could not parse coefficients from {text!r}") from exc
        if not all(np.isfinite(values)):
            raise ValidationError(f"coefficients must be finite, got {text!r}")
        return cls(*values)

    def to_text(self) -> str:
        return f"{self.c1!r},{self.c2!r},{self.c3!r}"


def bell_eigenvalues(c: BellCoefficients) -> np.ndarray:
    """The four eigenvalues q_i/4, sorted ascending."""
    c1, c2, c3 = c
    q = np.array(
        [
            1.0 - c1 - c2 - c3,
            1.0 + c1 + c2 - c3,
            1.0 + c1 - c2 + c3,
            1.0 - c1 + c2 + c3,
        ]
    )
    return np.sort(q) / 4.0


def is_physical(c: BellCoefficients, tol: float = PHYSICAL_TOL) -> bool:
    """True when every eigenvalue is >= -tol (state inside the tetrahedron)."""
    return bool(bell_eigenvalues(c)[0] >= -tol)


def to_density_matrix(c: BellCoefficients) -> np.ndarray:
    """The explicit 4x4 density matrix in the computational basis."""
    if not is_physical(c):
        raise UnphysicalStateError(
            f"coefficients {tuple(c)} lie outside the physical tetrahedron "
            "with vertices (1,-1,1), (-1,1,1), (1,1,-1), (-1,-1,-1)"
        )
    return _build_matrix(*c)


def _build_matrix(c1: float, c2: float, c3: float) -> np.ndarray:
    rho = np.zeros((4, 4), dtype=np.complex128)
    rho[0, 0] = rho[3, 3] = (1.0 + c3) / 4.0
    rho[1, 1] = rho[2, 2] = (1.0 - c3) / 4.0
    rho[0, 3] = rho[3, 0] = (c1 - c2) / 4.0
    rho[1, 2] = rho[2, 1] = (c1 + c2) / 4.0
    return rho


def validate_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Check 4x4 shape, hermiticity, unit trace, and positivity; return complex128."""
    a = require_hermitian(rho)
    if a.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 density matrix, got shape {a.shape}")
    trace = float(np.trace(a).real)
    if abs(trace - 1.0) > TRACE_TOL:
        raise TraceNotOneError(f"trace {trace!r} deviates from 1 by more than {TRACE_TOL:.1e}")
    smallest = float(np.linalg.eigvalsh(a)[0])
    if smallest < -PSD_TOL:
        raise NotPSDError(
            f"matrix is not PSD: smallest eigenvalue {smallest:.3e} < -{PSD_TOL:.1e}"
        )
    return a


def from_density_matrix(
    rho: np.ndarray, max_residual: float | None = None
) -> tuple[BellCoefficients, float]:
    """Extract (c1, c2, c3) = Tr(rho sigma_i (x) sigma_i) from a density matrix.

    Returns the coefficients together with the reconstruction residual
    max |rho - rho(c)|. The residual is 0 (up to round-off) exactly when rho
    is Bell diagonal; when ``max_residual`` is given, a larger residual
    raises NotBellDiagonalError instead of being returned.
    """
    a = validate_density_matrix(rho)
    c = BellCoefficients(*(float(np.trace(a @ m).real) for m in _CORRELATORS))
    residual = float(np.max(np.abs(a - _build_matrix(*c))))
    if max_residual is not None and residual > max_residual:
        raise NotBellDiagonalError(
            f"reconstruction residual {residual:.3e} exceeds {max_residual:.1e}; "
            "the matrix is not Bell diagonal"
        )
    return c, residual
