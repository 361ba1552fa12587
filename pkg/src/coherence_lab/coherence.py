"""Coherence measures for Bell-diagonal states, each computed two ways.

Closed forms (in the correlation coefficients):

    l1:       C = (|c1 - c2| + |c1 + c2|) / 2 = max(|c1|, |c2|)
    rel-ent:  C = S(rho_diag) - S(rho)
                = (1/4) sum_i q_i ln q_i - (1/2) [(1+c3) ln(1+c3) + (1-c3) ln(1-c3)]
    skew:     C = (2 - sqrt(q1 q2) - sqrt(q3 q4)) / 4

with q1 = 1-c1-c2-c3, q2 = 1+c1+c2-c3, q3 = 1+c1-c2+c3, q4 = 1-c1+c2+c3.

Matrix forms evaluate the defining expressions on the density matrix itself
(off-diagonal l1 norm, entropy difference against the dephased state, and
1 - sum_k <k|sqrt(rho)|k>^2 for the summed skew information over the
computational basis). The two routes agree to ~1e-12 and are checked against
each other by the test suite and the `verify` command.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import InternalNumericalError, UnphysicalStateError
from .linalg import psd_sqrt, von_neumann_entropy
from .states import BellCoefficients, is_physical, validate_density_matrix

NEGATIVE_CLAMP = 1e-12
XLNX_FLOOR = 1e-15


class Measure(str, Enum):
    L1 = "l1"
    REL_ENT = "rel-ent"
    SKEW = "skew"


def _clamped(value: float) -> float:
    if value < -NEGATIVE_CLAMP:
        raise InternalNumericalError(
            f"coherence value {value!r} is negative beyond round-off"
        )
    return max(value, 0.0)


def _xlnx(x):
    """x ln x extended by continuity with 0 at x <= XLNX_FLOOR."""
    safe = np.maximum(x, XLNX_FLOOR)
    return np.where(x > XLNX_FLOOR, safe * np.log(safe), 0.0)


def _parities(c1, c2, c3):
    q1 = 1.0 - c1 - c2 - c3
    q2 = 1.0 + c1 + c2 - c3
    q3 = 1.0 + c1 - c2 + c3
    q4 = 1.0 - c1 + c2 + c3
    return q1, q2, q3, q4


def l1_kernel(c1, c2, c3):
    """Closed-form l1 coherence; accepts scalars or broadcastable arrays."""
    return (np.abs(c1 - c2) + np.abs(c1 + c2)) / 2.0


def rel_entropy_kernel(c1, c2, c3):
    """Closed-form relative entropy of coherence; physical inputs assumed."""
    q1, q2, q3, q4 = (np.clip(q, 0.0, None) for q in _parities(c1, c2, c3))
    spectral = _xlnx(q1) + _xlnx(q2) + _xlnx(q3) + _xlnx(q4)
    diagonal = _xlnx(np.clip(1.0 + c3, 0.0, None)) + _xlnx(np.clip(1.0 - c3, 0.0, None))
    return spectral / 4.0 - diagonal / 2.0


def skew_kernel(c1, c2, c3):
    """Closed-form summed skew information; physical inputs assumed.

    q1 q2 and q3 q4 are evaluated as differences of squares: states sitting
    exactly on a tetrahedron face then keep an exact zero product, whereas
    the plain products carry additive round-off that sqrt amplifies to ~1e-8.
    """
    prod12 = (1.0 - c3 - (c1 + c2)) * (1.0 - c3 + (c1 + c2))
    prod34 = (1.0 + c3 - (c1 - c2)) * (1.0 + c3 + (c1 - c2))
    root12 = np.sqrt(np.clip(prod12, 0.0, None))
    root34 = np.sqrt(np.clip(prod34, 0.0, None))
    return (2.0 - root12 - root34) / 4.0


_KERNELS = {
    Measure.L1: l1_kernel,
    Measure.REL_ENT: rel_entropy_kernel,
    Measure.SKEW: skew_kernel,
}


def _closed(measure: Measure, c: BellCoefficients) -> float:
    if not is_physical(c):
        raise UnphysicalStateError(
            f"coefficients {tuple(c)} lie outside the physical tetrahedron"
        )
    return _clamped(float(_KERNELS[measure](*c)))


def l1_closed(c: BellCoefficients) -> float:
    return _closed(Measure.L1, c)


def rel_entropy_closed(c: BellCoefficients) -> float:
    return _closed(Measure.REL_ENT, c)


def skew_closed(c: BellCoefficients) -> float:
    return _closed(Measure.SKEW, c)


def l1_matrix(rho: np.ndarray) -> float:
    """Sum of absolute off-diagonal entries in the computational basis."""
    a = validate_density_matrix(rho)
    mags = np.abs(a)
    return _clamped(float(mags.sum() - np.trace(mags)))


def rel_entropy_matrix(rho: np.ndarray) -> float:
    """S(rho_diag) - S(rho) with rho_diag the dephased (diagonal) state."""
    a = validate_density_matrix(rho)
    dephased = np.diag(np.diag(a))
    return _clamped(von_neumann_entropy(dephased) - von_neumann_entropy(a))


def skew_matrix(rho: np.ndarray) -> float:
    """1 - sum_k <k|sqrt(rho)|k>^2 over the computational basis."""
    a = validate_density_matrix(rho)
    root_diag = np.diag(psd_sqrt(a)).real
    return _clamped(float(1.0 - np.sum(root_diag**2)))


_MATRIX = {
    Measure.L1: l1_matrix,
    Measure.REL_ENT: rel_entropy_matrix,
    Measure.SKEW: skew_matrix,
}


def closed_measure(measure: Measure, c: BellCoefficients) -> float:
    """Closed-form value of ``measure`` at coefficients ``c``."""
    return _closed(Measure(measure), c)


def matrix_measure(measure: Measure, rho: np.ndarray) -> float:
    """Definition-level value of ``measure`` on the density matrix ``rho``."""
    return _MATRIX[Measure(measure)](rho)
