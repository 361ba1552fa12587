"""Decay-rate curves over p and frozen-coherence point clouds over state space.

Both scans are deterministic: work is partitioned by fixed lattice planes
(or grid indices), never by worker count, and every lattice point emitted by
the vectorized pass is re-confirmed through the exact scalar decay-rate path
before it is kept. COHERENCE_LAB_THREADS caps the thread pool.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .channels import ChannelKind, CoefficientMapMode, per_iteration_factors
from .coherence import Measure, closed_measure, _KERNELS
from .decay import COHERENCE_FLOOR, DecayQuery, Engine, decay_rate
from .errors import IncoherentStateError, ParameterRangeError
from .states import BellCoefficients

# slack added to the vectorized prefilter so that no point the scalar pass
# would accept is pruned by array/scalar rounding differences
_RATE_SLACK = 1e-9
_COHERENCE_SLACK = 1e-9


def worker_count() -> int:
    """Thread count: COHERENCE_LAB_THREADS when set, else the CPU count."""
    raw = os.environ.get("COHERENCE_LAB_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParameterRangeError(
            f"COHERENCE_LAB_THREADS must be a positive integer, got {raw!r}"
        ) from exc
    if value < 1:
        raise ParameterRangeError(
            f"COHERENCE_LAB_THREADS must be a positive integer, got {raw!r}"
        )
    return value


@dataclass(frozen=True)
class DecayCurve:
    kind: ChannelKind
    measure: Measure
    state: BellCoefficients
    mode: CoefficientMapMode
    n_list: tuple[int, ...]
    p_values: np.ndarray
    rates: np.ndarray  # shape (len(p_values), len(n_list))


def decay_curve(
    kind: ChannelKind,
    measure: Measure,
    state: BellCoefficients,
    n_list: tuple[int, ...],
    p_count: int = 99,
    mode: CoefficientMapMode = CoefficientMapMode.DERIVED,
) -> DecayCurve:
    """Decay rates on the interior grid p_k = k / (p_count + 1), k = 1..p_count."""
    kind = ChannelKind(kind)
    measure = Measure(measure)
    mode = CoefficientMapMode(mode)
    if not isinstance(p_count, (int, np.integer)) or p_count < 1:
        raise ParameterRangeError(f"p_count must be a positive integer, got {p_count!r}")
    n_tuple = tuple(int(n) for n in n_list)
    if not n_tuple or any(n < 1 for n in n_tuple):
        raise ParameterRangeError(f"n_list must be nonempty positive integers, got {n_list!r}")
    if closed_measure(measure, state) <= COHERENCE_FLOOR:
        raise IncoherentStateError(
            f"state {tuple(state)} has no {measure.value} coherence to decay"
        )
    p_values = np.array([k / (p_count + 1) for k in range(1, p_count + 1)])

    def row(p: float) -> list[float]:
        return [
            decay_rate(DecayQuery(state, measure, kind, float(p), n, mode))
            for n in n_tuple
        ]

    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        rates = np.array(list(pool.map(row, p_values)))
    return DecayCurve(kind, measure, state, mode, n_tuple, p_values, rates)


@dataclass(frozen=True)
class SurfacePointCloud:
    kind: ChannelKind
    measure: Measure
    p: float
    n: int
    mode: CoefficientMapMode
    grid_res: int
    tol: float
    min_coherence: float
    points: np.ndarray  # shape (N, 3), lattice order
    components: int

    def metadata(self) -> dict[str, object]:
        return {
            "channel": self.kind.value,
            "measure": self.measure.value,
            "p": self.p,
            "n": self.n,
            "mode": self.mode.value,
            "grid": self.grid_res,
            "tol": self.tol,
            "min_coherence": self.min_coherence,
            "points": len(self.points),
            "components": self.components,
        }


def frozen_surface(
    kind: ChannelKind,
    measure: Measure,
    p: float,
    n: int,
    grid_res: int = 101,
    tol: float = 1e-3,
    min_coherence: float = 1e-4,
    mode: CoefficientMapMode = CoefficientMapMode.DERIVED,
) -> SurfacePointCloud:
    """All lattice states whose coherence survives n iterations within tol.

    The lattice is the cube [-1, 1]^3 sampled at grid_res points per axis.
    A point belongs to the cloud when it is physical, its initial coherence
    is at least min_coherence (and above the incoherence floor), and its
    decay rate satisfies |R_n - 1| <= tol. The component count in the
    metadata joins lattice points that differ by one step along one axis.

    Parameters
    ----------
    kind, measure, p, n : channel, coherence measure, channel parameter
        (for gad: the damping, with mixing fixed at 1/2), iteration count.
    grid_res : odd number of lattice points per axis, >= 3.
    tol : freezing tolerance on |R_n - 1|, > 0.
    min_coherence : initial-coherence floor, >= 0.
    mode : dep contraction convention ('paper' or 'derived').

    Returns
    -------
    SurfacePointCloud with points in ascending lattice order.
    """
    kind = ChannelKind(kind)
    measure = Measure(measure)
    mode = CoefficientMapMode(mode)
    if not isinstance(grid_res, (int, np.integer)) or grid_res < 3 or grid_res % 2 == 0:
        raise ParameterRangeError(f"grid_res must be an odd integer >= 3, got {grid_res!r}")
    if not np.isfinite(tol) or tol <= 0.0:
        raise ParameterRangeError(f"tol must be positive, got {tol!r}")
    if not np.isfinite(min_coherence) or min_coherence < 0.0:
        raise ParameterRangeError(f"min_coherence must be >= 0, got {min_coherence!r}")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterRangeError(f"n must be a positive integer, got {n!r}")
    f1, f2, f3 = per_iteration_factors(kind, p, mode)

    axis = np.linspace(-1.0, 1.0, int(grid_res))
    kernel = _KERNELS[measure]
    c2_grid, c3_grid = np.meshgrid(axis, axis, indexing="ij")
    rate_cut = tol + _RATE_SLACK
    coh_cut = min_coherence * (1.0 - _COHERENCE_SLACK) - 1e-15
    floor_cut = COHERENCE_FLOOR * 0.5

    def plane_candidates(i: int) -> np.ndarray:
        c1 = float(axis[i])
        q_min = np.minimum(
            np.minimum(1.0 - c1 - c2_grid - c3_grid, 1.0 + c1 + c2_grid - c3_grid),
            np.minimum(1.0 + c1 - c2_grid + c3_grid, 1.0 - c1 + c2_grid + c3_grid),
        )
        physical = q_min / 4.0 >= -1e-12
        before = kernel(c1, c2_grid, c3_grid)
        e1 = c1
        e2 = c2_grid.copy()
        e3 = c3_grid.copy()
        for _ in range(int(n)):
            e1 *= f1
            e2 *= f2
            e3 *= f3
        after = kernel(e1, e2, e3)
        with np.errstate(divide="ignore", invalid="ignore"):
            rate = np.where(before > 0.0, after / np.maximum(before, 1e-300), 0.0)
        mask = (
            physical
            & (before >= max(coh_cut, floor_cut))
            & (np.abs(rate - 1.0) <= rate_cut)
        )
        return np.argwhere(mask)

    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        per_plane = list(pool.map(plane_candidates, range(int(grid_res))))

    kept_mask = np.zeros((grid_res, grid_res, grid_res), dtype=bool)
    points: list[tuple[float, float, float]] = []
    for i, jk in enumerate(per_plane):
        for j, k in jk:
            c = BellCoefficients(float(axis[i]), float(axis[j]), float(axis[k]))
            before = closed_measure(measure, c)
            if before <= COHERENCE_FLOOR or before < min_coherence:
                continue
            rate = decay_rate(
                DecayQuery(c, measure, kind, float(p), int(n), mode, Engine.CLOSED_FORM)
            )
            if abs(rate - 1.0) <= tol:
                kept_mask[i, j, k] = True
                points.append(c)
    _, components = ndimage.label(kept_mask)
    cloud = np.array(points, dtype=np.float64).reshape(len(points), 3)
    return SurfacePointCloud(
        kind=kind,
        measure=measure,
        p=float(p),
        n=int(n),
        mode=mode,
        grid_res=int(grid_res),
        tol=float(tol),
        min_coherence=float(min_coherence),
        points=cloud,
        components=int(components),
    )
