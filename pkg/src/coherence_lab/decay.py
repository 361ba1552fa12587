"""n-th decay rates R_n = C(Phi^n(rho)) / C(rho) and freezing predicates."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .channels import (
    ChannelKind,
    CoefficientMapMode,
    apply_n,
    coefficient_map,
    single_parameter_kraus_set,
)
from .coherence import Measure, closed_measure, matrix_measure
from .errors import IncoherentStateError
from .states import BellCoefficients, to_density_matrix

COHERENCE_FLOOR = 1e-12
FROZEN_TOL = 1e-9


class Engine(str, Enum):
    CLOSED_FORM = "closed-form"
    MATRIX_ORACLE = "matrix-oracle"


@dataclass(frozen=True)
class DecayQuery:
    """Everything needed to evaluate one decay rate."""

    state: BellCoefficients
    measure: Measure
    kind: ChannelKind
    p: float
    n: int
    mode: CoefficientMapMode = CoefficientMapMode.DERIVED
    engine: Engine = Engine.CLOSED_FORM


def decay_rate(query: DecayQuery) -> float:
    """Coherence after n channel iterations divided by initial coherence.

    The closed-form engine runs the coefficient map and closed measures; the
    matrix-oracle engine evolves the literal density matrix through the Kraus
    operators and evaluates the definition-level measures. For gad both
    engines use the one-parameter convention (mixing 1/2, damping p).
    """
    engine = Engine(query.engine)
    measure = Measure(query.measure)
    if engine is Engine.CLOSED_FORM:
        before = closed_measure(measure, query.state)
        if before <= COHERENCE_FLOOR:
            raise IncoherentStateError(
                f"initial coherence {before!r} is at or below {COHERENCE_FLOOR:.1e}"
            )
        evolved = coefficient_map(query.kind, query.p, query.n, query.state, query.mode)
        return closed_measure(measure, evolved) / before
    rho = to_density_matrix(query.state)
    before = matrix_measure(measure, rho)
    if before <= COHERENCE_FLOOR:
        raise IncoherentStateError(
            f"initial coherence {before!r} is at or below {COHERENCE_FLOOR:.1e}"
        )
    kset = single_parameter_kraus_set(ChannelKind(query.kind), query.p)
    return matrix_measure(measure, apply_n(rho, kset, query.n)) / before


def is_frozen(query: DecayQuery, tol: float = FROZEN_TOL) -> bool:
    """True when the decay rate sits within tol of 1."""
    return abs(decay_rate(query) - 1.0) <= tol


def complete_incoherence_p(kind: ChannelKind) -> float | None:
    """The p at which a single iteration erases all coherence, if one exists.

    Only dep has one: at p = 3/4 every coefficient factor vanishes. The
    other channels return None.
    """
    if ChannelKind(kind) is ChannelKind.DEPOLARIZING:
        return 0.75
    return None
