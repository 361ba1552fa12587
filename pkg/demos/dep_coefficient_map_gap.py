"""
Two contraction conventions for the depolarizing channel
========================================================

The two-qubit product of single-qubit depolarizing channels contracts each
correlation coefficient by (1 - 4p/3)^2 per iteration: each qubit's channel
contributes one factor. A single-contraction convention (one factor of
1 - 4p/3 per iteration) is also in circulation; this script evolves the
literal density matrix through the Kraus operators and shows which
convention the oracle follows, and the size of the gap for the other.
"""

from coherence_lab import (
    BellCoefficients,
    ChannelKind,
    CoefficientMapMode,
    apply_n,
    coefficient_map,
    from_density_matrix,
    kraus_set,
    to_density_matrix,
)

state = BellCoefficients(0.6, 0.1, 0.2)
print(f"initial state: {state.to_text()}")
print()
print("   p   n   |kraus - squared|   |kraus - single|   single-convention gap |f^n - f^2n| |c1|")
for p in (0.1, 0.3, 0.6):
    kset = kraus_set(ChannelKind.DEPOLARIZING, p)
    base = 1.0 - 4.0 * p / 3.0
    for n in (1, 3, 8):
        evolved, _ = from_density_matrix(apply_n(to_density_matrix(state), kset, n))
        squared = coefficient_map(ChannelKind.DEPOLARIZING, p, n, state)
        single = coefficient_map(ChannelKind.DEPOLARIZING, p, n, state, CoefficientMapMode.PAPER)
        dev_squared = max(abs(a - b) for a, b in zip(squared, evolved))
        dev_single = max(abs(a - b) for a, b in zip(single, evolved))
        predicted = abs(base**n - base ** (2 * n)) * abs(state.c1)
        print(f" {p:.1f}  {n:>2}       {dev_squared:.3e}          {dev_single:.3e}"
              f"            {predicted:.3e}")
print()
print("the Kraus oracle tracks the squared contraction to round-off; the")
print("single-contraction gap is exactly |f^n - f^2n| |c_i| per coefficient")
