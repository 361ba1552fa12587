"""
Decay-rate curves across the five product channels
==================================================

Prints the n-th iteration decay rate R_n = C(state_n) / C(state_0) for one
initial state under every channel, at a few noise strengths, and shows the
freezing plateau: under bit flip the l1 coherence of a state with
|c1| >= |c2| never decays, while every other channel drags R_n to zero.
"""

from coherence_lab import BellCoefficients, ChannelKind, DecayQuery, Measure, decay_rate, decay_curve

state = BellCoefficients(0.6, 0.1, 0.2)
iterations = (1, 2, 5, 10, 20)

for measure in (Measure.L1, Measure.REL_ENT):
    print(f"measure: {measure.value}, state: {state.to_text()}, p = 0.3")
    header = "channel " + "".join(f"  n={n:<6}" for n in iterations)
    print(header)
    for kind in ChannelKind:
        rates = [decay_rate(DecayQuery(state, measure, kind, 0.3, n)) for n in iterations]
        print(f"{kind.value:>7} " + "".join(f"  {r:<8.3g}" for r in rates))
    print()

# the depolarizing channel has a distinguished strength: at p = 3/4 a single
# iteration lands every state on the maximally mixed state
print("dep decay rate at n = 1 as p crosses 3/4:")
curve = decay_curve(ChannelKind.DEPOLARIZING, Measure.L1, state, n_list=(1,), p_count=19)
for p, row in zip(curve.p_values, curve.rates):
    marker = "  <- complete incoherence" if row[0] == 0.0 else ""
    print(f"  p = {p:.2f}  R_1 = {row[0]:.6f}{marker}")
