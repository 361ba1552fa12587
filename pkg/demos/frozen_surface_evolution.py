"""
How the frozen-coherence region evolves with iteration count
============================================================

Scans the coefficient cube on a modest lattice and reports, for each channel,
how many lattice states keep their relative-entropy coherence within
tolerance of the initial value after n iterations. The bit-flip and
bit-phase-flip regions persist at every n; the other channels lose their
frozen sets (on this lattice the gad set is already empty at n = 1).
"""

from coherence_lab import ChannelKind, Measure, frozen_surface

GRID = 41
P = 0.5

print(f"lattice {GRID}^3, p = {P}, measure = rel-ent, tol = 1e-3, min coherence = 1e-4")
print()
header = "channel " + "".join(f"  n={n:<12}" for n in (1, 5, 12, 24, 50))
print(header + " (points / connected components)")
for kind in ChannelKind:
    cells = []
    for n in (1, 5, 12, 24, 50):
        cloud = frozen_surface(kind, Measure.REL_ENT, P, n, grid_res=GRID)
        cells.append(f"  {len(cloud.points):>5}/{cloud.components:<7}")
    print(f"{kind.value:>7} " + "".join(cells))

print()
print("the l1 frozen region of the bit-flip channel is the half of the cube")
print("with |c1| >= |c2| (excluding the incoherent plane c1 = c2 = 0):")
cloud = frozen_surface(ChannelKind.BIT_FLIP, Measure.L1, P, 10, grid_res=21,
                       tol=1e-9, min_coherence=1e-6)
print(f"  grid 21^3: {len(cloud.points)} frozen lattice states, "
      f"{cloud.components} connected components")
print(f"  metadata: {cloud.metadata()}")
