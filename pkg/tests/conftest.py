import numpy as np
from hypothesis import strategies as st

from coherence_lab import BellCoefficients

REFERENCE = BellCoefficients(0.6, 0.1, 0.2)

# tetrahedron vertices of the physical region
VERTICES = (
    (1.0, -1.0, 1.0),
    (-1.0, 1.0, 1.0),
    (1.0, 1.0, -1.0),
    (-1.0, -1.0, -1.0),
)


@st.composite
def physical_coefficients(draw):
    """Random physical states as convex combinations of the vertices."""
    weights = np.array([draw(st.floats(0.0, 1.0)) for _ in range(4)])
    total = weights.sum()
    if total == 0.0:
        weights = np.array([0.25, 0.25, 0.25, 0.25])
        total = 1.0
    weights = weights / total
    c = weights @ np.array(VERTICES)
    return BellCoefficients(float(c[0]), float(c[1]), float(c[2]))
