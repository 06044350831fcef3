import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from unruhlab.xstate import XStateCoeffs  # noqa: E402

# corners of the physical X-state tetrahedron (the four maximally
# entangled states); every convex mixture of them is a valid state
BELL_CORNERS = ((1.0, -1.0, 1.0), (-1.0, 1.0, 1.0), (1.0, 1.0, -1.0), (-1.0, -1.0, -1.0))


def mix_of_corners(weights) -> XStateCoeffs:
    w = np.asarray(weights, dtype=float)
    w = w / w.sum()
    c = sum(wi * np.array(corner) for wi, corner in zip(w, BELL_CORNERS))
    return XStateCoeffs(*c)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def random_physical_coeffs(rng):
    def make(n):
        return [mix_of_corners(rng.dirichlet(np.ones(4))) for _ in range(n)]

    return make
