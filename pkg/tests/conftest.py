import numpy as np
import pytest

from hahnspec.scanning import get_preset, grid_points


@pytest.fixture
def rng():
    """Seeded generator so randomized checks are reproducible."""
    return np.random.default_rng(20240517)

@pytest.fixture
def reference_config():
    """41 x 41 lattice over [-1, 3] x [-2, 2]."""
    return get_preset("reference")

@pytest.fixture
def reference_grid(reference_config):
    """Lattice points of the reference preset as Python complex numbers."""
    return [complex(point) for point in grid_points(reference_config)]
