import numpy as np
import pytest

from polychaos.polytopes import polytope_from_id

TABLE_IDS = [
    "polygon:3", "polygon:4", "polygon:5", "polygon:6",
    "tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron",
    "5-cell", "8-cell", "16-cell", "24-cell",
    "simplex:5", "hypercube:5", "orthoplex:5",
]

CATALOG_IDS = TABLE_IDS + [
    "polygon:7", "polygon:8", "polygon:12",
    "simplex:2", "simplex:3", "simplex:6", "hypercube:2", "hypercube:6",
    "orthoplex:2", "orthoplex:6",
]

LOW_DIM_IDS = [i for i in CATALOG_IDS if polytope_from_id(i).dimension <= 3]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
