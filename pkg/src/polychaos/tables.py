"""Reference optimal-ratio tables for the regular polytopes in 2-5 dimensions."""

from __future__ import annotations

import math
from dataclasses import dataclass

PHI = (math.sqrt(5.0) + 1.0) / 2.0


@dataclass(frozen=True)
class TableRow:
    table: int
    label: str
    identifier: str
    delta_over_ell: float
    r_opt: float


TABLE_ROWS = (
    TableRow(1, "Triangle", "polygon:3", 1.0, 0.5),
    TableRow(1, "Square", "polygon:4", 1.0, 0.5),
    TableRow(1, "Pentagon", "polygon:5", PHI, 1.0 / PHI),
    TableRow(1, "Hexagon", "polygon:6", 2.0, 2.0 / 3.0),
    TableRow(2, "Tetrahedron", "tetrahedron", 1.0, 0.5),
    TableRow(2, "Cube", "cube", 1.0, 0.5),
    TableRow(2, "Octahedron", "octahedron", 1.0, 0.5),
    TableRow(2, "Icosahedron", "icosahedron", PHI, 1.0 / PHI),
    TableRow(2, "Dodecahedron", "dodecahedron", PHI + 1.0, (PHI + 1.0) / (PHI + 2.0)),
    TableRow(3, "5-cell (4-simplex)", "5-cell", 1.0, 0.5),
    TableRow(3, "8-cell (4-cube)", "8-cell", 1.0, 0.5),
    TableRow(3, "16-cell", "16-cell", 1.0, 0.5),
    TableRow(3, "24-cell", "24-cell", 2.0, 2.0 / 3.0),
    TableRow(4, "5-simplex", "simplex:5", 1.0, 0.5),
    TableRow(4, "5-cube", "hypercube:5", 1.0, 0.5),
    TableRow(4, "5-orthoplex", "orthoplex:5", 1.0, 0.5),
)

TABLE_TITLES = {
    1: "Optimal ratio, regular 2D polytopes",
    2: "Optimal ratio, regular 3D polytopes",
    3: "Optimal ratio, regular 4D polytopes",
    4: "Optimal ratio, regular 5D polytopes",
}
