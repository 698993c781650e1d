"""Regular polytope catalog: vertex coordinates, edges and canonical orientation.

Every generated polytope is centred on its vertex centroid and scaled to the
requested edge length. Edges are the vertex pairs at minimal distance, which
holds for every regular polytope built here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

PHI = (1.0 + math.sqrt(5.0)) / 2.0

REL_TOL = 1e-9

PLATONIC = ("tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron")
FOUR_D = ("5-cell", "8-cell", "16-cell", "24-cell")
FAMILIES = ("simplex", "hypercube", "orthoplex")

POLYGON_ALIASES = {
    "triangle": 3,
    "square": 4,
    "pentagon": 5,
    "hexagon": 6,
    "heptagon": 7,
    "octagon": 8,
}


class PolytopeError(ValueError):
    """Raised for unknown families, bad dimensions or degenerate vertex sets."""


@dataclass(frozen=True, eq=False)
class Polytope:
    """A regular polytope in R^n.

    Attributes
    ----------
    dimension : int
        Ambient dimension n.
    vertices : ndarray, shape (V, n)
        Vertex coordinates. The array is made read-only.
    edges : tuple of (int, int)
        Vertex index pairs (i < j) joined by an edge.
    edge_length : float
        Common length of every edge.
    name : str
        Catalog identifier, e.g. ``"polygon:5"`` or ``"24-cell"``.
    """

    dimension: int
    vertices: np.ndarray
    edges: tuple[tuple[int, int], ...]
    edge_length: float
    name: str

    def __post_init__(self):
        verts = np.array(self.vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != self.dimension:
            raise PolytopeError(
                f"vertices must have shape (V, {self.dimension}), got {verts.shape}")
        verts.setflags(write=False)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple((int(i), int(j)) for i, j in self.edges))

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def diameter(self) -> float:
        diffs = self.vertices[:, None, :] - self.vertices[None, :, :]
        return float(np.sqrt((diffs ** 2).sum(-1)).max())

    def scaled(self, factor: float) -> Polytope:
        """Uniformly scale about the origin."""
        if factor <= 0:
            raise PolytopeError("scale factor must be positive")
        return Polytope(self.dimension, self.vertices * factor, self.edges,
                        self.edge_length * factor, self.name)

    def transformed(self, matrix) -> Polytope:
        """Apply an orthogonal matrix (acting on column vectors) to every vertex."""
        matrix = np.asarray(matrix, dtype=float)
        return Polytope(self.dimension, self.vertices @ matrix.T, self.edges,
                        self.edge_length, self.name)

    def __repr__(self):
        return (f"Polytope(name={self.name!r}, dimension={self.dimension}, "
                f"V={self.n_vertices}, E={len(self.edges)}, "
                f"edge_length={self.edge_length:.12g})")


def _pairwise_distances(vertices: np.ndarray) -> np.ndarray:
    diffs = vertices[:, None, :] - vertices[None, :, :]
    return np.sqrt((diffs ** 2).sum(-1))


def detect_edges(vertices) -> list[tuple[int, int]]:
    """Return every vertex pair whose distance is the minimal pairwise distance.

    Distances within a relative tolerance of 1e-9 of the minimum count as
    minimal.
    """
    verts = np.asarray(vertices, dtype=float)
    if verts.ndim != 2 or verts.shape[0] < 2:
        raise PolytopeError("need at least two vertices to detect edges")
    dist = _pairwise_distances(verts)
    iu = np.triu_indices(len(verts), k=1)
    pair_d = dist[iu]
    scale = max(float(np.abs(verts).max()), 1.0)
    d_min = float(pair_d.min())
    if d_min <= 1e-12 * scale:
        raise PolytopeError("duplicate vertices")
    mask = np.abs(pair_d - d_min) <= REL_TOL * d_min
    return [(int(i), int(j)) for i, j in zip(iu[0][mask], iu[1][mask])]


def from_vertices(vertices, name: str = "custom") -> Polytope:
    """Build a Polytope from raw vertices, detecting edges by minimal distance."""
    verts = np.asarray(vertices, dtype=float)
    edges = detect_edges(verts)
    i, j = edges[0]
    ell = float(np.linalg.norm(verts[i] - verts[j]))
    return Polytope(verts.shape[1], verts, tuple(edges), ell, name)


# -- raw constructions (arbitrary scale, centred) ------------------------------

def _polygon(k: int) -> np.ndarray:
    # bottom edge horizontal: vertices 0 and k-1 straddle the downward axis
    m = np.arange(k)
    theta = -np.pi / 2 + np.pi * (2 * m + 1) / k
    return np.column_stack([np.cos(theta), np.sin(theta)])


def _simplex(n: int) -> np.ndarray:
    # standard basis of R^(n+1), expressed in an orthonormal (Helmert) basis
    # of the hyperplane sum(x) = 0
    eye = np.eye(n + 1) - 1.0 / (n + 1)
    basis = np.zeros((n, n + 1))
    for k in range(1, n + 1):
        basis[k - 1, :k] = 1.0
        basis[k - 1, k] = -k
        basis[k - 1] /= math.sqrt(k * (k + 1))
    return eye @ basis.T


def _hypercube(n: int) -> np.ndarray:
    return np.array(list(itertools.product((-1.0, 1.0), repeat=n)))


def _orthoplex(n: int) -> np.ndarray:
    eye = np.eye(n)
    return np.vstack([np.vstack([eye[i], -eye[i]]) for i in range(n)])


def _tetrahedron() -> np.ndarray:
    return np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)


def _icosahedron() -> np.ndarray:
    # (0, ±φ, ±1), (±1, 0, ±φ), (±φ, ±1, 0); edge length 2
    pts = []
    for s1, s2 in itertools.product((1.0, -1.0), repeat=2):
        pts.append((0.0, s1 * PHI, s2 * 1.0))
    for s1, s2 in itertools.product((1.0, -1.0), repeat=2):
        pts.append((s1 * 1.0, 0.0, s2 * PHI))
    for s1, s2 in itertools.product((1.0, -1.0), repeat=2):
        pts.append((s1 * PHI, s2 * 1.0, 0.0))
    return np.array(pts)


def _dodecahedron() -> np.ndarray:
    pts = [tuple(c) for c in _hypercube(3)]
    a, b = 1.0 / PHI, PHI
    for s1, s2 in itertools.product((1.0, -1.0), repeat=2):
        pts.append((0.0, s1 * a, s2 * b))
        pts.append((s1 * a, s2 * b, 0.0))
        pts.append((s1 * b, 0.0, s2 * a))
    return np.array(pts)


def _cell24() -> np.ndarray:
    pts = []
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((1.0, -1.0), repeat=2):
            v = [0.0] * 4
            v[i], v[j] = si, sj
            pts.append(v)
    return np.array(pts)


# -- public constructors --------------------------------------------------------

def generate_polytope(family: str, dimension: int, size: float = 1.0,
                      n_vertices: int | None = None) -> Polytope:
    """Generate a regular polytope with edge length ``size``.

    Parameters
    ----------
    family : str
        One of ``"polygon"``, the Platonic solid names, ``"5-cell"``,
        ``"8-cell"``, ``"16-cell"``, ``"24-cell"``, ``"simplex"``,
        ``"hypercube"`` or ``"orthoplex"``.
    dimension : int
        Ambient dimension; must match the family.
    size : float
        Target edge length.
    n_vertices : int, optional
        Number of polygon vertices (required for ``"polygon"``).

    Returns
    -------
    Polytope
        Centred on the vertex centroid, edges detected by minimal distance.
    """
    if size <= 0:
        raise PolytopeError("size (edge length) must be positive")
    dimension = int(dimension)

    if family == "polygon":
        if dimension != 2:
            raise PolytopeError("polygons live in dimension 2")
        if n_vertices is None or n_vertices < 3:
            raise PolytopeError("a polygon needs a vertex count >= 3")
        raw, name = _polygon(int(n_vertices)), f"polygon:{int(n_vertices)}"
    elif family in PLATONIC:
        if dimension != 3:
            raise PolytopeError(f"{family} requires dimension 3")
        builders = {
            "tetrahedron": _tetrahedron,
            "cube": lambda: _hypercube(3),
            "octahedron": lambda: _orthoplex(3),
            "icosahedron": _icosahedron,
            "dodecahedron": _dodecahedron,
        }
        raw, name = builders[family](), family
    elif family in FOUR_D:
        if dimension != 4:
            raise PolytopeError(f"{family} requires dimension 4")
        builders = {
            "5-cell": lambda: _simplex(4),
            "8-cell": lambda: _hypercube(4),
            "16-cell": lambda: _orthoplex(4),
            "24-cell": _cell24,
        }
        raw, name = builders[family](), family
    elif family in FAMILIES:
        if dimension < 2:
            raise PolytopeError(f"{family} requires dimension >= 2")
        builders = {"simplex": _simplex, "hypercube": _hypercube, "orthoplex": _orthoplex}
        raw, name = builders[family](dimension), f"{family}:{dimension}"
    else:
        raise PolytopeError(f"unknown polytope family {family!r}")

    raw = raw - raw.mean(axis=0)
    edges = detect_edges(raw)
    i, j = edges[0]
    raw_len = float(np.linalg.norm(raw[i] - raw[j]))
    verts = raw * (size / raw_len)
    return Polytope(dimension, verts, tuple(edges), float(size), name)


def parse_id(identifier: str) -> tuple[str, int, int | None]:
    """Resolve a catalog identifier into ``(family, dimension, n_vertices)``."""
    ident = identifier.strip().lower()
    if ident in POLYGON_ALIASES:
        return "polygon", 2, POLYGON_ALIASES[ident]
    if ident in PLATONIC:
        return ident, 3, None
    if ident in FOUR_D:
        return ident, 4, None
    family, sep, arg = ident.partition(":")
    if sep and family in ("polygon",) + FAMILIES:
        try:
            value = int(arg)
        except ValueError:
            raise PolytopeError(f"bad catalog identifier {identifier!r}") from None
        if family == "polygon":
            return "polygon", 2, value
        return family, value, None
    raise PolytopeError(f"unknown polytope identifier {identifier!r}")


def polytope_from_id(identifier: str, size: float = 1.0) -> Polytope:
    """Build a catalog polytope from a stable identifier such as ``"hypercube:5"``."""
    family, dim, count = parse_id(identifier)
    return generate_polytope(family, dim, size, n_vertices=count)


def expected_counts(identifier: str) -> tuple[int, int]:
    """Vertex and edge counts of a catalog entry, from the family formulas."""
    family, n, k = parse_id(identifier)
    if family == "polygon":
        return k, k
    table = {
        "tetrahedron": (4, 6), "cube": (8, 12), "octahedron": (6, 12),
        "icosahedron": (12, 30), "dodecahedron": (20, 30),
        "5-cell": (5, 10), "8-cell": (16, 32), "16-cell": (8, 24), "24-cell": (24, 96),
    }
    if family in table:
        return table[family]
    if family == "simplex":
        return n + 1, n * (n + 1) // 2
    if family == "hypercube":
        return 2 ** n, n * 2 ** (n - 1)
    return 2 * n, 2 * n * (n - 1)  # orthoplex


# -- orientation ----------------------------------------------------------------

def _axis_parallel_edge(p: Polytope, axis: int = 0) -> tuple[int, int] | None:
    for i, j in p.edges:
        d = p.vertices[j] - p.vertices[i]
        rest = np.delete(d, axis)
        if np.all(np.abs(rest) <= REL_TOL * p.edge_length):
            return i, j
    return None


def canonical_edge(p: Polytope) -> tuple[int, int]:
    """Lexicographically smallest edge, comparing sorted endpoint coordinates."""
    def key(edge):
        a, b = (tuple(np.round(p.vertices[k], 12)) for k in edge)
        return tuple(sorted((a, b)))
    return min(p.edges, key=key)


def _householder(u: np.ndarray, target: np.ndarray) -> np.ndarray:
    w = u - target
    norm = np.linalg.norm(w)
    n = len(u)
    if norm < 1e-15:
        return np.eye(n)
    w = w / norm
    return np.eye(n) - 2.0 * np.outer(w, w)


def orient_edge_to_axis(p: Polytope) -> Polytope:
    """Rotate ``p`` so that one edge is parallel to the first coordinate axis.

    Returns ``p`` itself when an edge is already axis-parallel. Otherwise the
    canonical edge is mapped onto +e1 by a Householder reflection, composed
    with a reflection of the second axis so the result is a proper rotation.
    """
    if _axis_parallel_edge(p) is not None:
        return p
    i, j = canonical_edge(p)
    u = p.vertices[j] - p.vertices[i]
    u = u / np.linalg.norm(u)
    e1 = np.zeros(p.dimension)
    e1[0] = 1.0
    rot = _householder(u, e1)
    flip = np.eye(p.dimension)
    flip[1, 1] = -1.0
    rot = flip @ rot
    verts = p.vertices @ rot.T
    # clear round-off on the oriented edge so it is exactly axis-parallel
    d = verts[j] - verts[i]
    mid = (verts[j] + verts[i]) / 2.0
    verts[i, 1:] = mid[1:]
    verts[j, 1:] = mid[1:]
    verts[i, 0] = mid[0] - d[0] / 2.0
    verts[j, 0] = mid[0] + d[0] / 2.0
    return Polytope(p.dimension, verts, p.edges, p.edge_length, p.name)


def random_rotation(dimension: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random orthogonal matrix (QR of a Gaussian matrix)."""
    q, r = np.linalg.qr(rng.standard_normal((dimension, dimension)))
    return q * np.sign(np.diag(r))
