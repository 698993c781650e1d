"""Convex-hull helpers shared by the chaos engine and the overlap tests."""

from __future__ import annotations

import numpy as np
from scipy.spatial import ConvexHull


def halfspaces(points) -> tuple[np.ndarray, np.ndarray]:
    """Facet description ``A x <= b`` of conv(points), rows of A unit length.

    Duplicate facets reported by qhull for non-simplicial polytopes are merged.
    """
    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    eq = hull.equations  # a.x + c <= 0, |a| = 1
    normals, offsets = eq[:, :-1], -eq[:, -1]
    key = np.round(np.column_stack([normals, offsets / max(1.0, np.abs(offsets).max())]), 9)
    _, keep = np.unique(key, axis=0, return_index=True)
    keep.sort()
    return normals[keep], offsets[keep]


def contains(normals: np.ndarray, offsets: np.ndarray, points, tol: float = 1e-9) -> np.ndarray:
    """Boolean mask of points inside the halfspace intersection, slack ``tol``."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    return np.all(pts @ normals.T <= offsets + tol, axis=1)


def in_hull_lp(vertices, point, tol: float = 1e-9) -> bool:
    """Hull membership by linear feasibility (convex weights reproducing ``point``).

    Slow but independent of qhull; used to cross-check ``contains``.
    """
    from scipy.optimize import linprog

    verts = np.asarray(vertices, dtype=float)
    x = np.asarray(point, dtype=float)
    v = len(verts)
    # minimise the L1 residual of sum(w_k v_k) - x over the simplex of weights
    n = verts.shape[1]
    c = np.concatenate([np.zeros(v), np.ones(2 * n)])
    a_eq = np.zeros((n + 1, v + 2 * n))
    a_eq[:n, :v] = verts.T
    a_eq[:n, v:v + n] = np.eye(n)
    a_eq[:n, v + n:] = -np.eye(n)
    a_eq[n, :v] = 1.0
    b_eq = np.concatenate([x, [1.0]])
    res = linprog(c, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    return bool(res.status == 0 and res.fun <= tol)
