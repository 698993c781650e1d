"""Independent geometric oracles shared by several test modules."""

import numpy as np
from scipy.spatial import ConvexHull


def facets(vertices):
    eq = ConvexHull(np.asarray(vertices, dtype=float)).equations
    return eq[:, :-1], -eq[:, -1]


def in_some_copy(points, base_vertices, scale, offsets, tol=1e-9, chunk=256):
    """For each point, is it inside at least one copy ``scale * base + offset``?"""
    a, b = facets(base_vertices)
    proj_t = offsets @ a.T
    out = np.zeros(len(points), dtype=bool)
    for start in range(0, len(points), chunk):
        px = points[start:start + chunk] @ a.T
        inside = np.all(px[:, None, :] - proj_t[None, :, :] <= scale * b + tol, axis=2)
        out[start:start + chunk] = inside.any(axis=1)
    return out


def brute_hausdorff(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = np.sqrt(((a[:, None, :] - b[None, :, :]) ** 2).sum(-1))
    return max(d.min(axis=1).max(), d.min(axis=0).max())
