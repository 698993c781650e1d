"""Deterministic Hutchinson iteration on polytope copies, plus Hausdorff distance.

A level-k copy is ``s * base + offset`` with ``s = (1 - r)**k``; applying the
vertex map ``w_i(x) = (1 - r) x + r v_i`` to it gives scale ``(1 - r) s`` and
offset ``(1 - r) offset + r v_i``. Copies are kept as offset arrays rather
than full vertex lists so deep levels stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import directed_hausdorff

from .polytopes import Polytope

MAX_COPIES = 10_000_000


class CopyOverflowError(RuntimeError):
    pass


@dataclass(frozen=True)
class Copy:
    vertices: np.ndarray
    ancestry: tuple[int, ...]  # 1-based vertex labels, first map applied first


@dataclass(frozen=True, eq=False)
class CopySet:
    """All level-k images of a polytope under compositions of the vertex maps."""

    level: int
    ratio: float
    base: str
    base_vertices: np.ndarray
    offsets: np.ndarray    # (V**k, n)
    ancestry: np.ndarray   # (V**k, k), 1-based

    @property
    def scale(self) -> float:
        return (1.0 - self.ratio) ** self.level

    def __len__(self):
        return len(self.offsets)

    def __getitem__(self, idx) -> Copy:
        verts = self.scale * self.base_vertices + self.offsets[idx]
        return Copy(verts, tuple(int(a) for a in self.ancestry[idx]))

    def __iter__(self):
        for idx in range(len(self)):
            yield self[idx]

    def vertex_array(self) -> np.ndarray:
        """Copy vertices as an array of shape (copies, V, n)."""
        return self.scale * self.base_vertices[None, :, :] + self.offsets[:, None, :]

    def flatten(self) -> np.ndarray:
        """All copy vertices stacked into one point set (duplicates kept)."""
        return self.vertex_array().reshape(-1, self.base_vertices.shape[1])


def initial_copyset(p: Polytope, r: float) -> CopySet:
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    return CopySet(0, float(r), p.name, p.vertices,
                   np.zeros((1, p.dimension)), np.zeros((1, 0), dtype=np.int64))


def hutchinson_step(c: CopySet, p: Polytope, max_copies: int = MAX_COPIES) -> CopySet:
    """Map every copy through all V vertex maps of ``p``.

    Output order is ancestry-lexicographic: the new map index varies fastest.
    """
    if c.base_vertices.shape != p.vertices.shape:
        raise ValueError("copy set and polytope have mismatched dimensions")
    v = p.n_vertices
    if len(c) * v > max_copies:
        raise CopyOverflowError(f"{len(c) * v} copies exceed the cap of {max_copies}")
    r = c.ratio
    offsets = (1.0 - r) * c.offsets[:, None, :] + r * p.vertices[None, :, :]
    offsets = offsets.reshape(-1, p.dimension)
    labels = np.tile(np.arange(1, v + 1), len(c))[:, None]
    ancestry = np.hstack([np.repeat(c.ancestry, v, axis=0), labels])
    return CopySet(c.level + 1, r, c.base, c.base_vertices, offsets, ancestry)


def hutchinson_iterate(p: Polytope, r: float, k: int, max_copies: int = MAX_COPIES) -> CopySet:
    """Level-k copy set W^k(p)."""
    if k < 0:
        raise ValueError("level must be non-negative")
    if p.n_vertices ** k > max_copies:
        raise CopyOverflowError(
            f"{p.name} at level {k} needs {p.n_vertices ** k} copies (cap {max_copies})")
    c = initial_copyset(p, r)
    for _ in range(k):
        c = hutchinson_step(c, p, max_copies)
    return c


def hutchinson_points(points, p: Polytope, r: float) -> np.ndarray:
    """Apply W to a finite point set: the union of w_i(points) over all vertices."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    out = (1.0 - r) * pts[None, :, :] + r * p.vertices[:, None, :]
    return out.reshape(-1, p.dimension)


def hausdorff_distance(a, b) -> float:
    """Euclidean Hausdorff distance between two finite point sets.

    Uses the early-break max-min scan (worst case O(|A| |B|), typically far
    less on shuffled input); a 1e5 x 2e4 comparison takes a few seconds.
    """
    a = np.atleast_2d(np.asarray(a, dtype=float))
    b = np.atleast_2d(np.asarray(b, dtype=float))
    if a.size == 0 or b.size == 0:
        raise ValueError("Hausdorff distance needs two non-empty sets")
    if a.shape[1] != b.shape[1]:
        raise ValueError("point sets have different dimensions")
    return max(directed_hausdorff(a, b, seed=0)[0], directed_hausdorff(b, a, seed=0)[0])
