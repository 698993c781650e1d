"""The chaos game in a regular polytope: x <- (1 - r) x + r v_i, v_i uniform."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from .geometry import contains, halfspaces
from .polytopes import Polytope

DEFAULT_DISCARD = 6


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class GcgConfig:
    """Parameters of one chaos-game run.

    ``iterations`` counts generated points (each produced by one vertex
    draw); the first ``discard`` of them are dropped from the output.
    """

    ratio: float
    iterations: int = 100_000
    discard: int = DEFAULT_DISCARD
    seed: int = 0
    initial_point: tuple[float, ...] | None = None

    def __post_init__(self):
        if not 0.0 < self.ratio < 1.0:
            raise ConfigError(f"ratio must lie in (0, 1), got {self.ratio!r}")
        if self.iterations < 1:
            raise ConfigError("iterations must be positive")
        if self.discard < 0 or self.discard >= self.iterations:
            raise ConfigError("need 0 <= discard < iterations")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        if self.initial_point is not None:
            object.__setattr__(self, "initial_point",
                               tuple(float(c) for c in self.initial_point))


@dataclass(frozen=True, eq=False)
class PointCloud:
    dimension: int
    points: np.ndarray
    colors: np.ndarray  # 1-based vertex index used for each point
    config: GcgConfig
    polytope_name: str
    initial_point: np.ndarray
    burn_in: int = 0  # leading retained points exempt from hull membership

    def __len__(self):
        return len(self.points)


def gcg_step(x, vertex, r: float) -> np.ndarray:
    """One chaos-game move: ``(1 - r) * x + r * vertex``."""
    x = np.asarray(x, dtype=float)
    vertex = np.asarray(vertex, dtype=float)
    if x.shape != vertex.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {vertex.shape}")
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    return (1.0 - r) * x + r * vertex


def burn_in_steps(r: float, eps: float = 1e-9) -> int:
    """Steps after which an arbitrary start is within ``eps`` (relative) of the hull."""
    return math.ceil(math.log(eps) / math.log(1.0 - r))


def sample_in_hull(p: Polytope, rng: np.random.Generator, max_tries: int = 10_000) -> np.ndarray:
    """Uniform point in conv(p) by rejection from the bounding box.

    Falls back to a Dirichlet-weighted vertex combination if the hull fills
    too little of its box for rejection to succeed.
    """
    normals, offsets = halfspaces(p.vertices)
    lo, hi = p.vertices.min(axis=0), p.vertices.max(axis=0)
    for _ in range(max_tries):
        x = rng.uniform(lo, hi)
        if contains(normals, offsets, x, tol=0.0)[0]:
            return x
    w = rng.dirichlet(np.ones(p.n_vertices))
    return w @ p.vertices


def gcg_run(p: Polytope, cfg: GcgConfig) -> PointCloud:
    """Play the chaos game in ``p``.

    Vertices are drawn uniformly and independently from a PCG64 stream
    seeded with ``cfg.seed``; the same seed always reproduces the same cloud.
    """
    rng = np.random.default_rng(cfg.seed)
    if cfg.initial_point is None:
        x0 = sample_in_hull(p, rng)
        burn = 0
    else:
        x0 = np.array(cfg.initial_point, dtype=float)
        if x0.shape != (p.dimension,):
            raise ConfigError("initial point has the wrong dimension")
        normals, offsets = halfspaces(p.vertices)
        inside = contains(normals, offsets, x0, tol=1e-9 * p.diameter)[0]
        burn = 0 if inside else max(0, burn_in_steps(cfg.ratio) - cfg.discard)

    choices = rng.integers(0, p.n_vertices, size=cfg.iterations)
    targets = p.vertices[choices]
    r = cfg.ratio
    # y[k] = r * v[k] + (1 - r) * y[k-1], the same arithmetic as gcg_step
    zi = ((1.0 - r) * x0)[None, :]
    pts, _ = lfilter([r, 0.0], [1.0, -(1.0 - r)], targets, axis=0, zi=zi)

    keep = slice(cfg.discard, None)
    points = np.ascontiguousarray(pts[keep])
    colors = choices[keep] + 1
    points.setflags(write=False)
    colors.setflags(write=False)
    return PointCloud(p.dimension, points, colors, cfg, p.name, x0,
                      min(burn, len(points)))
