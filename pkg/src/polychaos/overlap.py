"""Do the level-1 copies of a polytope overlap at ratio r, and where does that stop?

The copies toward vertices i and j are ``(1 - r) P + r v_i`` and
``(1 - r) P + r v_j``. Their Minkowski difference is
``D = (1 - r) K + r (v_j - v_i)`` with ``K = P - P`` the difference body, so
the interiors meet exactly when the origin is interior to D. The signed
margin is the signed distance from D to the origin: the penetration depth
(negative) from K's facets when inside, the GJK distance (positive) when
outside.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .geometry import halfspaces
from .polytopes import Polytope

SEPARATION_REL_TOL = 1e-9


class BracketError(RuntimeError):
    """The overlap predicate could not be bracketed, or was not monotone in r."""

    def __init__(self, message, probes=()):
        super().__init__(message)
        self.probes = list(probes)


@dataclass(frozen=True)
class DifferenceBody:
    points: np.ndarray   # distinct vertex differences v_a - v_b
    normals: np.ndarray  # facet normals of conv(points), unit length
    offsets: np.ndarray  # facet offsets: normals @ x <= offsets


@dataclass(frozen=True)
class OverlapVerdict:
    ratio: float
    overlapping_pairs: list[tuple[int, int]]
    max_penetration: float  # most negative margin, 0.0 if nothing penetrates
    tau: float

    @property
    def overlapping(self) -> bool:
        return bool(self.overlapping_pairs)


@dataclass
class SearchResult:
    r_low: float
    r_high: float
    r_estimate: float
    tolerance: float
    requested_tolerance: float
    probes: list[tuple[float, OverlapVerdict]] = field(repr=False)


@lru_cache(maxsize=128)
def difference_body(p: Polytope) -> DifferenceBody:
    v = p.vertices
    diffs = (v[:, None, :] - v[None, :, :]).reshape(-1, p.dimension)
    scale = p.edge_length
    _, keep = np.unique(np.round(diffs / scale, 9), axis=0, return_index=True)
    points = diffs[np.sort(keep)]
    normals, offsets = halfspaces(points)
    return DifferenceBody(points, normals, offsets)


def separation_tau(p: Polytope) -> float:
    return SEPARATION_REL_TOL * p.diameter


# -- GJK distance to the origin --------------------------------------------------

def _closest_on_simplex(w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Closest point to the origin in conv(w) for a small simplex w (m x n).

    Enumerates faces; returns (point, indices of the supporting face).
    """
    m = len(w)
    best, best_idx, best_sq = None, None, np.inf
    for size in range(1, m + 1):
        for idx in itertools.combinations(range(m), size):
            pts = w[list(idx)]
            if size == 1:
                lam = np.ones(1)
            else:
                base = pts[0]
                edges = pts[1:] - base
                gram = edges @ edges.T
                try:
                    mu = np.linalg.solve(gram, -edges @ base)
                except np.linalg.LinAlgError:
                    continue
                lam = np.concatenate([[1.0 - mu.sum()], mu])
                if np.any(lam <= 0.0):
                    continue
            x = lam @ pts
            sq = float(x @ x)
            if sq < best_sq:
                best, best_idx, best_sq = x, np.array(idx), sq
    return best, best_idx


def gjk_distance(points, rel_tol: float = 1e-13, max_iter: int = 200) -> float:
    """Euclidean distance from the origin to conv(points); 0 if the origin is inside."""
    pts = np.asarray(points, dtype=float)
    n = pts.shape[1]
    scale = float(np.abs(pts).max()) or 1.0
    v = pts[np.argmin((pts ** 2).sum(1))]
    simplex = v[None, :]
    for _ in range(max_iter):
        vv = float(v @ v)
        if vv <= (1e-15 * scale) ** 2:
            return 0.0
        w = pts[np.argmin(pts @ v)]
        if vv - float(v @ w) <= rel_tol * vv:
            return float(np.sqrt(vv))
        simplex = np.vstack([simplex, w])
        v, idx = _closest_on_simplex(simplex)
        simplex = simplex[idx]
        if len(simplex) > n:
            return 0.0
    return float(np.sqrt(v @ v))


# -- overlap predicates ------------------------------------------------------------

def _depths(p: Polytope, r: float, pairs: np.ndarray) -> np.ndarray:
    """Signed depth of the origin inside D for each (i, j) pair; > 0 means inside."""
    body = difference_body(p)
    t = r * (p.vertices[pairs[:, 1]] - p.vertices[pairs[:, 0]])
    return ((1.0 - r) * body.offsets[None, :] + t @ body.normals.T).min(axis=1)


def _check_ratio(r: float):
    if not 0.0 < r < 1.0:
        raise ValueError(f"ratio must lie in (0, 1), got {r!r}")


def copies_overlap(p: Polytope, r: float, i: int, j: int) -> tuple[bool, float]:
    """Whether copies i and j (0-based vertex indices) have intersecting interiors.

    Returns ``(overlaps, margin)``. ``margin`` is the largest separating gap
    between the copies: their distance when disjoint, minus the penetration
    depth when they overlap. Contact within tau = 1e-9 * diameter counts as
    touching, not overlapping.
    """
    _check_ratio(r)
    if i == j:
        raise ValueError("a copy trivially overlaps itself; need i != j")
    if not (0 <= i < p.n_vertices and 0 <= j < p.n_vertices):
        raise IndexError("vertex index out of range")
    a, b = min(i, j), max(i, j)
    depth = float(_depths(p, r, np.array([[a, b]]))[0])
    tau = separation_tau(p)
    if depth >= -tau:
        margin = -depth + 0.0  # no negative zero
    else:
        body = difference_body(p)
        shifted = (1.0 - r) * body.points + r * (p.vertices[b] - p.vertices[a])
        margin = gjk_distance(shifted)
    return margin < -tau, margin


def any_overlap_at(p: Polytope, r: float) -> OverlapVerdict:
    """Check all C(V, 2) copy pairs at ratio r."""
    _check_ratio(r)
    iu, ju = np.triu_indices(p.n_vertices, k=1)
    pairs = np.column_stack([iu, ju])
    depth = _depths(p, r, pairs)
    tau = separation_tau(p)
    hit = depth > tau
    overlapping = [(int(a), int(b)) for a, b in pairs[hit]]
    max_pen = min(0.0, float(-depth.max()))
    return OverlapVerdict(float(r), overlapping, max_pen, tau)


def search_r_opt(p: Polytope, tolerance: float = 1e-4, r_min: float = 0.3,
                 r_max: float = 0.99, max_expand: int = 40) -> SearchResult:
    """Bisect on the overlap predicate for the smallest non-overlapping ratio.

    The bracket ``[r_min, r_max]`` is widened if needed: r_min is halved
    until the copies overlap, r_max moved halfway to 1 until they do not.
    Raises BracketError if no bracket is found or the probes show the
    predicate is not monotone in r.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    probes: list[tuple[float, OverlapVerdict]] = []

    def probe(r):
        verdict = any_overlap_at(p, r)
        probes.append((r, verdict))
        return verdict.overlapping

    lo = r_min
    for _ in range(max_expand):
        if probe(lo):
            break
        lo /= 2.0
    else:
        raise BracketError(f"{p.name}: no overlapping ratio found down to {lo:g}", probes)
    hi = r_max
    for _ in range(max_expand):
        if not probe(hi):
            break
        hi = 1.0 - (1.0 - hi) / 2.0
    else:
        raise BracketError(f"{p.name}: copies still overlap at r = {hi!r}", probes)

    lo = max(r for r, v in probes if v.overlapping)
    hi = min(r for r, v in probes if not v.overlapping)
    if lo >= hi:
        raise BracketError(f"{p.name}: overlap predicate is not monotone in r", probes)

    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if probe(mid):
            lo = mid
        else:
            hi = mid

    _check_monotone(p, probes)
    return SearchResult(lo, hi, 0.5 * (lo + hi), hi - lo, tolerance, probes)


def _check_monotone(p: Polytope, probes):
    ordered = sorted(probes, key=lambda rv: rv[0])
    flags = [v.overlapping for _, v in ordered]
    first_clear = flags.index(False) if False in flags else len(flags)
    if any(flags[first_clear:]):
        raise BracketError(f"{p.name}: overlap reappears at larger r", probes)
    pens = [v.max_penetration for _, v in ordered]
    tau = separation_tau(p)
    if any(b < a - tau for a, b in zip(pens, pens[1:])):
        raise BracketError(f"{p.name}: penetration depth grows with r", probes)
