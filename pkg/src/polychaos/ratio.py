"""Delta-parallel and the closed-form optimal contraction ratio.

``delta_parallel`` enumerates every inter-vertex vector and keeps the longest
one parallel to some edge. ``delta_parallel_axis`` is the shortcut that reads
the largest first-coordinate spread of an edge-to-axis oriented polytope.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .polytopes import REL_TOL, Polytope, _axis_parallel_edge

PARALLEL_TOL = 1e-9


class RatioError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class VectorSet:
    """One difference vector per vertex pair, with the pair it came from."""

    vectors: np.ndarray
    source_pairs: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.source_pairs)

    @property
    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.vectors, axis=1)


@dataclass(frozen=True)
class RatioReport:
    delta_parallel: float
    edge_length: float
    r_opt: float
    witness_pair: tuple[int, int]
    witness_edge: tuple[int, int]

    @property
    def delta_over_ell(self) -> float:
        return self.delta_parallel / self.edge_length


def _canonical_sign(vectors: np.ndarray, scale: float) -> np.ndarray:
    # first component that is nonzero (beyond round-off) made positive
    out = vectors.copy()
    significant = np.abs(out) > 1e-12 * scale
    first = significant.argmax(axis=1)
    signs = np.sign(out[np.arange(len(out)), first])
    signs[signs == 0] = 1.0
    return out * signs[:, None]


def build_vector_sets(p: Polytope) -> tuple[VectorSet, VectorSet]:
    """Return (all pair vectors, edge vectors), sign-canonicalised.

    The first set has C(V, 2) members; the second is its restriction to
    the polytope's edges.
    """
    iu, ju = np.triu_indices(p.n_vertices, k=1)
    vecs = _canonical_sign(p.vertices[ju] - p.vertices[iu], p.edge_length)
    pairs = tuple(zip(iu.tolist(), ju.tolist()))
    a = VectorSet(vecs, pairs)
    index = {pair: k for k, pair in enumerate(pairs)}
    edge_rows = [index[e] for e in p.edges]
    b = VectorSet(vecs[edge_rows], tuple(p.edges))
    return a, b


def delta_parallel(a: VectorSet, b: VectorSet) -> tuple[float, tuple[int, int], tuple[int, int]]:
    """Longest vector of ``a`` parallel to at least one vector of ``b``.

    Parallel means ``|u.v| >= (1 - 1e-9) |u||v|``. Ties (within 1e-9
    relative) go to the lexicographically smallest pair; the reported edge
    is the smallest edge parallel to it.
    """
    na, nb = a.norms, b.norms
    cos = np.abs(a.vectors @ b.vectors.T) / np.outer(na, nb)
    parallel = cos >= 1.0 - PARALLEL_TOL
    has_parallel = parallel.any(axis=1)
    if not has_parallel.any():
        raise RatioError("no vector parallel to an edge; inconsistent vector sets")
    delta = float(na[has_parallel].max())
    winners = np.flatnonzero(has_parallel & (na >= delta * (1.0 - REL_TOL)))
    k = min(winners, key=lambda idx: a.source_pairs[idx])
    edge_idx = min(np.flatnonzero(parallel[k]), key=lambda idx: b.source_pairs[idx])
    return delta, a.source_pairs[k], b.source_pairs[edge_idx]


def delta_parallel_axis(p: Polytope) -> float:
    """Largest first-coordinate spread between two vertices.

    Only meaningful once an edge lies parallel to axis 1; raises RatioError
    otherwise (call ``orient_edge_to_axis`` first).
    """
    if _axis_parallel_edge(p) is None:
        raise RatioError(f"{p.name}: no edge parallel to axis 1; orient the polytope first")
    x = p.vertices[:, 0]
    return float(x.max() - x.min())


def r_opt_formula(delta: float, ell: float) -> float:
    """Optimal ratio delta / (delta + ell)."""
    if ell <= 0:
        raise RatioError("edge length must be positive")
    if delta < ell * (1.0 - REL_TOL):
        raise RatioError(f"delta_parallel {delta!r} < edge length {ell!r}")
    return delta / (delta + ell)


def ratio_report(p: Polytope) -> RatioReport:
    a, b = build_vector_sets(p)
    delta, pair, edge = delta_parallel(a, b)
    return RatioReport(delta, p.edge_length, r_opt_formula(delta, p.edge_length), pair, edge)
