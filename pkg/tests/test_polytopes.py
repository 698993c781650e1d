import itertools
import math

import numpy as np
import pytest

from polychaos.polytopes import (PHI, PolytopeError, canonical_edge, detect_edges,
                                 expected_counts, from_vertices, generate_polytope,
                                 orient_edge_to_axis, polytope_from_id, random_rotation)

from conftest import CATALOG_IDS


def brute_distances(verts):
    return {(i, j): math.dist(verts[i], verts[j])
            for i, j in itertools.combinations(range(len(verts)), 2)}


def test_icosahedron_matches_golden_ratio_coordinates():
    p = generate_polytope("icosahedron", 3, 2.0)
    expected = set()
    for s1, s2 in itertools.product((1, -1), repeat=2):
        expected |= {(0.0, s1 * PHI, s2 * 1.0), (s1 * 1.0, 0.0, s2 * PHI), (s1 * PHI, s2 * 1.0, 0.0)}
    got = {tuple(np.round(v, 12)) for v in p.vertices}
    assert got == {tuple(np.round(v, 12)) for v in expected}
    assert p.edge_length == 2.0


def test_unit_square_is_the_2_cube():
    p = generate_polytope("hypercube", 2, 1.0)
    assert p.n_vertices == 4
    assert len(p.edges) == 4
    assert p.edge_length == 1.0
    np.testing.assert_allclose(sorted(map(tuple, np.abs(p.vertices))), [(0.5, 0.5)] * 4)


def test_24_cell_edges_by_brute_force():
    p = generate_polytope("24-cell", 4, 1.0)
    dist = brute_distances(p.vertices.tolist())
    unit = [pair for pair, d in dist.items() if abs(d - 1.0) < 1e-9]
    assert p.n_vertices == 24
    assert len(unit) == 96
    assert sorted(unit) == sorted(p.edges)
    assert min(dist.values()) == pytest.approx(1.0, rel=1e-9)


@pytest.mark.parametrize("ident", CATALOG_IDS)
def test_catalog_invariants(ident):
    p = polytope_from_id(ident, size=1.7)
    v_count, e_count = expected_counts(ident)
    assert p.n_vertices == v_count
    assert len(p.edges) == e_count
    dist = brute_distances(p.vertices.tolist())
    assert min(dist.values()) == pytest.approx(1.7, rel=1e-9)
    assert all(d >= 1.7 - 1e-9 for d in dist.values())
    for i, j in p.edges:
        assert i < j
        assert dist[(i, j)] == pytest.approx(p.edge_length, rel=1e-9)
    np.testing.assert_allclose(p.vertices.mean(axis=0), 0.0, atol=1e-12)


def test_vertices_are_read_only():
    p = polytope_from_id("cube")
    with pytest.raises(ValueError):
        p.vertices[0, 0] = 3.0


@pytest.mark.parametrize("args", [
    ("rhombicuboctahedron", 3),
    ("icosahedron", 4),
    ("24-cell", 3),
    ("polygon", 3),
    ("simplex", 1),
])
def test_generate_rejects_bad_family_or_dimension(args):
    with pytest.raises(PolytopeError):
        generate_polytope(*args, 1.0, n_vertices=5)


def test_polygon_needs_three_vertices():
    with pytest.raises(PolytopeError):
        generate_polytope("polygon", 2, 1.0, n_vertices=2)
    with pytest.raises(PolytopeError):
        generate_polytope("polygon", 2, 1.0)


def test_bad_identifiers():
    for ident in ("polygon:x", "nonagon-ish", "simplex", "prism:3"):
        with pytest.raises(PolytopeError):
            polytope_from_id(ident)


def test_aliases_resolve_to_polygons():
    assert polytope_from_id("pentagon").name == "polygon:5"
    assert polytope_from_id("Hexagon").n_vertices == 6


def test_detect_edges_square_and_pentagon():
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert sorted(detect_edges(square)) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    theta = 2 * np.pi * np.arange(5) / 5
    assert len(detect_edges(np.column_stack([np.cos(theta), np.sin(theta)]))) == 5


def test_detect_edges_icosahedron_brute_force():
    p = generate_polytope("icosahedron", 3, 2.0)
    dist = brute_distances(p.vertices.tolist())
    assert len(dist) == 66
    brute = sorted(pair for pair, d in dist.items() if abs(d - 2.0) < 1e-9)
    assert len(brute) == 30
    assert sorted(detect_edges(p.vertices)) == brute


def test_detect_edges_errors():
    with pytest.raises(PolytopeError):
        detect_edges([(0.0, 0.0)])
    with pytest.raises(PolytopeError):
        detect_edges([(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)])


def test_orient_keeps_axis_aligned_square():
    p = from_vertices([(0, 0), (1, 0), (1, 1), (0, 1)], "square")
    assert orient_edge_to_axis(p) is p


def test_orient_keeps_standard_icosahedron():
    p = generate_polytope("icosahedron", 3, 2.0)
    assert orient_edge_to_axis(p) is p


def _axis_parallel_pairs(verts, tol=1e-9):
    out = []
    for i, j in itertools.combinations(range(len(verts)), 2):
        d = verts[j] - verts[i]
        if np.all(np.abs(d[1:]) <= tol) and abs(d[0]) > tol:
            out.append((i, j))
    return out


def test_orient_3_simplex_from_basis_vectors():
    # e1..e4 in R^4, expressed in an orthonormal basis of the sum-zero hyperplane
    e = np.eye(4)
    q, _ = np.linalg.qr(np.column_stack([np.ones(4), np.eye(4)[:, :3]]))
    basis = q[:, 1:4]
    verts = (e - e.mean(axis=0)) @ basis
    p = from_vertices(verts, "simplex:3")
    assert len(p.edges) == 6
    assert not _axis_parallel_pairs(p.vertices)
    o = orient_edge_to_axis(p)
    assert _axis_parallel_pairs(o.vertices)
    before, after = brute_distances(p.vertices), brute_distances(o.vertices)
    for pair in before:
        assert after[pair] == pytest.approx(before[pair], rel=1e-9)


@pytest.mark.parametrize("ident", CATALOG_IDS)
def test_orient_after_random_rotation(ident, rng):
    p = polytope_from_id(ident)
    rotated = p.transformed(random_rotation(p.dimension, rng))
    o = orient_edge_to_axis(rotated)
    i, j = canonical_edge(rotated)
    d = o.vertices[j] - o.vertices[i]
    np.testing.assert_allclose(d[1:], 0.0, atol=1e-12)
    assert abs(d[0]) == pytest.approx(p.edge_length, rel=1e-9)
    before, after = brute_distances(rotated.vertices), brute_distances(o.vertices)
    for pair in before:
        assert after[pair] == pytest.approx(before[pair], rel=1e-9)


def test_canonical_edge_is_lexicographic_minimum():
    # ((0,0),(0,1)) sorts before ((0,0),(1,0))
    p = from_vertices([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert canonical_edge(p) == (0, 3)
