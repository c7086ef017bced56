"""Convex-geometry substrate: hulls, volumes, enumeration, sums, subdivisions."""

import itertools
import random
from fractions import Fraction

import pytest

from conftest import (
    apply_affine,
    box,
    random_unimodular,
    simplex3,
    simplex_points3,
    EXTROP_POINTS,
    EXTROP_U,
)
from torjet import (
    convex_hull,
    hull,
    interior_hull,
    lattice_points,
    minkowski_sum,
    mixed_volume3,
    normalized_volume,
    regular_subdivision,
    tightened_polytope,
)
from torjet.errors import (
    DimensionMismatch,
    DimensionUnsupported,
    EmptyInput,
    LengthMismatch,
    NotFullDimensional,
)
from torjet.lattice import (
    dimension_tag,
    face_volume,
    lattice_length,
    relative_normalized_volume,
    vdot,
)


def test_hull_of_dilated_simplex_points():
    P = convex_hull(simplex_points3(2))
    assert P.vertices == ((0, 0, 0), (0, 0, 2), (0, 2, 0), (2, 0, 0))


def test_hull_removes_duplicates():
    P = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1), (1, 1)])
    assert P.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert len(P.faces[1]) == 4


def test_hull_of_extrop_configuration():
    P = convex_hull(EXTROP_POINTS)
    assert P.vertices == ((0, 0), (0, 3), (3, 0))


def test_hull_errors():
    with pytest.raises(EmptyInput):
        convex_hull([])
    with pytest.raises(NotFullDimensional) as err:
        convex_hull([(0, 0, 0), (1, 1, 0), (2, 2, 0)])
    assert err.value.actual_dim == 1
    with pytest.raises(DimensionUnsupported):
        convex_hull([(0, 0, 0, 0), (1, 0, 0, 0)])


def test_hull_idempotence():
    rng = random.Random(5)
    for _ in range(15):
        pts = [
            tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(rng.randint(4, 12))
        ]
        try:
            P = convex_hull(pts)
        except NotFullDimensional:
            continue
        again = convex_hull(P.vertices)
        assert again.vertices == P.vertices
        assert again.facets == P.facets


def test_facets_tight_and_vertices_saturated():
    for P in (box(2, 3, 4), simplex3(3), convex_hull(simplex_points3(2))):
        n = P.ambient_dim
        for nu, a in P.facets:
            tight = [v for v in P.vertices if vdot(nu, v) == a]
            assert len(tight) >= n
        for v in P.vertices:
            active = [1 for nu, a in P.facets if vdot(nu, v) == a]
            assert len(active) >= n


def test_normalized_volume_examples():
    assert normalized_volume(box(2, 2, 2)) == 48
    assert normalized_volume(convex_hull([(0,), (7,)])) == 7
    assert normalized_volume(simplex3(2)) == 8


def test_volume_scales_with_dilation():
    rng = random.Random(11)
    for _ in range(10):
        pts = [tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(8)]
        try:
            P = convex_hull(pts)
        except NotFullDimensional:
            continue
        v = normalized_volume(P)
        for k in (2, 3):
            assert normalized_volume(P.dilate(k)) == k**3 * v


def test_face_volume_conventions():
    P = box(2, 2, 2)
    for f in P.faces[0]:
        assert face_volume(P, f) == 1
    assert {face_volume(P, f) for f in P.faces[1]} == {2}
    assert {face_volume(P, f) for f in P.faces[2]} == {8}
    # skew edge measured in its own lattice
    assert relative_normalized_volume([(0, 0, 0), (2, 2, 0)]) == 2


def test_lattice_points_counts():
    d2 = convex_hull(simplex_points3(2))
    assert len(lattice_points(d2)) == 10
    assert lattice_points(d2, strict=True) == []
    assert lattice_points(box(2, 2, 2), strict=True) == [(1, 1, 1)]


def test_lattice_point_count_unimodular_invariance(rng):
    P = box(2, 3, 2)
    count = len(lattice_points(P))
    for _ in range(5):
        mat = random_unimodular(rng, 3)
        shift = tuple(rng.randint(-4, 4) for _ in range(3))
        Q = convex_hull(apply_affine(mat, shift, P.vertices))
        assert len(lattice_points(Q)) == count


def test_interior_hull_examples():
    assert interior_hull(box(2, 2, 2)).vertices == ((1, 1, 1),)
    ih = interior_hull(simplex3(6))
    assert ih.vertices == ((1, 1, 1), (1, 1, 3), (1, 3, 1), (3, 1, 1))
    seg = interior_hull(box(2, 2, 3))
    assert dimension_tag(seg) == "segment"
    assert seg.vertices == ((1, 1, 1), (1, 1, 2))
    assert dimension_tag(interior_hull(simplex3(2))) == "empty"


def test_interior_hull_matches_enumeration():
    # independent oracle: direct inequality scan over the bounding box
    P = simplex3(6)
    expected = [
        (x, y, z)
        for x in range(1, 6)
        for y in range(1, 6)
        for z in range(1, 6)
        if x + y + z <= 5
    ]
    assert sorted(lattice_points(P, strict=True)) == sorted(expected)


def test_tightened_polytope_examples():
    cube = box(2, 2, 2)
    assert tightened_polytope(cube, 1).vertices == ((1, 1, 1),)
    Q = tightened_polytope(cube, 2)
    assert Q.vertices == tuple(sorted(itertools.product((1, 3), repeat=3)))
    assert tightened_polytope(simplex3(2), 1).is_empty


def test_minkowski_examples():
    d2 = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert minkowski_sum(d2, d2).vertices == ((0, 0), (0, 2), (2, 0))
    pt = hull([(5, -1)])
    assert minkowski_sum(convex_hull([(0, 0), (2, 0), (0, 2)]), pt).vertices == (
        (5, -1), (5, 1), (7, -1),
    )
    cay = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 0, 1)])
    doubled = minkowski_sum(cay, cay)
    assert doubled == cay.dilate(2)
    with pytest.raises(DimensionMismatch):
        minkowski_sum(d2, box(1, 1, 1))


def test_mixed_volume_examples():
    cube = box(2, 2, 2)
    assert mixed_volume3(cube, cube, cube) == normalized_volume(cube) == 48
    seg = hull([(1, 1, 1), (1, 1, 2)])
    assert mixed_volume3(box(2, 2, 3), seg, seg) == 0
    e1 = hull([(0, 0, 0), (1, 0, 0)])
    e2 = hull([(0, 0, 0), (0, 1, 0)])
    e3 = hull([(0, 0, 0), (0, 0, 1)])
    assert mixed_volume3(e1, e2, e3) == 1


def test_mixed_volume_symmetry_and_multilinearity(rng):
    def small(seed_pts):
        return hull(seed_pts)

    for _ in range(5):
        polys = []
        for _ in range(4):
            pts = [tuple(rng.randint(0, 2) for _ in range(3)) for _ in range(5)]
            polys.append(small(pts))
        p1, p2, p3, p4 = polys
        base = mixed_volume3(p1, p2, p3)
        for perm in itertools.permutations((p1, p2, p3)):
            assert mixed_volume3(*perm) == base
        summed = minkowski_sum(p1, p4)
        assert mixed_volume3(summed, p2, p3) == base + mixed_volume3(p4, p2, p3)


def test_regular_subdivision_1d():
    sub = regular_subdivision([(0,), (1,), (2,)], [0, 1, 0])
    assert [c.indices for c in sub.cells] == [(0, 2)]
    sub = regular_subdivision([(0,), (1,), (2,)], [0, -1, 0])
    assert [c.indices for c in sub.cells] == [(0, 1), (1, 2)]
    with pytest.raises(LengthMismatch):
        regular_subdivision([(0,), (1,)], [0])


def test_regular_subdivision_extrop_cells():
    sub = regular_subdivision(EXTROP_POINTS, EXTROP_U)
    assert [c.indices for c in sub.cells] == [
        (0, 1, 4),
        (1, 2, 3, 5, 6, 8),
        (1, 4, 5, 7, 8, 9),
    ]


def test_regular_subdivision_cover_and_face_intersections(rng):
    pts = EXTROP_POINTS
    total = relative_normalized_volume(pts)
    for _ in range(12):
        u = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in pts]
        sub = regular_subdivision(pts, u)
        # exact cover: cell volumes add up to the configuration hull volume
        vol = sum(relative_normalized_volume([pts[i] for i in c.indices]) for c in sub.cells)
        assert vol == total
        # tightness: marked indices are exactly where the support function is tight
        for cell in sub.cells:
            c, c0 = cell.support
            for i, p in enumerate(pts):
                val = vdot(c, p) + c0
                assert val <= u[i]
                assert (val == u[i]) == (i in cell.indices)
        # pairwise intersections happen along shared tight sets
        for ca, cb in itertools.combinations(sub.cells, 2):
            shared = set(ca.indices) & set(cb.indices)
            gb_c, gb_c0 = cb.support
            expected = {
                i for i in ca.indices if vdot(gb_c, pts[i]) + gb_c0 == u[i]
            }
            assert shared == expected


def test_lattice_length():
    assert lattice_length((0, 0), (4, 6)) == 2
    assert lattice_length((1, 1, 1), (1, 1, 5)) == 4
