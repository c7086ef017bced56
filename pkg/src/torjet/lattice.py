"""Exact convex geometry over the integer lattice in ambient dimension 1..3.

All predicates are exact (integer or ``Fraction`` arithmetic); vertex lists,
facet normals and face lattices are deterministic, so golden tests can compare
structures byte-for-byte.  Facet inequalities are written ``<normal, x> >=
offset`` with primitive *inward* integer normals.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cmp_to_key
from math import factorial, gcd as _gcd

from .errors import (
    DimensionMismatch,
    DimensionUnsupported,
    EmptyInput,
    EmptySet,
    LengthMismatch,
    NotFullDimensional,
    TorjetError,
)
from .linalg import (
    lattice_coordinates,
    primitive,
    rank as mat_rank,
    saturation_basis,
    solve_right,
)

SMALL_HULL = 40  # below this, enumerate supporting planes directly


def _norm_coord(x):
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def norm_point(p):
    return tuple(_norm_coord(x) for x in p)


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vdot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vscale(a, s):
    return tuple(_norm_coord(s * x) for x in a)


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def affine_rank(points) -> int:
    """Dimension of the affine span (0 for a single point, -1 for none)."""
    pts = list(points)
    if not pts:
        return -1
    diffs = [vsub(p, pts[0]) for p in pts[1:]]
    diffs = [d for d in diffs if any(x != 0 for x in d)]
    if not diffs:
        return 0
    return mat_rank(diffs)


def lattice_length(a, b) -> int:
    """Number of lattice steps along the segment between two lattice points."""
    g = 0
    for x in vsub(b, a):
        g = _gcd(g, abs(int(x)))
    return g


# ---------------------------------------------------------------------------
# hull machinery
# ---------------------------------------------------------------------------


def _hull_1d(points):
    xs = sorted({p[0] for p in points})
    lo, hi = xs[0], xs[-1]
    if lo == hi:
        return [(lo,)], None
    vertices = [(lo,), (hi,)]
    facets = (((1,), lo), ((-1,), -hi))
    return vertices, facets


def _hull_2d_ccw(points):
    """Counterclockwise vertex cycle of a 2-dimensional hull (monotone chain)."""
    pts = sorted(set(points))
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _edge_inward_normal(a, b):
    """Primitive inward normal for edge a->b of a CCW polygon."""
    d = vsub(b, a)
    return primitive((-d[1], d[0]))


def _supporting_planes_3d(points):
    """All facet planes of Conv(points) spanned by input triples.

    Returns {(primitive inward normal, offset): None}.  Assumes the points
    affinely span R^3.  Each geometric plane is side-tested only once.
    """
    n = len(points)
    planes = {}
    seen = set()
    for i in range(n):
        pix, piy, piz = points[i]
        for j in range(i + 1, n):
            pj = points[j]
            d1x, d1y, d1z = pj[0] - pix, pj[1] - piy, pj[2] - piz
            for k in range(j + 1, n):
                pk = points[k]
                d2x, d2y, d2z = pk[0] - pix, pk[1] - piy, pk[2] - piz
                nux = d1y * d2z - d1z * d2y
                nuy = d1z * d2x - d1x * d2z
                nuz = d1x * d2y - d1y * d2x
                if not (nux or nuy or nuz):
                    continue
                if type(nux) is int and type(nuy) is int and type(nuz) is int:
                    g = _gcd(_gcd(abs(nux), abs(nuy)), abs(nuz))
                    nu_p = (nux // g, nuy // g, nuz // g)
                else:
                    nu_p = primitive((nux, nuy, nuz))
                lead = next(x for x in nu_p if x)
                if lead < 0:
                    nu_p = (-nu_p[0], -nu_p[1], -nu_p[2])
                a = _norm_coord(nu_p[0] * pix + nu_p[1] * piy + nu_p[2] * piz)
                canon = (nu_p, a)
                if canon in seen:
                    continue
                seen.add(canon)
                n0, n1, n2 = nu_p
                has_pos = has_neg = False
                bad = False
                for p in points:
                    s = n0 * p[0] + n1 * p[1] + n2 * p[2] - a
                    if s > 0:
                        if has_neg:
                            bad = True
                            break
                        has_pos = True
                    elif s < 0:
                        if has_pos:
                            bad = True
                            break
                        has_neg = True
                if bad:
                    continue
                if has_neg:
                    planes[(tuple(-x for x in nu_p), -a)] = None
                else:
                    planes[(nu_p, a)] = None
    return planes


def _hull_3d(points):
    """Vertices and facet planes of a full-dimensional hull in R^3."""
    pts = sorted(set(points))
    if len(pts) > SMALL_HULL:
        pts_work, planes = _extreme_subset(pts)
    else:
        pts_work = pts
        planes = _supporting_planes_3d(pts_work)
    # vertices: points whose tight facet normals span R^3
    tight_normals: dict = {p: [] for p in pts_work}
    for nu, a in planes:
        for p in pts_work:
            if vdot(nu, p) == a:
                tight_normals[p].append(nu)
    vertices = [
        p for p in pts_work if len(tight_normals[p]) >= 3 and mat_rank(tight_normals[p]) == 3
    ]
    vertices.sort()
    facet_list = sorted(planes.keys())
    facet_sets = []
    for nu, a in facet_list:
        tight = tuple(i for i, v in enumerate(vertices) if vdot(nu, v) == a)
        facet_sets.append(tight)
    return vertices, facet_list, facet_sets


def _extreme_subset(pts):
    """Iteratively grow a subset whose hull supports every input point.

    Each round adds, per violated facet, the farthest violator (a vertex of
    the full hull), so the number of expensive plane enumerations stays small.
    """
    seeds = set()
    dim = len(pts[0])
    for axis in range(dim):
        seeds.add(min(pts, key=lambda p: (p[axis],) + p))
        seeds.add(max(pts, key=lambda p: (p[axis],) + tuple(-x for x in p)))
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                seeds.add(
                    max(pts, key=lambda p: (sx * p[0] + sy * p[1] + sz * p[2],) + p)
                )
    subset = sorted(seeds)
    for p in pts:  # complete to full affine rank
        if affine_rank(subset) == 3:
            break
        if affine_rank(subset + [p]) > affine_rank(subset):
            subset.append(p)
    subset = sorted(set(subset))
    while True:
        planes = _supporting_planes_3d(subset)
        additions = set()
        for (nu, a) in sorted(planes.keys()):
            n0, n1, n2 = nu
            best = None
            for p in pts:
                s = n0 * p[0] + n1 * p[1] + n2 * p[2] - a
                if s < 0:
                    cand = (s, p)
                    if best is None or cand < best:
                        best = cand
            if best is not None:
                additions.add(best[1])
        if not additions:
            return subset, planes
        subset = sorted(set(subset) | additions)


def _sort_ccw(points2d):
    cx = Fraction(sum(p[0] for p in points2d), len(points2d))
    cy = Fraction(sum(p[1] for p in points2d), len(points2d))

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def compare(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cr = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx)
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        return 0

    return sorted(points2d, key=cmp_to_key(compare))


class Polytope:
    """Convex hull of finitely many exact points, with facets and face lattice.

    ``faces`` maps dimension -> tuple of faces, each face a sorted tuple of
    vertex indices; it is populated only for full-dimensional polytopes.
    Lower-dimensional and empty hulls keep their vertex list and dimension tag.
    """

    def __init__(self, ambient_dim, vertices, dim, facets=None, faces=None):
        self.ambient_dim = ambient_dim
        self.vertices = tuple(norm_point(v) for v in vertices)
        self.dim = dim
        self.facets = facets  # tuple of (primitive inward normal, offset)
        self.faces = faces
        self._ccw = None  # 2d only: CCW cycle as vertex indices

    # -- predicates ---------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_lattice(self) -> bool:
        return all(isinstance(x, int) for v in self.vertices for x in v)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, point) -> bool:
        if not self.is_full_dimensional:
            raise TorjetError("containment test requires a full-dimensional polytope")
        return all(vdot(nu, point) >= a for nu, a in self.facets)

    def contains_strict(self, point) -> bool:
        if not self.is_full_dimensional:
            raise TorjetError("containment test requires a full-dimensional polytope")
        return all(vdot(nu, point) > a for nu, a in self.facets)

    # -- convenience --------------------------------------------------------

    def edges(self):
        return self.faces[1] if self.faces and 1 in self.faces else ()

    def face_points(self, face):
        return [self.vertices[i] for i in face]

    def translate(self, vec) -> "Polytope":
        return hull([vadd(v, vec) for v in self.vertices])

    def dilate(self, k: int) -> "Polytope":
        return hull([vscale(v, k) for v in self.vertices])

    def __eq__(self, other):
        return (
            isinstance(other, Polytope)
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        if self.is_empty:
            return f"Polytope(empty, ambient={self.ambient_dim})"
        return (
            f"Polytope(dim={self.dim}, ambient={self.ambient_dim}, "
            f"vertices={len(self.vertices)})"
        )

    @classmethod
    def empty(cls, ambient_dim: int) -> "Polytope":
        return cls(ambient_dim, (), -1)


def _face_lattice_2d(ccw):
    nv = len(ccw)
    verts_sorted = sorted(ccw)
    index = {v: i for i, v in enumerate(verts_sorted)}
    cycle = [index[v] for v in ccw]
    edges = []
    for i in range(nv):
        edges.append(tuple(sorted((cycle[i], cycle[(i + 1) % nv]))))
    faces = {
        0: tuple((i,) for i in range(nv)),
        1: tuple(sorted(edges)),
        2: (tuple(range(nv)),),
    }
    return verts_sorted, cycle, faces


def _face_lattice_3d(vertices, facet_sets):
    edges = set()
    for fa, fb in itertools.combinations(facet_sets, 2):
        common = sorted(set(fa) & set(fb))
        if len(common) >= 2:
            # two distinct facets of a 3-polytope meet in at most an edge
            assert len(common) == 2, "non-simplicial facet intersection"
            edges.add(tuple(common))
    faces = {
        0: tuple((i,) for i in range(len(vertices))),
        1: tuple(sorted(edges)),
        2: tuple(sorted(tuple(f) for f in facet_sets)),
        3: (tuple(range(len(vertices))),),
    }
    return faces


def hull(points) -> Polytope:
    """Convex hull of exact points; tolerates empty and lower-dimensional input."""
    pts = sorted({norm_point(p) for p in points})
    if not pts:
        raise EmptyInput("no points given")
    ambient = len(pts[0])
    if any(len(p) != ambient for p in pts):
        raise DimensionMismatch("points of mixed ambient dimension")
    if ambient > 3:
        raise DimensionUnsupported(ambient)
    d = affine_rank(pts)
    if d < ambient:
        verts = _relative_hull_vertices(pts, d)
        return Polytope(ambient, verts, d)
    if ambient == 1:
        verts, facets = _hull_1d(pts)
        faces = {0: tuple((i,) for i in range(len(verts)))}
        if len(verts) == 2:
            faces[1] = ((0, 1),)
        poly = Polytope(1, verts, 1, facets, faces)
        return poly
    if ambient == 2:
        ccw = _hull_2d_ccw(pts)
        verts_sorted, cycle, faces = _face_lattice_2d(ccw)
        facets = []
        for i in range(len(ccw)):
            a, b = ccw[i], ccw[(i + 1) % len(ccw)]
            nu = _edge_inward_normal(a, b)
            facets.append((nu, _norm_coord(vdot(nu, a))))
        poly = Polytope(2, verts_sorted, 2, tuple(sorted(facets)), faces)
        poly._ccw = cycle
        return poly
    vertices, facet_list, facet_sets = _hull_3d(pts)
    faces = _face_lattice_3d(vertices, facet_sets)
    return Polytope(3, vertices, 3, tuple(facet_list), faces)


def _relative_hull_vertices(pts, d):
    if d <= 0:
        return [pts[0]]
    base = pts[0]
    diffs = [vsub(p, base) for p in pts]
    if all(isinstance(x, int) for p in pts for x in p):
        basis = saturation_basis(diffs, len(base))
        coords = [lattice_coordinates(basis, df) for df in diffs]
    else:
        basis = _rational_affine_basis(diffs, d)
        coords = [_rational_coordinates(basis, df) for df in diffs]
    if d == 1:
        flat = sorted(range(len(pts)), key=lambda i: coords[i])
        keep = [flat[0], flat[-1]]
    elif d == 2:
        ccw = _hull_2d_ccw(coords)
        lookup = {c: i for i, c in enumerate(coords)}
        keep = [lookup[c] for c in ccw]
    else:
        verts3, _, _ = _hull_3d(coords)
        lookup = {c: i for i, c in enumerate(coords)}
        keep = [lookup[c] for c in verts3]
    return sorted(pts[i] for i in keep)


def _rational_affine_basis(diffs, d):
    basis = []
    for df in diffs:
        if any(x != 0 for x in df) and mat_rank(basis + [df]) > len(basis):
            basis.append(df)
        if len(basis) == d:
            break
    return basis


def _rational_coordinates(basis, x):
    transposed = [[basis[i][j] for i in range(len(basis))] for j in range(len(basis[0]))]
    y = solve_right(transposed, x)
    if y is None:
        raise ValueError("point outside affine span")
    return tuple(y)


def convex_hull(points) -> Polytope:
    """Full-dimensional convex hull with facet normals and complete face lattice."""
    pts = list(points)
    if not pts:
        raise EmptyInput("no points given")
    ambient = len(pts[0])
    if not 1 <= ambient <= 3:
        raise DimensionUnsupported(ambient)
    poly = hull(pts)
    if poly.dim < ambient:
        raise NotFullDimensional(poly.dim, ambient)
    return poly


# ---------------------------------------------------------------------------
# volumes
# ---------------------------------------------------------------------------


def _polygon_double_area(ccw_points):
    total = 0
    n = len(ccw_points)
    for i in range(n):
        x1, y1 = ccw_points[i]
        x2, y2 = ccw_points[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return abs(total)


def _volume3_times6(vertices, facet_list):
    """6 x Euclidean volume via a fan of tetrahedra from the first vertex."""
    v0 = vertices[0]
    total = 0
    for nu, a in facet_list:
        if vdot(nu, v0) == a:
            continue  # facet contains the apex
        pts = [v for v in vertices if vdot(nu, v) == a]
        drop = max(range(3), key=lambda ax: abs(nu[ax]))
        planar = [(p[(drop + 1) % 3], p[(drop + 2) % 3]) for p in pts]
        order = _sort_ccw(planar)
        lookup = {}
        for p, q in zip(pts, planar):
            lookup.setdefault(q, p)
        ring = [lookup[q] for q in order]
        w0 = vsub(ring[0], v0)
        for i in range(1, len(ring) - 1):
            w1 = vsub(ring[i], v0)
            w2 = vsub(ring[i + 1], v0)
            total += abs(vdot(w0, cross3(w1, w2)))
    return total


def euclidean_volume(P: Polytope) -> Fraction:
    """Euclidean volume of a polytope in its ambient space (0 if lower-dimensional)."""
    if P.is_empty or P.dim < P.ambient_dim:
        return Fraction(0)
    if P.ambient_dim == 1:
        return Fraction(P.vertices[-1][0] - P.vertices[0][0])
    if P.ambient_dim == 2:
        ccw = _hull_2d_ccw(P.vertices)
        return Fraction(_polygon_double_area(ccw), 2)
    return Fraction(_volume3_times6(P.vertices, P.facets), 6)


def relative_normalized_volume(points) -> int:
    """Lattice volume of Conv(points) measured in its own affine span.

    Uses the convention Vol_0(point) = 1, Vol_1(edge) = lattice length, and
    generally d! times the Euclidean volume in coordinates of the lattice
    induced in the span.  Points must be lattice points.
    """
    pts = sorted({norm_point(p) for p in points})
    if not pts:
        raise EmptySet("volume of the empty set")
    d = affine_rank(pts)
    if d == 0:
        return 1
    base = pts[0]
    diffs = [vsub(p, base) for p in pts]
    basis = saturation_basis(diffs, len(base))
    coords = [lattice_coordinates(basis, df) for df in diffs]
    if d == 1:
        vals = sorted(c[0] for c in coords)
        return vals[-1] - vals[0]
    if d == 2:
        return _polygon_double_area(_hull_2d_ccw(coords))
    verts3, facet_list, _sets = _hull_3d(coords)
    return _volume3_times6(verts3, facet_list)


def normalized_volume(P: Polytope):
    """Normalized lattice volume (d! times Euclidean, measured in the affine span)."""
    if P.is_empty:
        raise EmptySet("volume of the empty polytope")
    if P.dim == 0:
        return 1
    if P.is_lattice:
        return relative_normalized_volume(P.vertices)
    if not P.is_full_dimensional:
        raise TorjetError("normalized volume of a lower-dimensional rational polytope")
    return _norm_coord(euclidean_volume(P) * factorial(P.ambient_dim))


def face_volume(P: Polytope, face) -> int:
    """Normalized volume of a face, given as a vertex-index tuple."""
    return relative_normalized_volume(P.face_points(face))


# ---------------------------------------------------------------------------
# lattice point enumeration
# ---------------------------------------------------------------------------


def lattice_points(P: Polytope, strict: bool = False):
    """Lattice points of a full-dimensional polytope, lexicographically sorted."""
    if P.is_empty:
        return []
    if not P.is_full_dimensional:
        raise TorjetError("lattice point enumeration requires a full-dimensional polytope")
    n = P.ambient_dim
    lo = []
    hi = []
    for ax in range(n):
        coords = [Fraction(v[ax]) for v in P.vertices]
        lo.append(-((-min(coords)).__floor__()))  # ceil(min)
        hi.append(max(coords).__floor__())
    test = P.contains_strict if strict else P.contains
    out = []
    for p in itertools.product(*(range(lo[ax], hi[ax] + 1) for ax in range(n))):
        if test(p):
            out.append(p)
    return out


def interior_hull(P: Polytope) -> Polytope:
    """Hull of the strictly interior lattice points, tagged by its dimension."""
    pts = lattice_points(P, strict=True)
    if not pts:
        return Polytope.empty(P.ambient_dim)
    return hull(pts)


def dimension_tag(P: Polytope) -> str:
    if P.is_empty:
        return "empty"
    return {0: "point", 1: "segment", 2: "polygon", 3: "solid"}[P.dim]


# ---------------------------------------------------------------------------
# tightening (adjoint-style inequality shifts)
# ---------------------------------------------------------------------------


def tightened_polytope(P: Polytope, r: int) -> Polytope:
    """{x : <nu_F, x> >= r*a_F + 1} over the facets of P; may degenerate."""
    if not P.is_full_dimensional:
        raise TorjetError("tightening requires a full-dimensional polytope")
    n = P.ambient_dim
    constraints = [(nu, r * a + 1) for nu, a in P.facets]
    candidates = set()
    for subset in itertools.combinations(range(len(constraints)), n):
        rows = [constraints[i][0] for i in subset]
        rhs = [constraints[i][1] for i in subset]
        if mat_rank(rows) < n:
            continue
        x = solve_right(rows, rhs)
        if x is None:
            continue
        if all(vdot(nu, x) >= b for nu, b in constraints):
            candidates.add(norm_point(x))
    if not candidates:
        return Polytope.empty(n)
    return hull(candidates)


# ---------------------------------------------------------------------------
# Minkowski sums and mixed volumes
# ---------------------------------------------------------------------------


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {P.ambient_dim} vs {Q.ambient_dim}"
        )
    if P.is_empty or Q.is_empty:
        return Polytope.empty(P.ambient_dim)
    sums = {vadd(p, q) for p in P.vertices for q in Q.vertices}
    return hull(sums)


def mixed_volume3(P1: Polytope, P2: Polytope, P3: Polytope):
    """Normalized mixed volume in R^3, MV(P, P, P) = normalized_volume(P).

    Evaluates the volume of lambda-combinations on all 0/1 weight vectors and
    takes the alternating sum, i.e. exact finite-difference interpolation of
    the cubic Minkowski polynomial.
    """
    polys = (P1, P2, P3)
    for P in polys:
        if P.ambient_dim != 3:
            raise DimensionMismatch("mixed volumes are computed in R^3")
        if P.is_empty:
            raise EmptySet("mixed volume of an empty polytope")
    s12 = minkowski_sum(P1, P2)
    s13 = minkowski_sum(P1, P3)
    s23 = minkowski_sum(P2, P3)
    s123 = minkowski_sum(s12, P3)
    total = (
        euclidean_volume(s123)
        - euclidean_volume(s12)
        - euclidean_volume(s13)
        - euclidean_volume(s23)
        + euclidean_volume(P1)
        + euclidean_volume(P2)
        + euclidean_volume(P3)
    )
    return _norm_coord(total)


# ---------------------------------------------------------------------------
# regular subdivisions
# ---------------------------------------------------------------------------


class Cell:
    """Marked cell of a regular subdivision with its affine support function.

    ``support`` is (coefficients c, constant c0) with u_i >= <c, r_i> + c0 for
    every configuration point, equality exactly on the marked indices.
    """

    def __init__(self, indices, support):
        self.indices = tuple(sorted(indices))
        self.support = support

    def __repr__(self):
        return f"Cell({self.indices})"

    def __eq__(self, other):
        return isinstance(other, Cell) and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)


class RegularSubdivision:
    def __init__(self, points, lifting, cells):
        self.points = tuple(norm_point(p) for p in points)
        self.lifting = tuple(Fraction(u) for u in lifting)
        self.cells = tuple(cells)

    def __repr__(self):
        return f"RegularSubdivision(cells={[c.indices for c in self.cells]})"


def regular_subdivision(points, lifting) -> RegularSubdivision:
    """Marked cells of the lower hull of the lifted configuration.

    Supported for configurations of affine dimension 1 or 2 (the lifted hull
    must stay within the 3-dimensional hull machinery).
    """
    pts = [norm_point(p) for p in points]
    u = [Fraction(x) for x in lifting]
    if len(pts) != len(u):
        raise LengthMismatch(f"{len(pts)} points but {len(u)} lifting values")
    if not pts:
        raise EmptyInput("no points given")
    n = len(pts[0])
    if n > 2:
        raise DimensionUnsupported(n + 1)
    d = affine_rank(pts)
    if d < n:
        raise NotFullDimensional(d, n)
    lifted = [p + (ui,) for p, ui in zip(pts, u)]
    if affine_rank(lifted) == n:
        # lifting is affine on the configuration: a single cell
        support = _affine_fit(pts, u)
        cell = Cell(range(len(pts)), support)
        return RegularSubdivision(pts, u, [cell])
    lifted_hull = hull(lifted)
    cells = []
    for nu, a in lifted_hull.facets:
        if nu[n] <= 0:
            continue  # only lower facets
        tight = [
            i for i, q in enumerate(lifted) if vdot(nu, q) == a
        ]
        c = tuple(-Fraction(nu[ax], nu[n]) for ax in range(n))
        c0 = Fraction(a, nu[n])
        cells.append(Cell(tight, (c, c0)))
    cells.sort(key=lambda cell: cell.indices)
    return RegularSubdivision(pts, u, cells)


def _affine_fit(pts, u):
    n = len(pts[0])
    rows = [list(p) + [1] for p in pts]
    sol = solve_right(rows, u)
    if sol is None:
        raise TorjetError("lifting is not affine despite flat lift")
    return tuple(sol[:n]), sol[n]
