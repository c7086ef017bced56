"""Polytope-level invariants feeding the degree formulas.

The quadruple (Vol, F, E, V) collects normalized face volumes by codimension;
adjoint data at level r is read off the tightened polytope through mixed
volumes, with the edge quantity defined as r*E - 24 (valid for every smooth
complete toric threefold).  Combinatorial face sums of the tightened polytope
are recorded alongside, with a mismatch flag when they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import (
    BadParameters,
    DimensionUnsupported,
    NotDim3,
    NotSmooth,
    PreconditionViolated,
    TorjetError,
)
from .lattice import (
    Polytope,
    convex_hull,
    dimension_tag,
    face_volume,
    interior_hull,
    lattice_length,
    mixed_volume3,
    normalized_volume,
    tightened_polytope,
    vsub,
)
from .linalg import (
    complement_functional,
    integer_kernel_basis,
    lattice_coordinates,
    primitive,
    solve_right,
)
from .lattice import _hull_2d_ccw, _polygon_double_area, vdot, vscale


@dataclass(frozen=True)
class InvariantVector:
    vol: int
    facet_sum: int
    edge_sum: int
    vertex_count: int

    def as_tuple(self):
        return (self.vol, self.facet_sum, self.edge_sum, self.vertex_count)


@dataclass(frozen=True)
class AdjointInvariants:
    r: int
    vol_adj: int | Fraction
    facet_adj: int | Fraction
    edge_adj: int
    degenerate: str  # dimension tag of the tightened polytope
    combinatorial_match: bool | None  # None unless tightened is full-dim lattice
    interior_hull_matches: bool


@dataclass(frozen=True)
class KSimplex:
    k: int

    def to_json(self) -> dict:
        return {"tag": "k-simplex", "k": self.k}


@dataclass(frozen=True)
class DoubleCayleyScroll:
    a: int
    b: int
    c: int

    def to_json(self) -> dict:
        return {"tag": "double-cayley-scroll", "a": self.a, "b": self.b, "c": self.c}


def exceptional_tag_json(tag) -> dict:
    return {"tag": None} if tag is None else tag.to_json()


def _require_full_dim(P: Polytope):
    if P.is_empty or not P.is_full_dimensional:
        raise TorjetError("operation requires a nonempty full-dimensional polytope")
    if P.ambient_dim > 3:
        raise DimensionUnsupported(P.ambient_dim)


@lru_cache(maxsize=None)
def invariant_vector(P: Polytope) -> InvariantVector:
    """(Vol, F, E, V): normalized volume plus facet, edge and vertex sums."""
    _require_full_dim(P)
    n = P.ambient_dim
    vol = normalized_volume(P)
    facet_sum = sum(face_volume(P, f) for f in P.faces[n - 1])
    edge_sum = sum(face_volume(P, f) for f in P.faces[1]) if 1 in P.faces else 0
    vertex_count = len(P.vertices)
    return InvariantVector(vol, facet_sum, edge_sum, vertex_count)


@lru_cache(maxsize=None)
def is_smooth(P: Polytope) -> bool:
    """Every vertex simple with unimodular primitive edge directions."""
    _require_full_dim(P)
    n = P.ambient_dim
    if n == 1:
        return True
    edges = P.faces[1]
    for v_idx in range(len(P.vertices)):
        incident = [e for e in edges if v_idx in e]
        if len(incident) != n:
            return False
        dirs = []
        for e in incident:
            other = e[0] if e[1] == v_idx else e[1]
            dirs.append(primitive(vsub(P.vertices[other], P.vertices[v_idx])))
        if abs(_det(dirs)) != 1:
            return False
    return True


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    a, b, c = rows
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def is_k_regular(P: Polytope, k: int) -> bool:
    """True iff every edge has lattice length at least k."""
    _require_full_dim(P)
    if k < 1:
        raise BadParameters("regularity order must be positive")
    if 1 not in P.faces:
        return True
    return all(
        lattice_length(P.vertices[e[0]], P.vertices[e[1]]) >= k for e in P.faces[1]
    )


@lru_cache(maxsize=None)
def adjoint_nef(P: Polytope, r: int) -> bool:
    """Whether the level-r tightening of P defines a nef class.

    Checks convexity of the shifted support data: at every vertex of P the
    point solving the tightened equations of its facets must satisfy every
    other tightened inequality.  Requires a simple (e.g. smooth) polytope.
    """
    _require_full_dim(P)
    n = P.ambient_dim
    constraints = [(nu, r * a + 1) for nu, a in P.facets]
    for v in P.vertices:
        tight = [(nu, b) for (nu, a), (_, b) in zip(P.facets, constraints) if vdot(nu, v) == a]
        rows = [nu for nu, _ in tight]
        rhs = [b for _, b in tight]
        x = solve_right(rows, rhs)
        if x is None:
            raise PreconditionViolated("vertex equations unsolvable; polytope not simple?")
        if not all(vdot(nu, x) >= b for nu, b in constraints):
            return False
    return True


@lru_cache(maxsize=None)
def adjoint_invariants(P: Polytope, r: int) -> AdjointInvariants:
    """Level-r adjoint quantities of a smooth threefold polytope.

    vol_adj is the normalized volume of the tightened polytope Q of rP (0 when
    Q degenerates); facet_adj = r*MV(P, Q, Q) - Vol(Q); edge_adj = r*E - 24.
    When Q is full-dimensional with lattice vertices the naive facet/edge sums
    of Q are computed as well and compared.
    """
    if P.ambient_dim != 3 or not P.is_full_dimensional:
        raise NotDim3("adjoint invariants are defined for threefold polytopes")
    if not is_smooth(P):
        raise NotSmooth("adjoint invariants require a smooth polytope")
    if r < 1:
        raise BadParameters("adjoint level must be positive")
    iv = invariant_vector(P)
    edge_adj = r * iv.edge_sum - 24
    Q = tightened_polytope(P, r)
    tag = dimension_tag(Q)
    if Q.is_empty:
        vol_adj: int | Fraction = 0
        facet_adj: int | Fraction = 0
    else:
        vol_adj = normalized_volume(Q) if Q.dim == 3 else 0
        facet_adj = r * mixed_volume3(P, Q, Q) - vol_adj
    match: bool | None = None
    if not Q.is_empty and Q.dim == 3 and Q.is_lattice:
        qv = invariant_vector(Q)
        match = qv.facet_sum == facet_adj and qv.edge_sum == edge_adj and qv.vol == vol_adj
    ih = interior_hull(P.dilate(r))
    interior_matches = (ih.is_empty and Q.is_empty) or (
        not ih.is_empty and not Q.is_empty and ih.vertices == Q.vertices
    )
    return AdjointInvariants(
        r, vol_adj, facet_adj, edge_adj, tag, match, interior_matches
    )


# ---------------------------------------------------------------------------
# exceptional-shape detection
# ---------------------------------------------------------------------------


def detect_exceptional(P: Polytope):
    """Classify the shapes excluded from the nef branch of the degree formula.

    Returns KSimplex(k) for an equilateral smooth simplex, a
    DoubleCayleyScroll(a, b, c) when some edge direction projects P onto a
    triangle equivalent to twice the unit triangle with even segment fibers,
    and None otherwise.
    """
    if P.ambient_dim != 3 or not P.is_full_dimensional:
        raise PreconditionViolated("detector requires a full-dimensional threefold polytope")
    if not is_smooth(P):
        raise PreconditionViolated("detector requires a smooth polytope")
    if not is_k_regular(P, 2):
        raise PreconditionViolated("detector requires a 2-regular polytope")
    if len(P.vertices) == 4:
        lengths = {
            lattice_length(P.vertices[e[0]], P.vertices[e[1]]) for e in P.faces[1]
        }
        if len(lengths) == 1:
            return KSimplex(lengths.pop())
        return None
    if len(P.vertices) != 6:
        return None
    directions = set()
    for e in P.faces[1]:
        d = primitive(vsub(P.vertices[e[1]], P.vertices[e[0]]))
        if tuple(-x for x in d) in directions:
            continue
        directions.add(d)
    for e in sorted(directions):
        found = _scroll_fibers(P, e)
        if found is not None:
            a, b, c = sorted(found)
            return DoubleCayleyScroll(a, b, c)
    return None


def _scroll_fibers(P: Polytope, e):
    """Fiber half-lengths if P projects along e onto a triangle ~ 2*Delta_2."""
    try:
        functional = complement_functional(e)
    except ValueError:
        return None
    basis = integer_kernel_basis([functional], 3)
    proj = {}
    for v in P.vertices:
        t = vdot(functional, v)
        reduced = vsub(v, vscale(e, t))
        q = lattice_coordinates(basis, reduced)
        proj.setdefault(q, []).append(v)
    if len(proj) != 3:
        return None
    corners = sorted(proj)
    ccw = _hull_2d_ccw(corners)
    if len(ccw) != 3:
        return None
    if _polygon_double_area(ccw) != 4:
        return None
    for i in range(3):
        if lattice_length(ccw[i], ccw[(i + 1) % 3]) != 2:
            return None
    halves = []
    for q in corners:
        fiber = proj[q]
        if len(fiber) != 2:
            return None
        diff = vsub(fiber[1], fiber[0])
        g = gcd(gcd(abs(diff[0]), abs(diff[1])), abs(diff[2]))
        if g == 0 or g % 2 != 0 or primitive(diff) not in (e, tuple(-x for x in e)):
            return None
        halves.append(g // 2)
    return halves


def cayley_scroll_polytope(degrees) -> Polytope:
    """Polytope of a rational normal scroll: segments of the given lengths
    placed over the vertices of a unit simplex."""
    d = [int(x) for x in degrees]
    n = len(d)
    if n < 2 or any(x < 1 for x in d):
        raise BadParameters("need at least two positive segment lengths")
    if n > 3:
        raise DimensionUnsupported(n)
    verts = []
    for j, dj in enumerate(d):
        base = [0] * (n - 1)
        if j > 0:
            base[j - 1] = 1
        verts.append(tuple([0] + base))
        verts.append(tuple([dj] + base))
    return convex_hull(verts)


def cayley_scroll_vertices(degrees):
    """Vertex list of the scroll polytope in the construction's order."""
    d = [int(x) for x in degrees]
    n = len(d)
    if n < 2 or any(x < 1 for x in d):
        raise BadParameters("need at least two positive segment lengths")
    verts = []
    for j, dj in enumerate(d):
        base = [0] * (n - 1)
        if j > 0:
            base[j - 1] = 1
        verts.append(tuple([0] + base))
        verts.append(tuple([dj] + base))
    return verts
