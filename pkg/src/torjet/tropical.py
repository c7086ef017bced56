"""Tropical forms, Euler derivatives and exact membership certificates.

A form is the data (points, u) evaluating to min_i(u_i + <w, r_i>).  The
membership test reduces the universally quantified tie condition to the finite
family of minimal-support row-span vectors of the jet matrix and searches tie
assignments by exact Fourier-Motzkin feasibility; every reported witness is
re-verified on construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    CapExceeded,
    DegreeTooHigh,
    DimensionMismatch,
    NotPlanar,
    TorjetError,
)
from functools import lru_cache

from .jets import build_Ak, cocircuits


@lru_cache(maxsize=256)
def _cached_cocircuits(points: tuple, k: int, cap):
    return tuple(cocircuits(build_Ak(points, k), cap))
from .lattice import (
    convex_hull,
    cross2,
    lattice_length,
    norm_point,
    regular_subdivision,
    vdot,
    vsub,
    _hull_2d_ccw,
)
from .linalg import format_rational, primitive, rank as mat_rank
from .polynomials import Polynomial, initial_part

DEFAULT_BRANCH_CAP = 100_000


@dataclass(frozen=True)
class TropicalForm:
    points: tuple
    u: tuple

    def __init__(self, points, u):
        pts = tuple(norm_point(p) for p in points)
        uu = tuple(Fraction(x) for x in u)
        if len(pts) != len(uu):
            raise DimensionMismatch(f"{len(pts)} points but {len(uu)} coefficients")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "u", uu)

    @property
    def n(self) -> int:
        return len(self.points[0])


def trop_eval(form: TropicalForm, b):
    """Exact minimum of u_i + <b, r_i> together with all attaining indices."""
    if len(b) != form.n:
        raise DimensionMismatch(f"point has dimension {len(b)}, expected {form.n}")
    values = [ui + vdot(b, ri) for ui, ri in zip(form.u, form.points)]
    best = min(values)
    argmin = tuple(i for i, v in enumerate(values) if v == best)
    return best, argmin


@dataclass(frozen=True)
class EulerDerivative:
    form: TropicalForm
    poly: Polynomial
    support: tuple


def euler_derivative(form: TropicalForm, poly: Polynomial, k: int) -> EulerDerivative:
    """Subsum over the points where the polynomial does not vanish.

    An empty support is allowed; it signals a torus-disjoint direction.
    """
    if poly.degree() > k:
        raise DegreeTooHigh(f"degree {poly.degree()} exceeds order {k}")
    support = tuple(
        i for i, r in enumerate(form.points) if poly.evaluate(r) != 0
    )
    return EulerDerivative(form, poly, support)


# ---------------------------------------------------------------------------
# exact linear feasibility by Fourier-Motzkin elimination
# ---------------------------------------------------------------------------


def _canon_ineq(coeffs, rhs):
    if all(c == 0 for c in coeffs):
        return None, rhs  # constant constraint 0 >= rhs
    p = primitive(coeffs)
    scale = None
    for c, q in zip(coeffs, p):
        if c != 0:
            scale = Fraction(q) / Fraction(c)
            break
    return tuple(p), rhs * scale


def fm_witness(eqs, ineqs, nvars):
    """A rational point satisfying all constraints, or None if infeasible.

    ``eqs`` and ``ineqs`` are (coeffs, rhs) pairs meaning <coeffs, x> = rhs
    and <coeffs, x> >= rhs.  Equalities are eliminated first; the remaining
    variables go through Fourier-Motzkin with exact arithmetic.  The witness
    picks 0 for every coordinate whose feasible interval allows it and clamps
    otherwise.
    """
    eq_rows = [list(c) + [Fraction(rhs)] for c, rhs in eqs]
    from .linalg import rref

    red, pivots = rref(eq_rows) if eq_rows else ([], [])
    if nvars in pivots:
        return None  # inconsistent equalities
    pivot_vars = list(pivots)
    free_vars = [v for v in range(nvars) if v not in pivots]
    # substitute equalities into the inequalities: x_p = rhs_r - sum red[r][f] x_f
    reduced_ineqs = []
    for coeffs, rhs in ineqs:
        coeffs = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        for r, p in enumerate(pivot_vars):
            cp = coeffs[p]
            if cp == 0:
                continue
            coeffs[p] = Fraction(0)
            rhs -= cp * red[r][nvars]
            for f in free_vars:
                coeffs[f] -= cp * red[r][f]
        reduced_ineqs.append(([coeffs[f] for f in free_vars], rhs))
    assignment = _fm_solve(reduced_ineqs, len(free_vars))
    if assignment is None:
        return None
    x = [Fraction(0)] * nvars
    for f, val in zip(free_vars, assignment):
        x[f] = val
    for r, p in enumerate(pivot_vars):
        x[p] = red[r][nvars] - sum(red[r][f] * x[f] for f in free_vars)
    return tuple(x)


def _fm_solve(ineqs, nvars):
    system = []
    seen = {}
    for coeffs, rhs in ineqs:
        key, val = _canon_ineq(coeffs, rhs)
        if key is None:
            if val > 0:
                return None
            continue
        if key not in seen or seen[key] < val:
            seen[key] = val
    system = [(list(k), v) for k, v in seen.items()]
    levels = []
    for var in range(nvars - 1, -1, -1):
        lowers, uppers, rest = [], [], []
        for coeffs, rhs in system:
            c = coeffs[var]
            if c > 0:
                # x_var >= (rhs - sum_{j<var} coeffs_j x_j) / c
                lowers.append(([-Fraction(cj, 1) / c for cj in coeffs[:var]], Fraction(rhs) / c))
            elif c < 0:
                uppers.append(([-Fraction(cj, 1) / c for cj in coeffs[:var]], Fraction(rhs) / c))
            else:
                rest.append((coeffs[:var], rhs))
        levels.append((var, lowers, uppers))
        combined = {}
        for lo_c, lo_r in lowers:
            for up_c, up_r in uppers:
                # upper bound must dominate the lower bound
                coeffs = [u - l for u, l in zip(up_c, lo_c)]
                rhs = lo_r - up_r
                key, val = _canon_ineq(coeffs, rhs)
                if key is None:
                    if val > 0:
                        return None
                    continue
                if key not in combined or combined[key] < val:
                    combined[key] = val
        for coeffs, rhs in rest:
            key, val = _canon_ineq(coeffs, rhs)
            if key is None:
                if val > 0:
                    return None
                continue
            if key not in combined or combined[key] < val:
                combined[key] = val
        system = [(list(k), v) for k, v in combined.items()]
    values: list = []
    for var, lowers, uppers in reversed(levels):
        lo = None
        for coeffs, rhs in lowers:
            bound = rhs + sum(c * v for c, v in zip(coeffs, values))
            lo = bound if lo is None or bound > lo else lo
        hi = None
        for coeffs, rhs in uppers:
            bound = rhs + sum(c * v for c, v in zip(coeffs, values))
            hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None and lo > hi:
            return None  # should not happen after elimination
        if lo is not None and hi is not None:
            val = Fraction(0) if lo <= 0 <= hi else (lo + hi) / 2
        elif lo is not None:
            val = max(Fraction(0), lo)
        elif hi is not None:
            val = min(Fraction(0), hi)
        else:
            val = Fraction(0)
        values.append(val)
    # values are ordered with the first-eliminated variable last
    ordered = [None] * nvars
    for (var, _, _), val in zip(reversed(levels), values):
        ordered[var] = val
    return ordered


# ---------------------------------------------------------------------------
# membership certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipCertificate:
    verdict: str  # "in-trop" | "not-in-trop" | "inconclusive"
    witness: tuple | None = None
    tie_assignment: tuple | None = None  # ((support, (i, j)), ...)
    assignments_explored: int = 0
    failure_trace: dict | None = None

    def to_json(self) -> dict:
        doc: dict = {
            "verdict": self.verdict,
            "assignments_explored": self.assignments_explored,
        }
        if self.witness is not None:
            doc["witness"] = [format_rational(x) for x in self.witness]
        if self.tie_assignment is not None:
            doc["tie_assignment"] = [
                {"support": list(s), "tie": list(pair)} for s, pair in self.tie_assignment
            ]
        if self.failure_trace is not None:
            doc["failure_trace"] = self.failure_trace
        return doc


def verify_witness(points, k, u, b, column_cap=None, _cocircuits=None) -> bool:
    """True iff every minimal-support tie family attains its minimum twice at b."""
    form = TropicalForm(points, u)
    cocs = _cocircuits
    if cocs is None:
        cocs = _cached_cocircuits(form.points, k, column_cap)
    for coc in cocs:
        values = [form.u[i] + vdot(b, form.points[i]) for i in coc.support]
        best = min(values)
        if sum(1 for v in values if v == best) < 2:
            return False
    return True


class _CapTripped(Exception):
    pass


def membership(points, k, u, column_cap=None, branch_cap=DEFAULT_BRANCH_CAP):
    """Exact membership certificate for the tropicalized dual at order k.

    Searches one tie pair per minimal-support family; each assignment is an
    exact linear feasibility problem in the witness point.  Caps surface as an
    inconclusive verdict, never as an exception.
    """
    form = TropicalForm(points, u)
    n = form.n
    try:
        cocs = _cached_cocircuits(form.points, k, column_cap)
    except CapExceeded as exc:
        return MembershipCertificate(
            "inconclusive", failure_trace={"cap": exc.cap, "columns": exc.count}
        )
    singletons = [c.support for c in cocs if len(c.support) < 2]
    if singletons:
        return MembershipCertificate(
            "not-in-trop",
            assignments_explored=0,
            failure_trace={
                "reason": "tie family with fewer than two indices",
                "supports": [list(s) for s in singletons],
            },
        )
    explored = 0

    def tie_values(b, support):
        values = [form.u[i] + vdot(b, form.points[i]) for i in support]
        best = min(values)
        return sum(1 for v in values if v == best) >= 2

    def dfs(idx, eqs, ineqs, chosen):
        nonlocal explored
        if idx == len(cocs):
            witness = fm_witness(eqs, ineqs, n)
            assert witness is not None
            return witness, tuple(chosen)
        # once the equalities pin the witness, check the remaining families directly
        eq_rows = [list(c) for c, _ in eqs]
        if eq_rows and mat_rank(eq_rows) == n:
            witness = fm_witness(eqs, ineqs, n)
            if witness is None:
                return None
            if all(tie_values(witness, cocs[j].support) for j in range(idx, len(cocs))):
                return witness, tuple(chosen)
            return None
        support = cocs[idx].support
        for i, j in itertools.combinations(support, 2):
            explored += 1
            if explored > branch_cap:
                raise _CapTripped
            eq = (vsub(form.points[i], form.points[j]), form.u[j] - form.u[i])
            new_ineqs = [
                (vsub(form.points[l], form.points[i]), form.u[i] - form.u[l])
                for l in support
                if l not in (i, j)
            ]
            eqs.append(eq)
            ineqs.extend(new_ineqs)
            if fm_witness(eqs, ineqs, n) is not None:
                found = dfs(idx + 1, eqs, ineqs, chosen + [(support, (i, j))])
                if found is not None:
                    eqs.pop()
                    del ineqs[len(ineqs) - len(new_ineqs):]
                    return found
            eqs.pop()
            del ineqs[len(ineqs) - len(new_ineqs):]
        return None

    try:
        found = dfs(0, [], [], [])
    except _CapTripped:
        return MembershipCertificate(
            "inconclusive",
            assignments_explored=explored,
            failure_trace={"cap": branch_cap, "reason": "tie-assignment cap"},
        )
    if found is None:
        return MembershipCertificate(
            "not-in-trop",
            assignments_explored=explored,
            failure_trace={"reason": "all tie assignments infeasible"},
        )
    witness, chosen = found
    if not verify_witness(points, k, u, witness, _cocircuits=cocs):
        raise TorjetError("internal error: witness failed re-verification")
    return MembershipCertificate(
        "in-trop",
        witness=witness,
        tie_assignment=chosen,
        assignments_explored=explored,
    )


def initial_form(poly: Polynomial, u):
    """Subsum of the terms of minimal u-weight, with a monomial flag."""
    return initial_part(poly, u)


# ---------------------------------------------------------------------------
# plane tropical curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveEdge:
    ends: tuple  # pair of vertex indices
    multiplicity: int
    dual: tuple  # endpoints of the dual subdivision edge


@dataclass(frozen=True)
class CurveRay:
    vertex: int
    direction: tuple  # primitive integer vector
    multiplicity: int
    dual: tuple


@dataclass(frozen=True)
class PlaneTropicalCurve:
    vertices: tuple
    edges: tuple
    rays: tuple
    subdivision: object = field(compare=False)


def plane_curve(form: TropicalForm) -> PlaneTropicalCurve:
    """Curve dual to the regular subdivision induced by the coefficients.

    One vertex per 2-cell, a bounded edge per interior subdivision edge, a ray
    per boundary subdivision edge; multiplicities are lattice lengths of the
    dual edges.  Ray directions follow the primitive inward normals of the
    configuration hull.
    """
    if form.n != 2:
        raise NotPlanar(f"plane curves need planar configurations, got n={form.n}")
    if len(form.points) == 1:
        return PlaneTropicalCurve((), (), (), None)
    subdiv = regular_subdivision(form.points, form.u)
    hull_poly = convex_hull(form.points)
    cells = subdiv.cells
    vertices = []
    for cell in cells:
        c, _c0 = cell.support
        vertices.append((-c[0], -c[1]))
    edges = []
    for a, b in itertools.combinations(range(len(cells)), 2):
        shared = sorted(set(cells[a].indices) & set(cells[b].indices))
        if len(shared) < 2:
            continue
        pts = [form.points[i] for i in shared]
        ends = _segment_extremes(pts)
        mult = lattice_length(*ends)
        edges.append(CurveEdge((a, b), mult, ends))
    rays = []
    for ci, cell in enumerate(cells):
        polygon = _hull_2d_ccw([form.points[i] for i in cell.indices])
        nv = len(polygon)
        for i in range(nv):
            p, q = polygon[i], polygon[(i + 1) % nv]
            facet = _boundary_facet(hull_poly, p, q)
            if facet is None:
                continue
            rays.append(CurveRay(ci, facet, lattice_length(p, q), (p, q)))
    rays.sort(key=lambda r: (r.vertex, r.direction))
    return PlaneTropicalCurve(tuple(vertices), tuple(edges), tuple(rays), subdiv)


def _segment_extremes(pts):
    pts = sorted(pts)
    first, last = pts[0], pts[-1]
    d = vsub(last, first)
    for p in pts[1:-1]:
        assert cross2(first, last, p) == 0, "shared cell points are not collinear"
    return (first, last)


def _boundary_facet(hull_poly, p, q):
    """Inward normal of the hull facet containing segment pq, or None."""
    for nu, a in hull_poly.facets:
        if vdot(nu, p) == a and vdot(nu, q) == a:
            return nu
    return None
