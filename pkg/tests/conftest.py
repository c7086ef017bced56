"""Shared builders: named polytopes, the worked tropical instance, corpora."""

import itertools
import random

import pytest

from torjet import Polytope, convex_hull
from torjet.invariants import cayley_scroll_polytope
from torjet.polynomials import Polynomial


def box(a, b, c) -> Polytope:
    return convex_hull(list(itertools.product((0, a), (0, b), (0, c))))


def box2(a, b) -> Polytope:
    return convex_hull([(0, 0), (a, 0), (0, b), (a, b)])


def simplex3(k) -> Polytope:
    return convex_hull([(0, 0, 0), (k, 0, 0), (0, k, 0), (0, 0, k)])


def simplex2(k) -> Polytope:
    return convex_hull([(0, 0), (k, 0), (0, k)])


def prism(d, e) -> Polytope:
    """d*Delta_2 x [0, e]."""
    base = [(0, 0), (d, 0), (0, d)]
    return convex_hull([(x, y, z) for x, y in base for z in (0, e)])


def truncated_box(a, b, c, t=2) -> Polytope:
    """Box with the origin corner cut at depth t (smooth for t <= min-2)."""
    corners = [p for p in itertools.product((0, a), (0, b), (0, c)) if p != (0, 0, 0)]
    return convex_hull(corners + [(t, 0, 0), (0, t, 0), (0, 0, t)])


def hexagon() -> Polytope:
    return convex_hull([(2, 0), (4, 0), (4, 2), (2, 4), (0, 4), (0, 2)])


def double_cayley(a, b, c) -> Polytope:
    return cayley_scroll_polytope([a, b, c]).dilate(2)


def simplex_points3(k):
    return [
        (x, y, z)
        for x in range(k + 1)
        for y in range(k + 1)
        for z in range(k + 1)
        if x + y + z <= k
    ]


EXTROP_POINTS = [
    (0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (0, 3),
]
EXTROP_U = [4, 1, 2, 3, 1, 1, 2, 1, 1, 1]


def extrop_h() -> Polynomial:
    """The cubic 4*x6*x7^2 - 4*x5*x7*x8 + 4*x4*x8^2 + 3*x5^2*x9 - 12*x4*x6*x9."""

    def mono(**powers):
        e = [0] * 10
        for idx, p in powers.items():
            e[int(idx[1:])] = p
        return tuple(e)

    return Polynomial(
        {
            mono(i6=1, i7=2): 4,
            mono(i5=1, i7=1, i8=1): -4,
            mono(i4=1, i8=2): 4,
            mono(i5=2, i9=1): 3,
            mono(i4=1, i6=1, i9=1): -12,
        }
    )


SPIKE_POINTS = [(3, 0, 0)] + simplex_points3(2)


def threefold_corpus():
    """Smooth 2-regular non-exceptional threefold polytopes (>= 20).

    Every member also has a nef first adjoint class (prisms with a doubled
    triangle base and odd height are deliberately excluded; they are covered
    by a dedicated test).
    """
    items = []
    for a, b, c in [
        (2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 3, 3), (2, 2, 4), (2, 3, 4),
        (2, 4, 4), (3, 3, 4), (3, 4, 4), (4, 4, 4), (2, 2, 5), (2, 3, 5),
    ]:
        items.append((f"box{a}{b}{c}", box(a, b, c)))
    for d, e in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (3, 4), (4, 4), (3, 5), (5, 4)]:
        items.append((f"prism{d}x{e}", prism(d, e)))
    for a, b, c in [(4, 4, 4), (4, 4, 5), (4, 5, 5), (5, 5, 5)]:
        items.append((f"truncbox{a}{b}{c}", truncated_box(a, b, c)))
    return items


def polygon_corpus():
    """(polygon, k) pairs: smooth, k-regular, not the k-dilated triangle."""
    items = []
    for a in range(2, 7):
        for b in range(a, 7):
            items.append((f"box2_{a}{b}", box2(a, b), min(a, b)))
    for d in (2, 3, 4, 5, 6):
        items.append((f"simplex2_{d}", simplex2(d), max(1, d - 1)))
    items.append(("hexagon", hexagon(), 2))
    items.append(("cayley2_23", convex_hull([(0, 0), (2, 0), (0, 1), (3, 1)]), 1))
    items.append(("cayley2_34", convex_hull([(0, 0), (3, 0), (0, 1), (4, 1)]), 1))
    return items


def random_unimodular(rng: random.Random, n: int):
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(8):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        mat[i] = [x + c * y for x, y in zip(mat[i], mat[j])]
    return mat


def apply_affine(mat, shift, points):
    out = []
    for p in points:
        image = tuple(sum(row[j] * p[j] for j in range(len(p))) for row in mat)
        out.append(tuple(x + s for x, s in zip(image, shift)))
    return out


@pytest.fixture
def rng():
    return random.Random(20260810)
