"""Jet matrices of point configurations and their exact linear algebra.

The order-k matrix of a configuration {r_0..r_m} in Z^n has one row per
monomial exponent beta with |beta| <= k, each row the coordinatewise product
of the coordinate rows of [(1, r_i)].  Rows are ordered by total degree and
then descending lexicographically, which pins golden fixtures.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import CapExceeded
from .lattice import affine_rank, norm_point
from .linalg import RationalMatrix, kernel_basis, rank as mat_rank, rref, solve_left
from .polynomials import Polynomial

DEFAULT_COLUMN_CAP = 18


def column_cap() -> int:
    env = os.environ.get("TORJET_CAP_COLUMNS")
    return int(env) if env else DEFAULT_COLUMN_CAP


def monomial_exponents(n: int, k: int):
    """Exponents beta in N^n with |beta| <= k: graded, descending lex in each degree."""
    out = []
    for deg in range(k + 1):
        block = []
        for cuts in itertools.combinations(range(deg + n - 1), n - 1):
            prev = -1
            beta = []
            for c in cuts:
                beta.append(c - prev - 1)
                prev = c
            beta.append(deg + n - 2 - prev)
            block.append(tuple(beta))
        block.sort(reverse=True)
        out.extend(block)
    return out


@dataclass(frozen=True)
class JetMatrix:
    points: tuple
    k: int
    matrix: RationalMatrix
    row_index: tuple  # exponent tuples, aligned with matrix rows

    @property
    def n(self) -> int:
        return len(self.points[0]) if self.points else 0

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "rows": [[int(x) for x in row] for row in self.matrix.rows],
            "row_index": [list(b) for b in self.row_index],
        }


def build_Ak(points, k: int) -> JetMatrix:
    """Order-k jet matrix; row count is binom(n + k, k) for n coordinates."""
    pts = tuple(norm_point(p) for p in points)
    if not pts:
        raise ValueError("empty configuration")
    if k < 0:
        raise ValueError("jet order must be nonnegative")
    n = len(pts[0])
    betas = monomial_exponents(n, k)
    rows = []
    for beta in betas:
        row = []
        for p in pts:
            val = 1
            for coord, expo in zip(p, beta):
                if expo:
                    val *= coord**expo
            row.append(val)
        rows.append(row)
    assert len(rows) == comb(n + k, k)
    labels = ["*".join(f"v{i + 1}^{e}" for i, e in enumerate(b) if e) or "1" for b in betas]
    return JetMatrix(pts, k, RationalMatrix(rows, row_labels=labels), tuple(betas))


def rank_and_kernel(matrix: RationalMatrix):
    """Exact rank and a deterministic reduced kernel basis."""
    return matrix.rank(), matrix.kernel()


def affine_span_dim(points) -> int:
    return affine_rank([norm_point(p) for p in points])


def is_generically_k_spanned(points, k: int) -> bool:
    """Rank of the order-k matrix is the maximal binom(n + k, k), n the affine span."""
    jm = build_Ak(points, k)
    n = affine_span_dim(points)
    return jm.matrix.rank() == comb(n + k, k)


def expected_dim(points, k: int) -> int:
    """m + n - rank of the order-k matrix (may be negative: empty expected dual).

    The full rank enters, not rank - 1: the dual is swept out by an
    (m - rank)-dimensional projective family of kernel directions moved by the
    n-torus.  (For the ten-point plane cubic configuration at order 2 this
    gives 9 + 2 - 6 = 5.)
    """
    jm = build_Ak(points, k)
    m = len(jm.points) - 1
    n = affine_span_dim(points)
    return m + n - jm.matrix.rank()


def _witness_polynomial(jm: JetMatrix, target) -> Polynomial | None:
    q = solve_left(jm.matrix.rows, target)
    if q is None:
        return None
    return Polynomial({beta: c for beta, c in zip(jm.row_index, q)})


def torus_disjoint(points, k: int):
    """Detects a coordinate vector in the row span of the order-k matrix.

    On success returns (True, Q) where Q has degree <= k, vanishes on all
    configuration points but one and is nonzero there; else (False, None).
    """
    jm = build_Ak(points, k)
    m1 = len(jm.points)
    for i in range(m1):
        target = [Fraction(1) if j == i else Fraction(0) for j in range(m1)]
        q = _witness_polynomial(jm, target)
        if q is not None:
            return True, q
    return False, None


@dataclass(frozen=True)
class CocircuitVector:
    support: tuple
    vector: tuple  # Fractions, first nonzero entry scaled to 1
    witness_poly: Polynomial

    def to_json(self) -> dict:
        from .linalg import format_rational

        return {
            "support": list(self.support),
            "vector": [format_rational(x) for x in self.vector],
            "witness_poly": self.witness_poly.to_json(),
        }


def cocircuits(jm: JetMatrix, cap: int | None = None):
    """All minimal-support nonzero row-span vectors, one per hyperplane flat.

    Enumerates (rank-1)-subsets of columns, closes each independent one to a
    flat and extracts the 1-dimensional annihilator supported on the
    complement.  Raises CapExceeded when the column count exceeds the cap;
    partial results are never returned.
    """
    if cap is None:
        cap = column_cap()
    m1 = jm.matrix.ncols
    if m1 > cap:
        raise CapExceeded(m1, cap, "columns")
    basis, _ = rref(jm.matrix.rows)
    r = len(basis)
    if r == 0:
        return []
    columns = [tuple(basis[row][c] for row in range(r)) for c in range(m1)]
    hyperplanes: list[frozenset] = []
    for T in itertools.combinations(range(m1), r - 1):
        tset = set(T)
        if any(tset <= H for H in hyperplanes):
            continue
        sub = [columns[c] for c in T]
        if mat_rank(sub) != r - 1:
            continue
        closure = set(T)
        for j in range(m1):
            if j in tset:
                continue
            if mat_rank(sub + [columns[j]]) == r - 1:
                closure.add(j)
        hyperplanes.append(frozenset(closure))
    out = []
    for H in sorted(hyperplanes, key=sorted):
        ann_rows = [columns[c] for c in sorted(H)]
        ann = kernel_basis(ann_rows, r)
        assert len(ann) == 1, "hyperplane annihilator is not 1-dimensional"
        coeff = ann[0]
        vec = [sum(coeff[row] * basis[row][c] for row in range(r)) for c in range(m1)]
        lead = next(x for x in vec if x != 0)
        vec = tuple(x / lead for x in vec)
        support = tuple(i for i, x in enumerate(vec) if x != 0)
        assert set(support) == set(range(m1)) - H
        witness = _witness_polynomial(jm, vec)
        assert witness is not None
        out.append(CocircuitVector(support, vec, witness))
    out.sort(key=lambda c: (len(c.support), c.support))
    return out
