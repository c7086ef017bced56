"""Exact rational linear algebra on small dense matrices.

Everything here works over ``fractions.Fraction`` (or plain ``int``), with
deterministic pivoting so that echelon forms, kernel bases and solver output
are reproducible byte-for-byte.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivot_columns)``.  Pivoting picks the first
    nonzero entry in column order, topmost row first, so the result is a
    canonical basis of the row space.
    """
    m = _as_fraction_rows(rows)
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def kernel_basis(rows, ncols=None):
    """Basis of the right kernel {x : rows @ x = 0}, one vector per free column.

    Each basis vector has value 1 in its free coordinate and is derived from
    the reduced echelon form, so the list is deterministic.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve_right(rows, rhs):
    """One solution x of ``rows @ x = rhs`` (free variables set to 0), or None."""
    rows = list(rows)
    if not rows:
        return None if any(b != 0 for b in rhs) else ()
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None  # pivot in the rhs column: inconsistent
        x[pc] = red[r][ncols]
    return tuple(x)


def solve_left(rows, rhs):
    """One solution q of ``q @ rows = rhs``, or None if rhs is not in the row span."""
    if not rows:
        return None if any(b != 0 for b in rhs) else ()
    transposed = [[rows[i][j] for i in range(len(rows))] for j in range(len(rows[0]))]
    return solve_right(transposed, rhs)


def in_row_span(rows, vec) -> bool:
    red, _ = rref(rows)
    return len(rref(red + [list(vec)])[0]) == len(red)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def gcd_vector(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def primitive(v):
    """Scale an integer (or rational) vector to a primitive integer vector.

    The direction is preserved: only a positive scalar is applied.
    """
    if all(type(x) is int for x in v):
        g = 0
        for x in v:
            g = gcd(g, x)
        if g == 0:
            raise ValueError("zero vector has no primitive representative")
        return tuple(x // g for x in v)
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise ValueError("zero vector has no primitive representative")
    denom_lcm = 1
    for x in fr:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in fr]
    g = gcd_vector(ints)
    return tuple(x // g for x in ints)


def _ext_gcd(a: int, b: int):
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_kernel_basis(rows, ncols: int):
    """Z-basis of the saturated lattice {x in Z^ncols : rows @ x = 0}.

    Uses unimodular column operations, so the output really generates the full
    integer kernel (which is automatically saturated).
    """
    cols = [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    active = ncols
    for row in rows:
        vals = [dot(row, cols[j]) for j in range(active)]
        piv = None
        for j in range(active):
            if vals[j] == 0:
                continue
            if piv is None:
                piv = j
                continue
            a, b = vals[piv], vals[j]
            g, s, t = _ext_gcd(a, b)
            cp, cj = cols[piv], cols[j]
            cols[piv] = tuple(s * x + t * y for x, y in zip(cp, cj))
            cols[j] = tuple(-(b // g) * x + (a // g) * y for x, y in zip(cp, cj))
            vals[piv], vals[j] = g, 0
        if piv is not None:
            active -= 1
            cols[piv], cols[active] = cols[active], cols[piv]
    return [cols[j] for j in range(active)]


def complement_functional(e):
    """Integer u with <u, e> = 1 for a primitive integer vector e."""
    n = len(e)
    g = 0
    coeffs = [0] * n
    for i, x in enumerate(e):
        x = int(x)
        if x == 0:
            continue
        if g == 0:
            g = abs(x)
            coeffs = [0] * n
            coeffs[i] = 1 if x > 0 else -1
        else:
            g2, s, t = _ext_gcd(g, x)
            coeffs = [s * c for c in coeffs]
            coeffs[i] += t
            g = g2
    if g != 1:
        raise ValueError("vector is not primitive")
    return tuple(coeffs)


def saturation_basis(vectors, ncols: int):
    """Basis of Z^ncols intersected with the rational span of ``vectors``.

    Computed as the integer kernel of a basis of the orthogonal complement,
    which is saturated by construction.  Returns [] for an empty span.
    """
    vecs = [v for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return []
    ortho = kernel_basis(vecs, ncols)
    if not ortho:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    # scale the rational kernel vectors to integers before column reduction
    int_ortho = [primitive(v) for v in ortho]
    return integer_kernel_basis(int_ortho, ncols)


def lattice_coordinates(basis, x):
    """Coordinates of x in the given lattice basis; entries must come out integral."""
    transposed = [[basis[i][j] for i in range(len(basis))] for j in range(len(basis[0]))]
    y = solve_right(transposed, x)
    if y is None:
        raise ValueError("point is not in the span of the basis")
    out = []
    for c in y:
        if c.denominator != 1:
            raise ValueError("point is not in the lattice spanned by the basis")
        out.append(int(c))
    return tuple(out)


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RationalMatrix:
    """Dense exact matrix with optional row/column labels and TSV export."""

    def __init__(self, rows, row_labels=None, col_labels=None):
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix")
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None
        self._rank = None
        self._kernel = None

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def rank(self) -> int:
        if self._rank is None:
            self._rank = rank(self.rows)
        return self._rank

    def kernel(self):
        if self._kernel is None:
            self._kernel = kernel_basis(self.rows, self.ncols)
        return self._kernel

    def to_tsv(self) -> str:
        lines = ["\t".join(format_rational(x) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.to_tsv()

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols})"
