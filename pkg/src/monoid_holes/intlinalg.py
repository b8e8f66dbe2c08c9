"""Arbitrary-precision integer and rational linear algebra.

Everything here is exact: matrices and vectors hold Python ints, rational
work uses fractions.Fraction.  No floating point appears anywhere in the
package.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from .errors import RankDeficientError, ResourceLimitError
from .limits import DEFAULT_LIMITS, Limits

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# small vector helpers (tuples in, tuples out)

def vec_add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(k, v) -> tuple:
    return tuple(k * a for a in v)


def vec_dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_is_zero(v) -> bool:
    return all(a == 0 for a in v)


def unit_vector(n: int, i: int) -> IntVector:
    return tuple(1 if j == i else 0 for j in range(n))


def primitive_vector(v) -> IntVector:
    """Divide an integer vector by the gcd of its entries (gcd of 0 is 0)."""
    g = 0
    for a in v:
        g = gcd(g, a)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def rational_to_primitive_int(v) -> IntVector:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fracs = [Fraction(a) for a in v]
    lcm = 1
    for a in fracs:
        d = a.denominator
        lcm = lcm * d // gcd(lcm, d)
    return primitive_vector(tuple(int(a * lcm) for a in fracs))


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, immutable and hashable."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged matrix rows")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        # operator.index is lossless: floats are rejected, not truncated
        return cls(tuple(tuple(operator.index(x) for x in row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> IntVector:
        return self.entries[i]

    def col(self, j: int) -> IntVector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[IntVector]:
        return [self.col(j) for j in range(self.cols)]

    def mul_vector(self, x) -> tuple:
        """Matrix-vector product A @ x for a length-cols sequence."""
        if len(x) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(vec_dot(row, x) for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for row in self.entries for x in row)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


# ---------------------------------------------------------------------------
# Hermite normal form (column style)

def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1 = 1, 0
    y0, y1 = 0, 1
    g0, g1 = a, b
    while g1:
        q = g0 // g1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
        g0, g1 = g1, g0 - q * g1
    if g0 < 0:
        x0, y0, g0 = -x0, -y0, -g0
    return g0, x0, y0


def _combine_columns(m: list[list[int]], c1: int, c2: int, a, b, c, d):
    # column c1 := a*c1 + b*c2, column c2 := c*c1 + d*c2 (old values)
    for row in m:
        e1, e2 = row[c1], row[c2]
        row[c1] = a * e1 + b * e2
        row[c2] = c * e1 + d * e2


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form H of m with unimodular U, m @ U = H.

    Convention: pivot columns come first with strictly increasing pivot
    rows, pivots are positive, and in each pivot row the entries of earlier
    columns are reduced to lie in [0, pivot).
    """
    d, n = m.rows, m.cols
    w = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    col = 0
    for row in range(d):
        if col == n:
            break
        pivot_col = None
        for j in range(col, n):
            if w[row][j]:
                pivot_col = j
                break
        if pivot_col is None:
            continue
        if pivot_col != col:
            for mat in (w, u):
                for r in mat:
                    r[col], r[pivot_col] = r[pivot_col], r[col]
        for j in range(col + 1, n):
            if w[row][j] == 0:
                continue
            a, b = w[row][col], w[row][j]
            g, x, y = _xgcd(a, b)
            _combine_columns(w, col, j, x, y, -(b // g), a // g)
            _combine_columns(u, col, j, x, y, -(b // g), a // g)
        if w[row][col] < 0:
            for mat in (w, u):
                for r in mat:
                    r[col] = -r[col]
        pivot = w[row][col]
        for j in range(col):
            q = w[row][j] // pivot
            if q:
                for mat in (w, u):
                    for r in mat:
                        r[j] -= q * r[col]
        col += 1
    h = IntMatrix.from_rows(w)
    return h, IntMatrix.from_rows(u)


# ---------------------------------------------------------------------------
# lattices

@dataclass(frozen=True)
class LatticeBasis:
    """Basis of the integer column span of a matrix, in column HNF."""

    ambient_dim: int
    rank: int
    columns: tuple[IntVector, ...]
    pivot_rows: tuple[int, ...]

    def contains(self, z) -> IntVector | None:
        """Coefficient vector expressing z over the basis, or None."""
        if len(z) != self.ambient_dim:
            raise ValueError("vector dimension does not match lattice")
        resid = list(z)
        coeffs = []
        for column, p in zip(self.columns, self.pivot_rows):
            pivot = column[p]
            if resid[p] % pivot:
                return None
            k = resid[p] // pivot
            coeffs.append(k)
            if k:
                for i in range(p, self.ambient_dim):
                    resid[i] -= k * column[i]
        if any(resid):
            return None
        return tuple(coeffs)

    def to_coordinates(self, z) -> IntVector | None:
        return self.contains(z)

    def from_coordinates(self, c) -> IntVector:
        if len(c) != self.rank:
            raise ValueError("coordinate length does not match rank")
        out = [0] * self.ambient_dim
        for k, column in zip(c, self.columns):
            if k:
                for i, x in enumerate(column):
                    out[i] += k * x
        return tuple(out)


def lattice_basis(a: IntMatrix) -> LatticeBasis:
    """Basis of the lattice generated by the columns of a."""
    h, _ = hermite_normal_form(a)
    columns = []
    pivots = []
    for j in range(h.cols):
        column = h.col(j)
        if vec_is_zero(column):
            break
        columns.append(column)
        pivots.append(next(i for i, x in enumerate(column) if x))
    return LatticeBasis(a.rows, len(columns), tuple(columns), tuple(pivots))


def lattice_contains(basis: LatticeBasis, z) -> IntVector | None:
    """Membership of z in the lattice; returns the coefficient witness."""
    return basis.contains(z)


# ---------------------------------------------------------------------------
# rational solving

def solve_rational_affine(a: IntMatrix, b) -> tuple[RatVector, tuple[RatVector, ...]] | None:
    """Particular solution and rational kernel basis of A x = b, if solvable.

    The particular solution sets all free variables to zero; kernel basis
    vectors have a single free variable set to one.
    """
    d, n = a.rows, a.cols
    if len(b) != d:
        raise ValueError("right-hand side has wrong dimension")
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a.entries)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, d) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(d):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == d:
            break
    for i in range(r, d):
        if m[i][n]:
            return None
    particular = [Fraction(0)] * n
    for i, c in enumerate(pivot_cols):
        particular[c] = m[i][n]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    kernel = []
    for fc in free_cols:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, c in enumerate(pivot_cols):
            vec[c] = -m[i][fc]
        kernel.append(tuple(vec))
    return tuple(particular), tuple(kernel)


def rational_rank(rows) -> int:
    """Rank of a list of rational/integer row vectors."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    n = len(work[0])
    rank = 0
    for c in range(n):
        pr = next((i for i in range(rank, len(work)) if work[i][c]), None)
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        pv = work[rank][c]
        work[rank] = [x / pv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# determinants and the bound ingredients

def integer_determinant(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(row) for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def max_abs_subdeterminant(a: IntMatrix, limits: Limits = DEFAULT_LIMITS) -> int:
    """Largest |det| over all maximal (rows x rows) column selections.

    Intrinsically exponential; guarded by limits.max_subsets.
    """
    d, n = a.rows, a.cols
    if d > n or rational_rank(a.entries) < d:
        raise RankDeficientError("matrix must have full row rank")
    count = comb(n, d)
    if count > limits.max_subsets:
        raise ResourceLimitError("column subsets for subdeterminants", limits.max_subsets)
    best = 0
    for cols in combinations(range(n), d):
        det = integer_determinant([[a.entries[i][j] for j in cols] for i in range(d)])
        if abs(det) > best:
            best = abs(det)
    return best


def row_sum_bound(a: IntMatrix) -> int:
    """Largest row sum of absolute values, the hole-entry bound ingredient."""
    return max(sum(abs(x) for x in row) for row in a.entries)
