"""Shared brute-force oracles, kept independent of the library internals."""

from fractions import Fraction
from itertools import combinations, product

import pytest

from monoid_holes import IntMatrix


def gauss_determinant(rows):
    """Exact determinant via plain fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def brute_max_subdet(rows):
    d = len(rows)
    n = len(rows[0])
    best = 0
    for cols in combinations(range(n), d):
        det = gauss_determinant([[row[j] for j in cols] for row in rows])
        best = max(best, abs(det))
    return best


def numerical_gaps(a, b):
    """Gaps of the numerical semigroup generated by coprime a < b."""
    limit = a * b
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for z in range(1, limit + 1):
        if (z >= a and reachable[z - a]) or (z >= b and reachable[z - b]):
            reachable[z] = True
    return [z for z in range(1, limit + 1) if not reachable[z]]


def numerical_member(a, b, z):
    if z < 0:
        return False
    for x in range(z // a + 1):
        if (z - a * x) % b == 0:
            return True
    return False


def minimalize_vectors(vectors):
    """Componentwise-minimal elements of a finite set of tuples."""
    vectors = sorted(set(vectors))
    out = []
    for v in vectors:
        if not any(all(x >= y for x, y in zip(v, w)) and v != w for w in vectors):
            out.append(v)
    return out


def brute_minimal_inhomogeneous(rows, f, box):
    """Box enumeration of minimal (lam, mu) with f + A lam = A mu."""
    n = len(rows[0])
    a = IntMatrix.from_rows(rows)
    sols = []
    for lam in product(range(box + 1), repeat=n):
        lhs = tuple(fi + x for fi, x in zip(f, a.mul_vector(lam)))
        for mu in product(range(box + 1), repeat=n):
            if a.mul_vector(mu) == lhs:
                sols.append(lam + mu)
    return [ (s[:n], s[n:]) for s in minimalize_vectors(sols) ]


def brute_kernel_hilbert(rows, box):
    """Box enumeration of minimal nonzero solutions of A x = 0, x >= 0."""
    n = len(rows[0])
    a = IntMatrix.from_rows(rows)
    zero = (0,) * len(rows)
    sols = [x for x in product(range(box + 1), repeat=n)
            if any(x) and a.mul_vector(x) == zero]
    return minimalize_vectors(sols)


@pytest.fixture
def example_matrix():
    """The 2x4 running example with one fundamental hole."""
    return IntMatrix.from_rows([[1, 1, 1, 1], [0, 2, 3, 4]])
