from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from monoid_holes import (
    IntMatrix,
    RankDeficientError,
    ResourceLimitError,
    hermite_normal_form,
    lattice_basis,
    lattice_contains,
    max_abs_subdeterminant,
    row_sum_bound,
    solve_rational_affine,
)
from monoid_holes.intlinalg import integer_determinant, rational_rank
from monoid_holes.limits import Limits

from conftest import brute_max_subdet, gauss_determinant


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    rows = [[sum(a.entries[i][k] * b.entries[k][j] for k in range(a.cols))
             for j in range(b.cols)] for i in range(a.rows)]
    return IntMatrix.from_rows(rows)


small_matrices = st.integers(1, 4).flatmap(
    lambda d: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
            min_size=d, max_size=d)))


class TestHermiteNormalForm:
    def test_identity(self):
        eye = IntMatrix.from_rows([[1, 0], [0, 1]])
        h, u = hermite_normal_form(eye)
        assert h == eye
        assert u == eye

    def test_example_matrix_spans_z2(self, example_matrix):
        h, u = hermite_normal_form(example_matrix)
        assert h.entries == ((1, 0, 0, 0), (0, 1, 0, 0))
        assert matmul(example_matrix, u) == h

    def test_coprime_row(self):
        h, u = hermite_normal_form(IntMatrix.from_rows([[2, 3]]))
        assert h.entries == ((1, 0),)
        assert abs(gauss_determinant(u.entries)) == 1

    @settings(max_examples=60, deadline=None)
    @given(small_matrices)
    def test_roundtrip_unimodular_idempotent(self, rows):
        m = IntMatrix.from_rows(rows)
        h, u = hermite_normal_form(m)
        assert matmul(m, u) == h
        assert abs(gauss_determinant(u.entries)) == 1
        h2, u2 = hermite_normal_form(h)
        assert h2 == h
        # shape: pivot rows strictly increase, pivots positive, reduced left
        pivots = []
        for j in range(h.cols):
            col = h.col(j)
            if all(x == 0 for x in col):
                assert all(all(y == 0 for y in h.col(j2)) for j2 in range(j, h.cols))
                break
            p = next(i for i, x in enumerate(col) if x)
            assert col[p] > 0
            if pivots:
                assert p > pivots[-1][0]
            for jj in range(len(pivots)):
                assert 0 <= h.entries[p][jj] < col[p]
            pivots.append((p, j))


class TestLatticeBasis:
    def test_example_matrix_full_lattice(self, example_matrix):
        basis = lattice_basis(example_matrix)
        assert basis.rank == 2
        assert basis.columns == ((1, 0), (0, 1))

    def test_diagonal(self):
        basis = lattice_basis(IntMatrix.from_rows([[2, 0], [0, 2]]))
        assert basis.columns == ((2, 0), (0, 2))

    def test_gcd_row(self):
        basis = lattice_basis(IntMatrix.from_rows([[2, 3]]))
        assert basis.columns == ((1,),)

    def test_contains_full_lattice(self):
        basis = lattice_basis(IntMatrix.from_rows([[1, 0], [0, 1]]))
        assert lattice_contains(basis, (1, 1)) == (1, 1)

    def test_contains_parity_obstruction(self):
        basis = lattice_basis(IntMatrix.from_rows([[2, 0], [0, 2]]))
        assert lattice_contains(basis, (1, 0)) is None

    def test_contains_gcd(self):
        basis = lattice_basis(IntMatrix.from_rows([[2, 4]]))
        assert basis.columns == ((2,),)
        assert lattice_contains(basis, (3,)) is None

    @settings(max_examples=60, deadline=None)
    @given(small_matrices, st.data())
    def test_integer_combinations_are_members(self, rows, data):
        m = IntMatrix.from_rows(rows)
        lam = data.draw(st.lists(st.integers(-4, 4), min_size=m.cols, max_size=m.cols))
        z = m.mul_vector(lam)
        basis = lattice_basis(m)
        coeffs = basis.contains(z)
        assert coeffs is not None
        assert basis.from_coordinates(coeffs) == z


class TestSolveRationalAffine:
    def test_identity(self):
        a = IntMatrix.from_rows([[1, 0], [0, 1]])
        particular, kernel = solve_rational_affine(a, (7, -3))
        assert particular == (7, -3)
        assert kernel == ()

    def test_one_equation(self):
        particular, kernel = solve_rational_affine(IntMatrix.from_rows([[1, 1]]), (1,))
        assert particular == (1, 0)
        assert len(kernel) == 1
        assert kernel[0][0] + kernel[0][1] == 0

    def test_inconsistent(self):
        a = IntMatrix.from_rows([[1, 1], [1, 1]])
        assert solve_rational_affine(a, (0, 1)) is None

    @settings(max_examples=60, deadline=None)
    @given(small_matrices, st.data())
    def test_solution_and_kernel_are_exact(self, rows, data):
        m = IntMatrix.from_rows(rows)
        b = data.draw(st.lists(st.integers(-9, 9), min_size=m.rows, max_size=m.rows))
        solved = solve_rational_affine(m, tuple(b))
        if solved is None:
            assert rational_rank(list(m.entries)) < rational_rank(
                [list(row) + [bi] for row, bi in zip(m.entries, b)])
            return
        particular, kernel = solved
        assert list(m.mul_vector(particular)) == [Fraction(x) for x in b]
        for vec in kernel:
            assert all(x == 0 for x in m.mul_vector(vec))


class TestSubdeterminants:
    def test_example_matrix(self, example_matrix):
        assert max_abs_subdeterminant(example_matrix) == 4

    def test_identity(self):
        assert max_abs_subdeterminant(IntMatrix.from_rows([[1, 0], [0, 1]])) == 1

    def test_single_row(self):
        assert max_abs_subdeterminant(IntMatrix.from_rows([[2, 3]])) == 3

    def test_rank_deficient_rejected(self):
        with pytest.raises(RankDeficientError):
            max_abs_subdeterminant(IntMatrix.from_rows([[1, 1], [2, 2]]))

    def test_subset_ceiling(self):
        a = IntMatrix.from_rows([[1] * 30, list(range(1, 31))])
        with pytest.raises(ResourceLimitError):
            max_abs_subdeterminant(a, Limits(max_subsets=10))

    @settings(max_examples=40, deadline=None)
    @given(small_matrices)
    def test_matches_brute_force(self, rows):
        m = IntMatrix.from_rows(rows)
        if m.rows > m.cols or rational_rank(rows) < m.rows:
            return
        assert max_abs_subdeterminant(m) == brute_max_subdet(rows)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                    min_size=3, max_size=3))
    def test_bareiss_matches_gauss(self, rows):
        assert integer_determinant(rows) == gauss_determinant(rows)


class TestRowSumBound:
    def test_example_matrix(self, example_matrix):
        # the worked-example value: the larger absolute row sum
        assert row_sum_bound(example_matrix) == 9

    def test_identity(self):
        assert row_sum_bound(IntMatrix.from_rows([[1, 0], [0, 1]])) == 1

    def test_single_row(self):
        assert row_sum_bound(IntMatrix.from_rows([[2, 3]])) == 5

    def test_signs_ignored(self):
        assert row_sum_bound(IntMatrix.from_rows([[-2, 3], [1, -1]])) == 5
