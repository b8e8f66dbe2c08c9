import pytest

from monoid_holes import (
    IntMatrix,
    NotPointedError,
    SemigroupProblem,
    fundamental_holes,
    hole_ideal,
    holes_representation,
    in_half_open_zonotope,
    is_hole,
    row_sum_bound,
)

from conftest import numerical_gaps, numerical_member


def numerical_problem(a, b):
    return SemigroupProblem.build(IntMatrix.from_rows([[a, b]]))


@pytest.fixture
def example_problem(example_matrix):
    return SemigroupProblem.build(example_matrix)


class TestIsHole:
    def test_fundamental_hole(self, example_problem):
        assert is_hole(example_problem, (1, 1))

    def test_far_translate(self, example_problem):
        assert is_hole(example_problem, (1000, 1))

    def test_origin_is_not(self, example_problem):
        assert not is_hole(example_problem, (0, 0))

    def test_semigroup_point_is_not(self, example_problem):
        assert not is_hole(example_problem, (2, 2))

    def test_outside_cone_is_not(self, example_problem):
        assert not is_hole(example_problem, (-1, 0))


class TestFundamentalHoles:
    def test_example_matrix(self, example_problem):
        fund = fundamental_holes(example_problem)
        assert fund.holes == ((1, 1),)
        assert fund.basis_holes == ((1, 1),)

    def test_identity_is_normal(self):
        problem = SemigroupProblem.build(IntMatrix.from_rows([[1, 0], [0, 1]]))
        fund = fundamental_holes(problem)
        assert fund.holes == ()
        assert fund.basis_holes == ()

    def test_three_five(self):
        fund = fundamental_holes(numerical_problem(3, 5))
        assert fund.holes == ((1,), (2,))

    def test_non_pointed_rejected(self):
        with pytest.raises(NotPointedError):
            SemigroupProblem.build(IntMatrix.from_rows([[1, -1]]))

    def test_zero_row_kept_with_warning(self):
        with pytest.warns(UserWarning, match="zero rows"):
            problem = SemigroupProblem.build(IntMatrix.from_rows([[2, 3], [0, 0]]))
        assert fundamental_holes(problem).holes == ((1, 0),)

    def test_fundamental_holes_lie_in_zonotope(self, example_problem):
        for h in fundamental_holes(example_problem).holes:
            assert in_half_open_zonotope(example_problem.matrix, h)

    @pytest.mark.parametrize("a,b", [(2, 3), (3, 4), (3, 5), (4, 7), (5, 6)])
    def test_against_gap_oracle(self, a, b):
        gaps = numerical_gaps(a, b)
        expected = tuple(
            (g,) for g in gaps
            if not any(g2 != g and numerical_member(a, b, g - g2) for g2 in gaps))
        fund = fundamental_holes(numerical_problem(a, b))
        assert fund.holes == expected


class TestHoleIdeal:
    def test_example_matrix(self, example_problem):
        ideal = hole_ideal(example_problem, (1, 1))
        assert ideal.generators == ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0))

    def test_three_five_hole_two(self):
        ideal = hole_ideal(numerical_problem(3, 5), (2,))
        assert set(ideal.generators) == {(1, 0), (0, 2)}

    def test_three_five_hole_one(self):
        ideal = hole_ideal(numerical_problem(3, 5), (1,))
        assert set(ideal.generators) == {(3, 0), (0, 1)}


class TestHolesRepresentation:
    def test_example_matrix_single_cell(self, example_problem):
        rep = holes_representation(example_problem)
        assert len(rep.cells) == 1
        cell = rep.cells[0]
        assert cell.shift == (1, 1)
        assert cell.generators == ((1, 0),)
        assert not rep.is_finite

    def test_identity_empty(self):
        problem = SemigroupProblem.build(IntMatrix.from_rows([[1, 0], [0, 1]]))
        rep = holes_representation(problem)
        assert rep.cells == ()
        assert rep.is_finite

    def test_three_five_covers_gaps(self):
        problem = numerical_problem(3, 5)
        rep = holes_representation(problem)
        assert rep.is_finite
        points = sorted({cell.shift for cell in rep.cells})
        assert points == [(1,), (2,), (4,), (7,)]
        # overlap across different fundamental holes is allowed: 7 is shared
        sources = {cell.shift: [] for cell in rep.cells}
        for cell in rep.cells:
            sources[cell.shift].append(cell.fundamental_hole)
        assert sorted(sources[(7,)]) == [(1,), (2,)]

    def test_cells_contain_only_holes(self, example_problem):
        rep = holes_representation(example_problem)
        for cell in rep.cells:
            point = cell.shift
            for step in range(4):
                assert is_hole(example_problem, point)
                if cell.generators:
                    point = tuple(x + g for x, g in zip(point, cell.generators[0]))

    def test_desk_scale_completeness(self, example_problem):
        # every hole with entries up to three row sums appears in some cell
        rep = holes_representation(example_problem)
        radius = 3 * row_sum_bound(example_problem.matrix)
        grading = example_problem.grading
        from monoid_holes.intlinalg import vec_dot
        cap = 1 + max(vec_dot(grading, corner)
                      for corner in [(0, 0), (radius, 0), (0, radius), (radius, radius)])
        points = rep.enumerate_up_to(grading, cap)
        for x in range(0, radius + 1):
            for y in range(0, radius + 1):
                z = (x, y)
                if is_hole(example_problem, z):
                    assert z in points

    @pytest.mark.parametrize("a,b", [(2, 5), (3, 7), (4, 5)])
    def test_union_matches_gap_oracle(self, a, b):
        problem = numerical_problem(a, b)
        rep = holes_representation(problem)
        assert rep.is_finite
        covered = set()
        for cell in rep.cells:
            assert not cell.generators
            covered.add(cell.shift[0])
        assert sorted(covered) == numerical_gaps(a, b)
