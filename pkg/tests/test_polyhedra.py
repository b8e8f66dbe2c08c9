from fractions import Fraction

from hypothesis import given, settings, strategies as st

from monoid_holes import (
    InequalitySystem,
    IntMatrix,
    cone_facets,
    in_half_open_zonotope,
    is_pointed,
    lp_exact,
)
from monoid_holes.polyhedra import EQ, GE, maximize_each, positive_functional
from monoid_holes.intlinalg import unit_vector, vec_dot
from monoid_holes.transport import TransportDims, transportation_matrix


class TestConeFacets:
    def test_example_matrix(self, example_matrix):
        fc = cone_facets(example_matrix)
        assert fc.system.senses == (GE, GE)
        assert set(fc.system.matrix) == {(0, 1), (4, -1)}
        assert fc.lineality_dim == 0

    def test_orthant(self):
        fc = cone_facets(IntMatrix.from_rows([[1, 0], [0, 1]]))
        assert set(fc.system.matrix) == {(1, 0), (0, 1)}
        assert all(s == GE for s in fc.system.senses)

    def test_full_line_has_no_facets(self):
        fc = cone_facets(IntMatrix.from_rows([[1, -1]]))
        assert fc.system.matrix == ()
        assert fc.lineality_dim == 1

    def test_lower_dimensional_cone_gets_equalities(self):
        # single ray (1, 1): span is a line, one equality plus one facet
        fc = cone_facets(IntMatrix.from_rows([[1], [1]]))
        senses = fc.system.senses
        assert EQ in senses and GE in senses
        assert fc.system.satisfied_by((2, 2))
        assert not fc.system.satisfied_by((2, 3))
        assert not fc.system.satisfied_by((-1, -1))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(-5, 5), min_size=2, max_size=2),
                    min_size=1, max_size=5), st.data())
    def test_membership_duality(self, cols, data):
        a = IntMatrix.from_rows([list(x) for x in zip(*cols)])
        fc = cone_facets(a)
        lam = data.draw(st.lists(st.integers(0, 4), min_size=a.cols, max_size=a.cols))
        point = a.mul_vector(lam)
        assert fc.system.satisfied_by(point)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(-5, 5), min_size=2, max_size=2),
                    min_size=1, max_size=4), st.data())
    def test_facet_violation_means_real_infeasible(self, cols, data):
        a = IntMatrix.from_rows([list(x) for x in zip(*cols)])
        fc = cone_facets(a)
        z = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=2, max_size=2)))
        if fc.system.satisfied_by(z):
            return
        rows = [(a.entries[i], EQ, z[i]) for i in range(a.rows)]
        rows += [(unit_vector(a.cols, j), GE, 0) for j in range(a.cols)]
        res = lp_exact(InequalitySystem.from_rows(rows), (0,) * a.cols, "min")
        assert res.status == "infeasible"


class TestIsPointed:
    def test_example_matrix(self, example_matrix):
        assert is_pointed(example_matrix)

    def test_line(self):
        assert not is_pointed(IntMatrix.from_rows([[1, -1]]))

    def test_transportation_cone(self):
        a = transportation_matrix(TransportDims(3, 4, 6))
        assert is_pointed(a)

    def test_mixed_sign_pointed(self):
        assert is_pointed(IntMatrix.from_rows([[2, -1], [0, 1]]))

    def test_positive_functional_certifies(self):
        a = IntMatrix.from_rows([[2, -1], [0, 1]])
        phi = positive_functional(a)
        for col in a.columns():
            assert vec_dot(phi, col) >= 1


class TestLpExact:
    def test_min_with_lower_bound(self):
        system = InequalitySystem.from_rows([((1,), GE, 3)])
        res = lp_exact(system, (1,), "min")
        assert res.status == "optimal"
        assert res.optimum == 3
        assert res.witness == (3,)

    def test_infeasible(self):
        system = InequalitySystem.from_rows([((1,), GE, 1), ((-1,), GE, 0)])
        res = lp_exact(system, (1,), "max")
        assert res.status == "infeasible"

    def test_unbounded(self):
        system = InequalitySystem.from_rows([((1,), GE, 0)])
        res = lp_exact(system, (1,), "max")
        assert res.status == "unbounded"

    def test_exact_rational_optimum(self):
        # min x + y subject to 3x + y >= 1, x + 3y >= 1, x, y >= 0
        system = InequalitySystem.from_rows([
            ((3, 1), GE, 1), ((1, 3), GE, 1),
            ((1, 0), GE, 0), ((0, 1), GE, 0)])
        res = lp_exact(system, (1, 1), "min")
        assert res.status == "optimal"
        assert res.optimum == Fraction(1, 2)
        assert res.witness == (Fraction(1, 4), Fraction(1, 4))

    def test_equality_with_free_variable(self):
        system = InequalitySystem.from_rows([((1, 1), EQ, 5)])
        res = lp_exact(system, (0, 1), "min")
        assert res.status == "unbounded"

    def test_degenerate_terminates(self):
        # heavily degenerate feasibility at a single point
        system = InequalitySystem.from_rows([
            ((1, 1), EQ, 0), ((1, -1), EQ, 0),
            ((1, 0), GE, 0), ((0, 1), GE, 0)])
        res = lp_exact(system, (1, 0), "max")
        assert res.status == "optimal"
        assert res.optimum == 0

    def test_maximize_each_matches_single_calls(self):
        rows = [((1, 1, 1), EQ, 4)]
        rows += [(unit_vector(3, j), GE, 0) for j in range(3)]
        system = InequalitySystem.from_rows(rows)
        objectives = [unit_vector(3, j) for j in range(3)]
        batched = maximize_each(system, objectives)
        singles = [lp_exact(system, obj, "max") for obj in objectives]
        for b, s in zip(batched, singles):
            assert (b.status, b.optimum) == (s.status, s.optimum)
            assert b.optimum == 4


class TestHalfOpenZonotope:
    def test_fundamental_hole_is_inside(self, example_matrix):
        assert in_half_open_zonotope(example_matrix, (1, 1))

    def test_origin(self, example_matrix):
        assert in_half_open_zonotope(example_matrix, (0, 0))

    def test_boundary_point_excluded(self, example_matrix):
        # (4, 0) forces the first coefficient to reach 4
        assert not in_half_open_zonotope(example_matrix, (4, 0))

    def test_interior_lattice_point(self, example_matrix):
        assert in_half_open_zonotope(example_matrix, (2, 4))

    def test_outside_cone(self, example_matrix):
        assert not in_half_open_zonotope(example_matrix, (-1, 0))

    def test_zonotope_points_lie_in_cone(self, example_matrix):
        fc = cone_facets(example_matrix)
        for x in range(-1, 5):
            for y in range(-1, 10):
                if in_half_open_zonotope(example_matrix, (x, y)):
                    assert fc.system.satisfied_by((x, y))
