"""Fundamental holes, hole ideals, and the explicit representation of all
holes of an affine semigroup.

A hole is a point of the saturation (cone intersect lattice) that is not a
nonnegative integer combination of the matrix columns.  Fundamental holes
are the holes from which no other hole can be subtracted inside the
semigroup; they are finitely many, every hole sits above one of them, and
the holes above a fundamental hole f are read off the standard pairs of
the hole ideal of f.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .dioph import (
    HilbertBasis,
    hilbert_basis_cone_lattice,
    minimal_inhomogeneous_solutions,
    semigroup_contains,
)
from .intlinalg import (
    IntMatrix,
    IntVector,
    LatticeBasis,
    RatVector,
    lattice_basis,
    vec_add,
    vec_dot,
    vec_is_zero,
    vec_sub,
)
from .limits import DEFAULT_LIMITS, Limits
from .monomials import MonomialIdeal, StandardPair, standard_pairs
from .polyhedra import InequalitySystem, cone_facets, positive_functional


@dataclass(frozen=True)
class SemigroupProblem:
    """A matrix together with its precomputed lattice and cone data."""

    matrix: IntMatrix
    lattice: LatticeBasis
    facets: InequalitySystem
    grading: RatVector  # strictly positive on every nonzero column

    @classmethod
    def build(cls, a: IntMatrix, limits: Limits = DEFAULT_LIMITS) -> "SemigroupProblem":
        if any(vec_is_zero(row) for row in a.entries):
            warnings.warn("matrix has zero rows; they are kept and never constrain anything",
                          stacklevel=2)
        grading = positive_functional(a)  # raises NotPointedError on lines
        return cls(a, lattice_basis(a), cone_facets(a, limits).system, grading)

    def in_cone(self, z) -> bool:
        return self.facets.satisfied_by(z)

    def in_saturation(self, z) -> bool:
        return self.in_cone(z) and self.lattice.contains(z) is not None


@dataclass(frozen=True)
class FundamentalHoleSet:
    holes: tuple[IntVector, ...]
    hilbert_basis: HilbertBasis
    basis_holes: tuple[IntVector, ...]

    def __iter__(self):
        return iter(self.holes)

    def __len__(self):
        return len(self.holes)


@dataclass(frozen=True)
class HoleCell:
    """shift + monoid(generators), a batch of holes with its provenance."""

    shift: IntVector
    generators: tuple[IntVector, ...]
    fundamental_hole: IntVector
    pair: StandardPair


@dataclass(frozen=True)
class HoleRepresentation:
    cells: tuple[HoleCell, ...]
    fundamental_set: FundamentalHoleSet

    @property
    def is_finite(self) -> bool:
        return all(not cell.generators for cell in self.cells)

    def enumerate_up_to(self, grading, cap) -> set[IntVector]:
        """All hole points with grading value below cap (for finite checks)."""
        points: set[IntVector] = set()
        for cell in self.cells:
            stack = [cell.shift]
            seen = {cell.shift}
            while stack:
                z = stack.pop()
                if vec_dot(grading, z) >= cap:
                    continue
                points.add(z)
                for g in cell.generators:
                    nxt = vec_add(z, g)
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
        return points


def is_hole(problem: SemigroupProblem, z, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Whether z is feasible over the reals and the lattice but not over Z_+."""
    z = tuple(int(x) for x in z)
    if not problem.in_cone(z):
        return False
    if problem.lattice.contains(z) is None:
        return False
    return semigroup_contains(problem.matrix, z, limits) is None


def _is_fundamental(problem: SemigroupProblem, z, limits: Limits) -> bool:
    # z (a hole) fails to be fundamental exactly when z minus some column
    # is again a hole: peeling one generator off a semigroup element of the
    # difference lands on a hole.
    seen = set()
    for column in problem.matrix.columns():
        if vec_is_zero(column) or column in seen:
            continue
        seen.add(column)
        v = vec_sub(z, column)
        if not problem.in_cone(v):
            continue
        if semigroup_contains(problem.matrix, v, limits) is None:
            return False
    return True


def fundamental_holes(problem: SemigroupProblem, limits: Limits = DEFAULT_LIMITS) -> FundamentalHoleSet:
    """The finite set of fundamental holes.

    Sped-up enumeration through the Hilbert basis B of the saturation:
    holes in B are fundamental, and every fundamental hole is a sum of
    them whose partial sums are themselves holes.  The layered sum search
    prunes non-holes and anything at or beyond the grading cap of the
    half-open zonotope, then keeps the sums passing the exact
    fundamentality test.
    """
    a = problem.matrix
    basis = hilbert_basis_cone_lattice(a, limits)
    basis_holes = tuple(sorted(
        b for b in basis.elements if semigroup_contains(a, b, limits) is None))
    if not basis_holes:
        return FundamentalHoleSet((), basis, ())
    grading = problem.grading
    cap = Fraction(0)
    for column in a.columns():
        if not vec_is_zero(column):
            cap += vec_dot(grading, column)
    queue = deque(basis_holes)
    visited = set(basis_holes)
    holes_found = list(basis_holes)
    while queue:
        z = queue.popleft()
        for b in basis_holes:
            y = vec_add(z, b)
            if y in visited:
                continue
            visited.add(y)
            if vec_dot(grading, y) >= cap:
                continue
            if semigroup_contains(a, y, limits) is None:
                holes_found.append(y)
                queue.append(y)
    fund = tuple(sorted(z for z in holes_found if _is_fundamental(problem, z, limits)))
    return FundamentalHoleSet(fund, basis, basis_holes)


def hole_ideal(problem: SemigroupProblem, f, limits: Limits = DEFAULT_LIMITS) -> MonomialIdeal:
    """The monomial ideal of exponents lam with f + A lam back in the
    semigroup; its standard monomials enumerate the holes above f."""
    f = tuple(int(x) for x in f)
    solutions = minimal_inhomogeneous_solutions(problem.matrix, f, limits)
    return MonomialIdeal.from_generators(problem.matrix.cols, solutions.lam_parts())


def holes_representation(problem: SemigroupProblem, limits: Limits = DEFAULT_LIMITS,
                         jobs: int = 1) -> HoleRepresentation:
    """Finite list of cells shift + monoid(gens) whose union is the hole set."""
    fund = fundamental_holes(problem, limits)
    a = problem.matrix
    ideals = _map_per_hole(problem, fund.holes, limits, jobs)
    cells = []
    for f, ideal in zip(fund.holes, ideals):
        for pair in standard_pairs(ideal, limits):
            shift = vec_add(f, a.mul_vector(pair.root))
            gens = tuple(sorted({a.col(j) for j in pair.free_vars
                                 if not vec_is_zero(a.col(j))}))
            cells.append(HoleCell(shift, gens, f, pair))
    cells.sort(key=lambda c: (c.shift, c.generators, c.fundamental_hole, c.pair.root))
    return HoleRepresentation(tuple(cells), fund)


def _hole_ideal_worker(args):
    entries, f, limits = args
    a = IntMatrix(entries)
    solutions = minimal_inhomogeneous_solutions(a, f, limits)
    return MonomialIdeal.from_generators(a.cols, solutions.lam_parts())


def _map_per_hole(problem: SemigroupProblem, holes, limits: Limits, jobs: int):
    if jobs <= 1 or len(holes) <= 1:
        return [hole_ideal(problem, f, limits) for f in holes]
    from concurrent.futures import ProcessPoolExecutor
    args = [(problem.matrix.entries, f, limits) for f in holes]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_hole_ideal_worker, args))
