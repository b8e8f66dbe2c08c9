"""Hole-entry bound, infiniteness certification, and the Q-minimal
saturation points (elements whose translate of the whole saturation stays
inside the semigroup)."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product

from .dioph import semigroup_contains
from .errors import InternalInconsistencyError
from .holes import (
    HoleRepresentation,
    SemigroupProblem,
    _map_per_hole,
    fundamental_holes,
    holes_representation,
    is_hole,
)
from .intlinalg import (
    IntMatrix,
    IntVector,
    max_abs_subdeterminant,
    row_sum_bound,
    vec_add,
    vec_scale,
    vec_sub,
)
from .limits import DEFAULT_LIMITS, Limits
from .monomials import Monomial, MonomialIdeal, intersect, minimal_generators


@dataclass(frozen=True)
class BoundReport:
    """Ingredients and value of the finite-case hole-entry bound."""

    d_plus_1: int
    m_f: int
    d_a: int
    bound: int


@dataclass(frozen=True)
class SaturationResult:
    ideal: MonomialIdeal
    points: tuple[IntVector, ...]
    generator_map: tuple[tuple[Monomial, IntVector], ...]
    removed_by_filter: tuple[IntVector, ...]


def hole_bound(a: IntMatrix, limits: Limits = DEFAULT_LIMITS) -> BoundReport:
    """(d+1) * M^2 * D where M is the largest absolute row sum and D the
    largest maximal subdeterminant; every hole entry obeys it when the
    hole set is finite."""
    d_plus_1 = a.rows + 1
    m_f = row_sum_bound(a)
    d_a = max_abs_subdeterminant(a, limits)
    return BoundReport(d_plus_1, m_f, d_a, d_plus_1 * m_f * m_f * d_a)


def certify_infinite(problem: SemigroupProblem, limits: Limits = DEFAULT_LIMITS,
                     representation: HoleRepresentation | None = None) -> IntVector | None:
    """A verified hole violating the finite-case bound, or None.

    Walks the first cell of the hole representation that has a monoid
    direction far enough that some coordinate exceeds the bound; such a
    point proves the hole set is infinite.
    """
    report = hole_bound(problem.matrix, limits)
    rep = representation or holes_representation(problem, limits)
    for cell in rep.cells:
        if not cell.generators:
            continue
        g = cell.generators[0]
        i = next(k for k, x in enumerate(g) if x)
        steps = report.bound + abs(cell.shift[i]) + 1
        z = vec_add(cell.shift, vec_scale(steps, g))
        if max(abs(x) for x in z) <= report.bound:
            raise InternalInconsistencyError("constructed certificate does not exceed the bound")
        if not is_hole(problem, z, limits):
            raise InternalInconsistencyError("constructed certificate is not a hole")
        return z
    return None


def saturation_points(problem: SemigroupProblem, limits: Limits = DEFAULT_LIMITS,
                      jobs: int = 1) -> SaturationResult:
    """Q-minimal saturation points via the intersection of all hole ideals.

    The minimal generators of the intersection map onto the Q-minimal
    saturation points (possibly many-to-one).  A defensive Q-minimality
    filter double-checks that correspondence and is expected to remove
    nothing.
    """
    a = problem.matrix
    fund = fundamental_holes(problem, limits)
    ideal = MonomialIdeal.unit(a.cols)
    for per_hole in _map_per_hole(problem, fund.holes, limits, jobs):
        ideal = intersect(ideal, per_hole)
    gens = minimal_generators(ideal)
    generator_map = tuple(sorted((g, a.mul_vector(g)) for g in gens))
    points = sorted({point for _, point in generator_map})
    removed = []
    kept = []
    for s in points:
        reducible = any(
            s != t and semigroup_contains(a, vec_sub(s, t), limits) is not None
            for t in points
        )
        if reducible:
            removed.append(s)
        else:
            kept.append(s)
    if removed:
        warnings.warn(
            "saturation points required Q-minimality filtering; "
            "the generator correspondence was not minimal", stacklevel=2)
    return SaturationResult(ideal, tuple(kept), generator_map, tuple(removed))


def verify_saturation(problem: SemigroupProblem, s, box_radius: int = 0,
                      limits: Limits = DEFAULT_LIMITS) -> bool:
    """Desk-scale check that s + saturation stays inside the semigroup.

    Checks s itself, s plus every fundamental hole (sufficient in theory),
    and optionally every saturation point inside a coordinate box of the
    given radius.
    """
    s = tuple(int(x) for x in s)
    a = problem.matrix
    if semigroup_contains(a, s, limits) is None:
        return False
    fund = fundamental_holes(problem, limits)
    for f in fund.holes:
        if semigroup_contains(a, vec_add(s, f), limits) is None:
            return False
    if box_radius > 0:
        d = a.rows
        for z in product(range(box_radius + 1), repeat=d):
            if not problem.in_saturation(z):
                continue
            if semigroup_contains(a, vec_add(s, z), limits) is None:
                return False
    return True
