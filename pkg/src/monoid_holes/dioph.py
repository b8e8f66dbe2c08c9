"""Hilbert bases and minimal solutions of linear Diophantine systems.

The engine is a layered completion search over Z^n_+ (Contejean-Devie
style): starting from the unit vectors, a state x is extended to x + e_i
only when the scalar product of its current value A x with the column A_i
is negative.  Every componentwise-minimal nonnegative solution of A x = 0
is reachable along such a path, and any state dominating a known solution
can be pruned, so the search is complete and terminates.  Optional upper
bounds restrict the search to a box without losing minimal solutions
inside it, which is how inhomogeneous systems are handled after
homogenization with an auxiliary variable capped at one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPointedError, ResourceLimitError
from .intlinalg import (
    IntMatrix,
    IntVector,
    lattice_basis,
    unit_vector,
    vec_add,
    vec_dot,
    vec_is_zero,
)
from .limits import DEFAULT_LIMITS, Limits
from .polyhedra import EQ, GE, InequalitySystem, cone_facets, is_pointed, lp_exact


@dataclass(frozen=True)
class HilbertBasis:
    """Minimal generating set of a monoid of solutions."""

    elements: tuple[IntVector, ...]
    system: str

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class MinimalSolutionSet:
    """Componentwise-minimal (lam, mu) solving rhs + A lam = A mu."""

    solutions: tuple[tuple[IntVector, IntVector], ...]
    rhs: IntVector

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def lam_parts(self) -> tuple[IntVector, ...]:
        return tuple(lam for lam, _ in self.solutions)


def _dominates(x, y) -> bool:
    # x >= y componentwise
    return all(a >= b for a, b in zip(x, y))


def _minimal_kernel_solutions(cols, upper=None, limits: Limits = DEFAULT_LIMITS,
                              stop=None):
    """Minimal nonzero x in Z^n_+ (x <= upper where bounded) with sum x_i cols[i] = 0.

    stop, when given, is a predicate on solutions; the search returns as
    soon as a solution satisfying it is found.  Returns (solutions, stopped).
    """
    n = len(cols)
    if n == 0:
        return [], False
    dim = len(cols[0])
    zero_value = (0,) * dim
    sols: list[IntVector] = []
    frontier: list[tuple[IntVector, tuple]] = []
    seen: set[IntVector] = set()
    for i in range(n):
        if upper is not None and upper[i] is not None and upper[i] < 1:
            continue
        x = unit_vector(n, i)
        frontier.append((x, cols[i]))
        seen.add(x)
    nodes = 0
    while frontier:
        next_frontier: list[tuple[IntVector, tuple]] = []
        for x, value in frontier:
            nodes += 1
            if nodes > limits.max_nodes:
                raise ResourceLimitError("completion search states", limits.max_nodes)
            if value == zero_value:
                if not any(_dominates(x, s) and x != s for s in sols):
                    sols.append(x)
                    if len(sols) > limits.max_basis:
                        raise ResourceLimitError("minimal solution count", limits.max_basis)
                    if stop is not None and stop(x):
                        return sols, True
                continue
            for i in range(n):
                if upper is not None and upper[i] is not None and x[i] >= upper[i]:
                    continue
                if vec_dot(value, cols[i]) >= 0:
                    continue
                y = x[:i] + (x[i] + 1,) + x[i + 1:]
                if y in seen:
                    continue
                seen.add(y)
                if any(_dominates(y, s) for s in sols):
                    continue
                next_frontier.append((y, vec_add(value, cols[i])))
        frontier = next_frontier
    # defensive minimalization; solutions of equal degree are incomparable,
    # so this is normally a no-op
    minimal = [s for s in sols if not any(_dominates(s, t) and s != t for t in sols)]
    return sorted(minimal), False


def hilbert_basis_kernel(a: IntMatrix, limits: Limits = DEFAULT_LIMITS) -> HilbertBasis:
    """Minimal Hilbert basis of {x in Z^n_+ : a @ x = 0}."""
    sols, _ = _minimal_kernel_solutions(a.columns(), limits=limits)
    return HilbertBasis(tuple(sols), f"kernel of {a.rows}x{a.cols} matrix")


def minimal_inhomogeneous_solutions(a: IntMatrix, f,
                                    limits: Limits = DEFAULT_LIMITS) -> MinimalSolutionSet:
    """All minimal (lam, mu) in Z^{2n}_+ with f + a@lam = a@mu.

    Computed on the homogenized system u*f + a@lam - a@mu = 0 with the
    auxiliary variable capped at one: the minimal solutions with u = 1 are
    exactly the minimal inhomogeneous pairs.
    """
    f = tuple(int(x) for x in f)
    if len(f) != a.rows:
        raise ValueError("inhomogeneous term has wrong dimension")
    n = a.cols
    cols = [f]
    cols += a.columns()
    cols += [tuple(-x for x in col) for col in a.columns()]
    upper = [1] + [None] * (2 * n)
    sols, _ = _minimal_kernel_solutions(cols, upper=upper, limits=limits)
    pairs = []
    for s in sols:
        if s[0] == 1:
            pairs.append((s[1:n + 1], s[n + 1:]))
    return MinimalSolutionSet(tuple(sorted(pairs)), f)


# ---------------------------------------------------------------------------
# semigroup membership

def _contains_nonneg(a: IntMatrix, b, limits: Limits) -> IntVector | None:
    """Branch-and-bound witness search for nonnegative matrices.

    Caps come from the rows: lam_j <= min over rows r with a[r][j] > 0 of
    resid_r // a[r][j]; branching picks the tightest variable first.
    """
    d, n = a.rows, a.cols
    cols = a.columns()
    active = [j for j in range(n) if not vec_is_zero(cols[j])]
    witness = [0] * n
    budget = [limits.max_nodes]

    def cap(j, resid):
        c = None
        col = cols[j]
        for r in range(d):
            if col[r] > 0:
                q = resid[r] // col[r]
                if c is None or q < c:
                    c = q
        return c

    def dfs(resid, remaining) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimitError("membership search nodes", limits.max_nodes)
        if all(x == 0 for x in resid):
            for j in remaining:
                witness[j] = 0
            return True
        if not remaining:
            return False
        for r in range(d):
            if resid[r] > 0 and all(cols[j][r] == 0 for j in remaining):
                return False
        caps = [(cap(j, resid), j) for j in remaining]
        best_cap, best = min(caps)
        if len(remaining) == 1:
            col = cols[best]
            r0 = next(r for r in range(d) if col[r] > 0)
            if resid[r0] % col[r0]:
                return False
            k = resid[r0] // col[r0]
            if all(resid[r] == k * col[r] for r in range(d)):
                witness[best] = k
                return True
            return False
        rest = [j for j in remaining if j != best]
        col = cols[best]
        for val in range(best_cap, -1, -1):
            witness[best] = val
            new_resid = tuple(x - val * c for x, c in zip(resid, col))
            if dfs(new_resid, rest):
                return True
        witness[best] = 0
        return False

    b = tuple(b)
    if any(x < 0 for x in b):
        return None
    if dfs(b, active):
        return tuple(witness)
    return None


def semigroup_contains(a: IntMatrix, b, limits: Limits = DEFAULT_LIMITS) -> IntVector | None:
    """Witness lam in Z^n_+ with a @ lam = b, or None when b is not in Q.

    Nonnegative matrices get a direct branch-and-bound with row-derived
    caps.  Mixed-sign matrices go through an LP feasibility check and then
    the completion search on the homogenized system, which stays correct
    even for non-pointed cones.
    """
    b = tuple(int(x) for x in b)
    if len(b) != a.rows:
        raise ValueError("vector dimension does not match matrix rows")
    if all(x == 0 for x in b):
        return (0,) * a.cols
    if a.is_nonnegative():
        return _contains_nonneg(a, b, limits)
    rows = [(row, EQ, b[i]) for i, row in enumerate(a.entries)]
    rows += [(unit_vector(a.cols, j), GE, 0) for j in range(a.cols)]
    relax = lp_exact(InequalitySystem.from_rows(rows), (0,) * a.cols, "min")
    if relax.status != "optimal":
        return None
    cols = [tuple(-x for x in b)] + a.columns()
    upper = [1] + [None] * a.cols
    sols, stopped = _minimal_kernel_solutions(
        cols, upper=upper, limits=limits, stop=lambda s: s[0] == 1)
    if stopped:
        return sols[-1][1:]
    for s in sols:
        if s[0] == 1:
            return s[1:]
    return None


# ---------------------------------------------------------------------------
# Hilbert basis of cone intersected with lattice

def _minimalize_generators(gens: list[IntVector], limits: Limits) -> list[IntVector]:
    """Drop generators expressible over the others (pointed monoid)."""
    keep = sorted(gens)
    changed = True
    while changed:
        changed = False
        for g in list(keep):
            others = [h for h in keep if h != g]
            if not others:
                continue
            matrix = IntMatrix.from_rows([list(row) for row in zip(*others)])
            if semigroup_contains(matrix, g, limits) is not None:
                keep.remove(g)
                changed = True
    return keep


def hilbert_basis_cone_lattice(a: IntMatrix, limits: Limits = DEFAULT_LIMITS) -> HilbertBasis:
    """Minimal Hilbert basis of cone(a) intersected with lattice(a).

    Works in lattice coordinates, where the monoid becomes the integer
    points of a full-dimensional pointed cone {t : B t >= 0}.  Writing
    t = p - q and s = B t turns it into the kernel problem
    B p - B q - s = 0 over nonnegative variables; projecting the kernel
    basis through (p, q, s) -> p - q yields a generating set, which is then
    minimalized.  Results are mapped back to ambient coordinates.
    """
    name = f"cone-and-lattice of {a.rows}x{a.cols} matrix"
    basis = lattice_basis(a)
    r = basis.rank
    if r == 0:
        return HilbertBasis((), name)
    coords = []
    seen = set()
    for column in a.columns():
        if vec_is_zero(column):
            continue
        c = basis.contains(column)
        assert c is not None
        if c not in seen:
            seen.add(c)
            coords.append(c)
    coord_matrix = IntMatrix.from_rows([list(row) for row in zip(*coords)])
    if not is_pointed(coord_matrix):
        raise NotPointedError("cone is not pointed; Hilbert basis is not finite")
    facets = cone_facets(coord_matrix, limits)
    ineq_rows = [row for row, sense in zip(facets.system.matrix, facets.system.senses)
                 if sense == GE]
    assert ineq_rows  # full-dimensional pointed cone has facets
    m = len(ineq_rows)
    kernel_cols: list[IntVector] = []
    for j in range(r):
        kernel_cols.append(tuple(row[j] for row in ineq_rows))
    for j in range(r):
        kernel_cols.append(tuple(-row[j] for row in ineq_rows))
    for k in range(m):
        kernel_cols.append(tuple(-1 if i == k else 0 for i in range(m)))
    sols, _ = _minimal_kernel_solutions(kernel_cols, limits=limits)
    gens = set()
    for s in sols:
        t = tuple(s[j] - s[r + j] for j in range(r))
        if not vec_is_zero(t):
            gens.add(t)
    minimal = _minimalize_generators(sorted(gens), limits)
    ambient = sorted(basis.from_coordinates(g) for g in minimal)
    return HilbertBasis(tuple(ambient), name)
