"""Exact rational polyhedral computations.

Facet descriptions of finitely generated cones (double description on the
dual), pointedness, a two-phase exact simplex with Bland's anti-cycling
rule, and membership in the half-open zonotope spanned by matrix columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPointedError, ResourceLimitError
from .intlinalg import (
    IntMatrix,
    IntVector,
    RatVector,
    lattice_basis,
    primitive_vector,
    rational_rank,
    rational_to_primitive_int,
    solve_rational_affine,
    unit_vector,
    vec_dot,
    vec_is_zero,
)
from .limits import DEFAULT_LIMITS, Limits

GE = "ge"
EQ = "eq"


@dataclass(frozen=True)
class InequalitySystem:
    """Rows a.x >= rhs or a.x = rhs over free rational variables."""

    matrix: tuple[tuple, ...]
    senses: tuple[str, ...]
    rhs: tuple

    def __post_init__(self):
        if not (len(self.matrix) == len(self.senses) == len(self.rhs)):
            raise ValueError("row count mismatch between matrix, senses and rhs")
        width = len(self.matrix[0]) if self.matrix else 0
        for row in self.matrix:
            if len(row) != width:
                raise ValueError("ragged constraint rows")
            for x in row:
                if not isinstance(x, (int, Fraction)):
                    raise TypeError("constraint coefficients must be int or Fraction")
        for s in self.senses:
            if s not in (GE, EQ):
                raise ValueError(f"unknown sense {s!r}")
        for x in self.rhs:
            if not isinstance(x, (int, Fraction)):
                raise TypeError("rhs entries must be int or Fraction")

    @classmethod
    def from_rows(cls, rows) -> "InequalitySystem":
        mat, senses, rhs = [], [], []
        for coeffs, sense, b in rows:
            mat.append(tuple(coeffs))
            senses.append(sense)
            rhs.append(b)
        return cls(tuple(mat), tuple(senses), tuple(rhs))

    @property
    def num_vars(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @property
    def num_rows(self) -> int:
        return len(self.matrix)

    def satisfied_by(self, x) -> bool:
        for row, sense, b in zip(self.matrix, self.senses, self.rhs):
            v = vec_dot(row, x)
            if sense == EQ and v != b:
                return False
            if sense == GE and v < b:
                return False
        return True


@dataclass(frozen=True)
class LPResult:
    status: str                 # "optimal" | "infeasible" | "unbounded"
    optimum: Fraction | None
    witness: RatVector | None


@dataclass(frozen=True)
class ConeFacets:
    """Facet description of a finitely generated cone.

    system rows with sense "eq" cut out the linear span, rows with sense
    "ge" are the facets within it; all rows are primitive integer vectors
    with zero right-hand side.
    """

    system: InequalitySystem
    lineality_dim: int


# ---------------------------------------------------------------------------
# exact two-phase simplex

class _Standardized:
    """Standard-form image of an InequalitySystem: A x = b, x >= 0, b >= 0."""

    def __init__(self, system: InequalitySystem):
        n = system.num_vars
        nonneg = [False] * n
        main = []
        for coeffs, sense, b in zip(system.matrix, system.senses, system.rhs):
            if sense == GE and b == 0:
                support = [(j, c) for j, c in enumerate(coeffs) if c != 0]
                if len(support) == 1 and support[0][1] > 0:
                    nonneg[support[0][0]] = True
                    continue
            main.append((coeffs, sense, b))

        # column j of the standard form carries (original var, sign)
        self.col_map: list[tuple[int, int]] = []
        var_cols: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for v in range(n):
            var_cols[v].append((len(self.col_map), 1))
            self.col_map.append((v, 1))
            if not nonneg[v]:
                var_cols[v].append((len(self.col_map), -1))
                self.col_map.append((v, -1))
        surplus_start = len(self.col_map)
        num_surplus = sum(1 for _, sense, _ in main if sense == GE)

        self.ncols = surplus_start + num_surplus
        self.rows: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        s_idx = surplus_start
        for coeffs, sense, b in main:
            row = [Fraction(0)] * self.ncols
            for v, c in enumerate(coeffs):
                if c:
                    for col, sign in var_cols[v]:
                        row[col] = Fraction(sign * c)
            if sense == GE:
                row[s_idx] = Fraction(-1)
                s_idx += 1
            b = Fraction(b)
            if b < 0:
                row = [-x for x in row]
                b = -b
            self.rows.append(row)
            self.rhs.append(b)
        self.num_main = len(self.rows)
        self.num_vars = n

    def original_point(self, x: list[Fraction]) -> RatVector:
        out = [Fraction(0)] * self.num_vars
        for col, (v, sign) in enumerate(self.col_map):
            if x[col]:
                out[v] += sign * x[col]
        return tuple(out)


def _pivot(tab, zrow, basis, leave, enter):
    pivot_row = tab[leave]
    pv = pivot_row[enter]
    if pv != 1:
        tab[leave] = pivot_row = [x / pv for x in pivot_row]
    for i, row in enumerate(tab):
        if i != leave and row[enter]:
            f = row[enter]
            tab[i] = [x - f * y for x, y in zip(row, pivot_row)]
    if zrow[enter]:
        f = zrow[enter]
        zrow[:] = [x - f * y for x, y in zip(zrow, pivot_row)]
    basis[leave] = enter


def _run_simplex(tab, basis, cost, allowed_cols):
    """Minimize cost over the tableau in place. Bland's rule throughout."""
    zrow = list(cost) + [Fraction(0)]
    for i, bi in enumerate(basis):
        if cost[bi]:
            cb = cost[bi]
            zrow = [x - cb * y for x, y in zip(zrow, tab[i])]
    m = len(tab)
    while True:
        enter = None
        for j in allowed_cols:
            if zrow[j] < 0:
                enter = j
                break
        if enter is None:
            return "optimal", zrow
        leave = None
        best_ratio = None
        best_var = None
        for i in range(m):
            tij = tab[i][enter]
            if tij > 0:
                ratio = tab[i][-1] / tij
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < best_var
                ):
                    best_ratio, best_var, leave = ratio, basis[i], i
        if leave is None:
            return "unbounded", zrow
        _pivot(tab, zrow, basis, leave, enter)


class _Phase1:
    """Feasible tableau (phase 1 already solved) for one constraint system."""

    def __init__(self, system: InequalitySystem):
        std = _Standardized(system)
        ncols = std.ncols
        m = std.num_main
        art = list(range(ncols, ncols + m))
        tab = []
        for i in range(m):
            row = std.rows[i] + [Fraction(0)] * m + [std.rhs[i]]
            row[ncols + i] = Fraction(1)
            tab.append(row)
        basis = art[:]
        cost = [Fraction(0)] * ncols + [Fraction(1)] * m
        status, zrow = _run_simplex(tab, basis, cost, range(ncols + m))
        assert status == "optimal"  # phase 1 objective is bounded below by 0
        if -zrow[-1] != 0:
            self.feasible = False
            return
        self.feasible = True
        # drive artificials out of the basis, dropping redundant rows
        keep = []
        for i in range(len(tab)):
            if basis[i] >= ncols:
                enter = next((j for j in range(ncols) if tab[i][j] != 0), None)
                if enter is None:
                    continue  # redundant row
                dummy = [Fraction(0)] * (len(tab[i]))
                _pivot(tab, dummy, basis, i, enter)
            keep.append(i)
        tab = [tab[i][:ncols] + [tab[i][-1]] for i in keep]
        basis = [basis[i] for i in keep]
        self.std = std
        self.tab = tab
        self.basis = basis
        self.ncols = ncols

    def solve(self, objective, sense: str) -> LPResult:
        """Phase 2 for one objective; leaves the stored tableau untouched."""
        std = self.std
        sign = 1 if sense == "min" else -1
        cost = [Fraction(0)] * self.ncols
        for v, c in enumerate(objective):
            if c:
                for col, (ov, s) in enumerate(std.col_map):
                    if ov == v:
                        cost[col] += sign * s * Fraction(c)
        tab = [row[:] for row in self.tab]
        basis = self.basis[:]
        status, zrow = _run_simplex(tab, basis, cost, range(self.ncols))
        x = [Fraction(0)] * self.ncols
        for i, bi in enumerate(basis):
            x[bi] = tab[i][-1]
        witness = std.original_point(x)
        if status == "unbounded":
            return LPResult("unbounded", None, witness)
        value = -zrow[-1]
        return LPResult("optimal", sign * value, witness)


def lp_exact(system: InequalitySystem, objective, sense: str = "min") -> LPResult:
    """Exact rational LP over the system's free variables.

    Rows of the shape x_i >= 0 are recognized as sign constraints; all other
    variables are handled as differences of nonnegatives.
    """
    if sense not in ("min", "max"):
        raise ValueError("sense must be 'min' or 'max'")
    if len(objective) != system.num_vars:
        raise ValueError("objective length does not match variable count")
    phase1 = _Phase1(system)
    if not phase1.feasible:
        return LPResult("infeasible", None, None)
    return phase1.solve(objective, sense)


def maximize_each(system: InequalitySystem, objectives) -> list[LPResult]:
    """Maximize several objectives over one feasible region, sharing phase 1."""
    phase1 = _Phase1(system)
    if not phase1.feasible:
        return [LPResult("infeasible", None, None) for _ in objectives]
    return [phase1.solve(obj, "max") for obj in objectives]


# ---------------------------------------------------------------------------
# double description: extreme rays of a dual cone

def _tight_set(vector, cols, upto) -> frozenset[int]:
    return frozenset(p for p in range(upto) if vec_dot(vector, cols[p]) == 0)


def _extreme_rays_dual(cols: list[IntVector], dim: int, limits: Limits) -> list[IntVector]:
    """Extreme rays of {y : y.c >= 0 for all c in cols}.

    Incremental double description starting from full space; the caller
    guarantees cols spans R^dim so the result is a pointed cone and the
    lineality shrinks to zero.
    """
    lin: list[IntVector] = [unit_vector(dim, i) for i in range(dim)]
    rays: list[IntVector] = []
    for idx, a in enumerate(cols):
        lin_vals = [vec_dot(l, a) for l in lin]
        if any(lin_vals):
            k = next(i for i, v in enumerate(lin_vals) if v)
            l0, v0 = lin[k], lin_vals[k]
            if v0 < 0:
                l0, v0 = tuple(-x for x in l0), -v0
            new_lin = []
            for i, l in enumerate(lin):
                if i == k:
                    continue
                v = vec_dot(l, a)
                new_lin.append(primitive_vector(tuple(v0 * x - v * y for x, y in zip(l, l0))))
            new_rays = []
            for r in rays:
                v = vec_dot(r, a)
                new_rays.append(primitive_vector(tuple(v0 * x - v * y for x, y in zip(r, l0))))
            new_rays.append(primitive_vector(l0))
            lin, rays = new_lin, new_rays
        else:
            vals = [vec_dot(r, a) for r in rays]
            pos = [r for r, v in zip(rays, vals) if v > 0]
            zer = [r for r, v in zip(rays, vals) if v == 0]
            neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
            if neg:
                tights = {r: _tight_set(r, cols, idx) for r in rays}
                combos = []
                for rp in pos:
                    vp = vec_dot(rp, a)
                    for rn, vn in neg:
                        common = tights[rp] & tights[rn]
                        adjacent = True
                        for other in rays:
                            if other == rp or other == rn:
                                continue
                            if common <= tights[other]:
                                adjacent = False
                                break
                        if adjacent:
                            combo = tuple(vp * x - vn * y for x, y in zip(rn, rp))
                            combos.append(primitive_vector(combo))
                rays = pos + zer + combos
        # lineality projection and combinations can produce repeats or the
        # zero vector; both would poison the adjacency test
        cleaned = []
        seen_now = set()
        for r in rays:
            if vec_is_zero(r) or r in seen_now:
                continue
            seen_now.add(r)
            cleaned.append(r)
        rays = cleaned
        if len(rays) > limits.max_rays:
            raise ResourceLimitError("intermediate rays in facet enumeration", limits.max_rays)
    if lin:
        raise NotPointedError("dual cone has lineality; input columns do not span")
    seen = set()
    out = []
    for r in sorted(rays):
        if r not in seen and not vec_is_zero(r):
            seen.add(r)
            out.append(r)
    return out


# ---------------------------------------------------------------------------
# cone descriptions

def _nonzero_columns(a: IntMatrix) -> list[IntVector]:
    # zero columns generate nothing; dropping them avoids degenerate rays
    seen = set()
    out = []
    for column in a.columns():
        if vec_is_zero(column) or column in seen:
            continue
        seen.add(column)
        out.append(column)
    return out


def cone_facets(a: IntMatrix, limits: Limits = DEFAULT_LIMITS) -> ConeFacets:
    """Inequality description of the cone generated by the columns of a.

    Equality rows pin the linear span, inequality rows are the facets of
    the cone inside its span; together {z : rows hold} equals cone(a).
    """
    d = a.rows
    cols = _nonzero_columns(a)
    if not cols:
        rows = [(unit_vector(d, i), EQ, 0) for i in range(d)]
        return ConeFacets(InequalitySystem.from_rows(rows), 0)

    span = lattice_basis(a)
    r = span.rank
    coords = []
    for column in cols:
        c = span.contains(column)
        assert c is not None  # columns lie in their own lattice
        coords.append(c)

    rays = _extreme_rays_dual(coords, r, limits)

    # equalities: basis of the left kernel of a, as primitive integer rows
    solved = solve_rational_affine(a.transpose(), (0,) * a.cols)
    assert solved is not None
    _, kernel = solved
    eq_rows = []
    for vec in kernel:
        row = rational_to_primitive_int(vec)
        first = next((x for x in row if x), None)
        if first is not None and first < 0:
            row = tuple(-x for x in row)
        eq_rows.append(row)

    # lift each dual ray g through the span parameterization z = B t:
    # wanted is w with B^T w = g, so that w.z = g.t on the span
    basis_rows = IntMatrix.from_rows(span.columns)  # rank x d, rows are basis columns
    ineq_rows = []
    for g in rays:
        lifted = solve_rational_affine(basis_rows, g)
        assert lifted is not None  # basis has full column rank
        ineq_rows.append(rational_to_primitive_int(lifted[0]))

    rows = [(row, EQ, 0) for row in sorted(eq_rows)]
    rows += [(row, GE, 0) for row in sorted(ineq_rows)]
    lineality = r - rational_rank(rays) if rays else r
    return ConeFacets(InequalitySystem.from_rows(rows), lineality)


def is_pointed(a: IntMatrix) -> bool:
    """Whether cone(a) contains no line."""
    cols = _nonzero_columns(a)
    if not cols:
        return True
    if a.is_nonnegative():
        return True
    try:
        positive_functional(a)
        return True
    except NotPointedError:
        return False


def positive_functional(a: IntMatrix) -> RatVector:
    """A rational y with y.col >= 1 for every nonzero column of a.

    Exists exactly when cone(a) is pointed; used as a termination grading.
    """
    d = a.rows
    cols = _nonzero_columns(a)
    if not cols:
        return tuple(Fraction(1) for _ in range(d))
    if a.is_nonnegative():
        return tuple(Fraction(1) for _ in range(d))
    rows = [(col, GE, 1) for col in cols]
    result = lp_exact(InequalitySystem.from_rows(rows), (0,) * d, "min")
    if result.status != "optimal":
        raise NotPointedError("cone contains a line; no strictly positive functional")
    return result.witness


def in_half_open_zonotope(a: IntMatrix, z, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Whether z = a @ lam for some 0 <= lam with every lam_i < 1.

    Decided by the exact LP minimizing the largest coefficient: the strict
    inequalities hold iff the min-max optimum over the closed box is < 1.
    """
    if len(z) != a.rows:
        raise ValueError("vector dimension does not match matrix rows")
    for x in z:
        if not isinstance(x, int):
            raise TypeError("half-open zonotope membership is defined for integer points")
    n = a.cols
    rows = []
    for i in range(a.rows):
        rows.append((tuple(a.entries[i]) + (0,), EQ, z[i]))
    for j in range(n):
        rows.append((unit_vector(n + 1, j), GE, 0))
    for j in range(n):
        coeffs = tuple(-1 if k == j else (1 if k == n else 0) for k in range(n + 1))
        rows.append((coeffs, GE, 0))
    rows.append((tuple(0 if k < n else -1 for k in range(n + 1)), GE, -1))
    objective = tuple(0 if k < n else 1 for k in range(n + 1))
    result = lp_exact(InequalitySystem.from_rows(rows), objective, "min")
    return result.status == "optimal" and result.optimum < 1
