"""Three-dimensional transportation problems.

Constraint matrices for r x s x t tables with prescribed two-dimensional
margins, an exhaustive integer feasibility search with constraint
propagation and LP-relaxation pruning, and the verification pipeline that
certifies the classical 3 x 4 x 6 margin triple as a fundamental hole
whose translates form an infinite hole family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceLimitError
from .intlinalg import (
    IntMatrix,
    IntVector,
    RatVector,
    lattice_basis,
    solve_rational_affine,
    unit_vector,
    vec_add,
    vec_sub,
)
from .limits import DEFAULT_LIMITS, Limits
from .polyhedra import EQ, GE, InequalitySystem, lp_exact, maximize_each


@dataclass(frozen=True)
class TransportDims:
    r: int
    s: int
    t: int

    def __post_init__(self):
        if min(self.r, self.s, self.t) < 1:
            raise ValueError("table dimensions must be positive")

    @property
    def num_rows(self) -> int:
        return self.s * self.t + self.r * self.t + self.r * self.s

    @property
    def num_cols(self) -> int:
        return self.r * self.s * self.t

    def u_row(self, j: int, k: int) -> int:
        return j * self.t + k

    def v_row(self, i: int, k: int) -> int:
        return self.s * self.t + i * self.t + k

    def w_row(self, i: int, j: int) -> int:
        return self.s * self.t + self.r * self.t + i * self.s + j

    def col(self, i: int, j: int, k: int) -> int:
        return (i * self.s + j) * self.t + k

    def triples(self) -> list[tuple[int, int, int]]:
        return [(i, j, k) for i in range(self.r) for j in range(self.s) for k in range(self.t)]


@dataclass(frozen=True)
class MarginTriple:
    """Two-dimensional margins: u over (j,k), v over (i,k), w over (i,j)."""

    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]
    w: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, u, v, w) -> "MarginTriple":
        conv = lambda m: tuple(tuple(int(x) for x in row) for row in m)
        return cls(conv(u), conv(v), conv(w))

    def dims(self) -> TransportDims:
        s, t = len(self.u), len(self.u[0])
        r = len(self.v)
        d = TransportDims(r, s, t)
        if len(self.v[0]) != t or len(self.w) != r or len(self.w[0]) != s:
            raise ValueError("margin blocks have inconsistent shapes")
        return d

    def grand_totals(self) -> tuple[int, int, int]:
        total = lambda m: sum(sum(row) for row in m)
        return total(self.u), total(self.v), total(self.w)

    def is_consistent(self) -> bool:
        a, b, c = self.grand_totals()
        return a == b == c

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for m in (self.u, self.v, self.w) for row in m for x in row)


def transportation_matrix(dims: TransportDims) -> IntMatrix:
    """0/1 constraint matrix; rows are the u, v, w margin equations in that
    order, columns are the table cells (i,j,k) lexicographically."""
    d, n = dims.num_rows, dims.num_cols
    rows = [[0] * n for _ in range(d)]
    for (i, j, k) in dims.triples():
        c = dims.col(i, j, k)
        rows[dims.u_row(j, k)][c] = 1
        rows[dims.v_row(i, k)][c] = 1
        rows[dims.w_row(i, j)][c] = 1
    return IntMatrix.from_rows(rows)


def margins_to_vector(dims: TransportDims, m: MarginTriple) -> IntVector:
    out = [0] * dims.num_rows
    for j in range(dims.s):
        for k in range(dims.t):
            out[dims.u_row(j, k)] = m.u[j][k]
    for i in range(dims.r):
        for k in range(dims.t):
            out[dims.v_row(i, k)] = m.v[i][k]
    for i in range(dims.r):
        for j in range(dims.s):
            out[dims.w_row(i, j)] = m.w[i][j]
    return tuple(out)


def vector_to_margins(dims: TransportDims, f) -> MarginTriple:
    u = [[f[dims.u_row(j, k)] for k in range(dims.t)] for j in range(dims.s)]
    v = [[f[dims.v_row(i, k)] for k in range(dims.t)] for i in range(dims.r)]
    w = [[f[dims.w_row(i, j)] for j in range(dims.s)] for i in range(dims.r)]
    return MarginTriple.from_lists(u, v, w)


def table_margins(dims: TransportDims, table) -> MarginTriple:
    u = [[sum(table[i][j][k] for i in range(dims.r)) for k in range(dims.t)]
         for j in range(dims.s)]
    v = [[sum(table[i][j][k] for j in range(dims.s)) for k in range(dims.t)]
         for i in range(dims.r)]
    w = [[sum(table[i][j][k] for k in range(dims.t)) for j in range(dims.s)]
         for i in range(dims.r)]
    return MarginTriple.from_lists(u, v, w)


# ---------------------------------------------------------------------------
# the 3 x 4 x 6 instance with a fundamental hole

_VLACH_W = ((1, 1, 1, 1),
            (1, 1, 1, 1),
            (1, 1, 1, 1))

_VLACH_V = ((1, 1, 1, 1, 0, 0),
            (1, 1, 0, 0, 1, 1),
            (0, 0, 1, 1, 1, 1))

_VLACH_U = ((1, 0, 1, 0, 1, 0),
            (0, 1, 1, 0, 0, 1),
            (0, 1, 0, 1, 1, 0),
            (1, 0, 0, 1, 0, 1))

VLACH_DIMS = TransportDims(3, 4, 6)


def vlach_margins() -> MarginTriple:
    return MarginTriple(_VLACH_U, _VLACH_V, _VLACH_W)


def vlach_instance() -> tuple[IntMatrix, IntVector]:
    """The 3 x 4 x 6 constraint matrix and the margin vector that is real-
    but not integer-feasible."""
    dims = VLACH_DIMS
    return transportation_matrix(dims), margins_to_vector(dims, vlach_margins())


# ---------------------------------------------------------------------------
# integer feasibility for margin triples

class _TableSearch:
    """Exhaustive DFS over table cells with constraint propagation.

    Propagation closes under: exhausted lines force zeros, single-cell
    lines force the remaining budget, and a line budget must be reachable
    by the capacities of its unassigned cells.  An exact LP relaxation of
    the remaining system runs every lp_stride assignments.
    """

    def __init__(self, dims: TransportDims, margins: MarginTriple, limits: Limits):
        self.dims = dims
        self.limits = limits
        self.n = dims.num_cols
        self.d = dims.num_rows
        self.cell_lines = []
        for (i, j, k) in dims.triples():
            self.cell_lines.append((dims.u_row(j, k), dims.v_row(i, k), dims.w_row(i, j)))
        self.line_cells: list[list[int]] = [[] for _ in range(self.d)]
        for c, lines in enumerate(self.cell_lines):
            for ln in lines:
                self.line_cells[ln].append(c)
        f = margins_to_vector(dims, margins)
        self.budget = list(f)
        self.pending = [len(cells) for cells in self.line_cells]
        self.value: list[int | None] = [None] * self.n
        self.trail: list[int] = []
        self.nodes = 0
        self.last_lp = 0

    # -- assignment machinery -------------------------------------------

    def _assign(self, cell: int, val: int) -> bool:
        # always updates all three lines so that undo stays symmetric
        self.value[cell] = val
        self.trail.append(cell)
        ok = True
        for ln in self.cell_lines[cell]:
            self.budget[ln] -= val
            self.pending[ln] -= 1
            if self.budget[ln] < 0:
                ok = False
        return ok

    def _undo_to(self, mark: int):
        while len(self.trail) > mark:
            cell = self.trail.pop()
            val = self.value[cell]
            self.value[cell] = None
            for ln in self.cell_lines[cell]:
                self.budget[ln] += val
                self.pending[ln] += 1

    def _cell_cap(self, cell: int) -> int:
        return min(self.budget[ln] for ln in self.cell_lines[cell])

    def _propagate(self) -> bool:
        changed = True
        while changed:
            changed = False
            for ln in range(self.d):
                pend = self.pending[ln]
                if pend == 0:
                    if self.budget[ln] != 0:
                        return False
                    continue
                if self.budget[ln] == 0:
                    for c in self.line_cells[ln]:
                        if self.value[c] is None:
                            if not self._assign(c, 0):
                                return False
                    changed = True
                elif pend == 1:
                    c = next(c for c in self.line_cells[ln] if self.value[c] is None)
                    need = self.budget[ln]
                    if need > self._cell_cap(c):
                        return False
                    if not self._assign(c, need):
                        return False
                    changed = True
        # capacity check: each line must be fillable by its remaining cells
        for ln in range(self.d):
            if self.pending[ln] == 0:
                continue
            room = 0
            for c in self.line_cells[ln]:
                if self.value[c] is None:
                    room += self._cell_cap(c)
                    if room >= self.budget[ln]:
                        break
            if room < self.budget[ln]:
                return False
        return True

    def _lp_prune(self) -> bool:
        """True when the remaining real relaxation is feasible."""
        free = [c for c in range(self.n) if self.value[c] is None]
        if not free:
            return True
        index = {c: pos for pos, c in enumerate(free)}
        rows = []
        for ln in range(self.d):
            coeffs = [0] * len(free)
            any_free = False
            for c in self.line_cells[ln]:
                if c in index:
                    coeffs[index[c]] = 1
                    any_free = True
            if any_free or self.budget[ln] != 0:
                rows.append((tuple(coeffs), EQ, self.budget[ln]))
        for pos in range(len(free)):
            rows.append((unit_vector(len(free), pos), GE, 0))
        result = lp_exact(InequalitySystem.from_rows(rows), (0,) * len(free), "min")
        return result.status == "optimal"

    # -- search -----------------------------------------------------------

    def search(self) -> list[int] | None:
        self.nodes += 1
        if self.nodes > self.limits.max_nodes:
            raise ResourceLimitError("table search nodes", self.limits.max_nodes)
        mark = len(self.trail)
        if not self._propagate():
            self._undo_to(mark)
            return None
        if len(self.trail) - self.last_lp >= self.limits.lp_stride:
            self.last_lp = len(self.trail)
            if not self._lp_prune():
                self._undo_to(mark)
                self.last_lp = min(self.last_lp, len(self.trail))
                return None
        cell = next((c for c in range(self.n) if self.value[c] is None), None)
        if cell is None:
            return list(self.value)
        for val in range(self._cell_cap(cell), -1, -1):
            inner = len(self.trail)
            ok = self._assign(cell, val)
            if ok:
                result = self.search()
                if result is not None:
                    return result
            self._undo_to(inner)
            self.last_lp = min(self.last_lp, len(self.trail))
        self._undo_to(mark)
        self.last_lp = min(self.last_lp, len(self.trail))
        return None


def table_feasible(dims: TransportDims, margins: MarginTriple,
                   limits: Limits = DEFAULT_LIMITS):
    """An integer table with the given margins, or None when none exists.

    Tables come back as nested (r, s, t) tuples.  Raises ResourceLimitError
    rather than guessing when the node budget runs out.
    """
    if margins.dims() != dims:
        raise ValueError("margins do not match the stated dimensions")
    if not margins.is_nonnegative() or not margins.is_consistent():
        return None
    flat = _TableSearch(dims, margins, limits).search()
    if flat is None:
        return None
    return tuple(
        tuple(tuple(flat[dims.col(i, j, k)] for k in range(dims.t))
              for j in range(dims.s))
        for i in range(dims.r))


# ---------------------------------------------------------------------------
# the verification pipeline for the 3 x 4 x 6 hole

@dataclass(frozen=True)
class VlachConclusions:
    f_is_hole: bool
    f_is_fundamental_checked: bool
    unique_real_solution: bool
    holes_are_f_plus_monoid_a_prime: bool

    def all_true(self) -> bool:
        return (self.f_is_hole and self.f_is_fundamental_checked
                and self.unique_real_solution and self.holes_are_f_plus_monoid_a_prime)


@dataclass(frozen=True)
class VlachReport:
    f: IntVector
    z_star: RatVector | None
    support: tuple[tuple[int, int, int], ...]
    a_prime: IntMatrix | None
    non_hole_witnesses: tuple[tuple[tuple[int, int, int], IntVector], ...]
    conclusions: VlachConclusions
    diagnostics: tuple[str, ...]


def _feasibility_system(a: IntMatrix, b) -> InequalitySystem:
    rows = [(a.entries[i], EQ, b[i]) for i in range(a.rows)]
    rows += [(unit_vector(a.cols, j), GE, 0) for j in range(a.cols)]
    return InequalitySystem.from_rows(rows)


def _witness_worker(args):
    dims, margins, limits = args
    return table_feasible(dims, margins, limits)


def _map_witness_searches(dims: TransportDims, margin_list, limits: Limits, jobs: int):
    tasks = [(dims, m, limits) for m in margin_list]
    if jobs <= 1 or len(tasks) <= 1:
        return [_witness_worker(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_witness_worker, tasks))


def verify_vlach(limits: Limits = DEFAULT_LIMITS, jobs: int = 1) -> VlachReport:
    """Re-derive every claim about the 3 x 4 x 6 hole mechanically.

    Steps: find the unique real point of the margin polytope and its
    half-integral support; certify uniqueness by the support rank and the
    48 off-support coordinate maxima; conclude the margin vector is a hole;
    check fundamentality column by column; produce integer witnesses for
    the 48 incremented-margin systems; and confirm the remaining holes are
    exactly the support-column translates.
    """
    dims = VLACH_DIMS
    a, f = vlach_instance()
    diagnostics: list[str] = []

    system = _feasibility_system(a, f)
    feas = lp_exact(system, (0,) * a.cols, "min")
    if feas.status != "optimal":
        return VlachReport(f, None, (), None, (),
                           VlachConclusions(False, False, False, False),
                           ("margin system is not real feasible",))
    z_star = feas.witness
    half = Fraction(1, 2)
    support_cols = tuple(c for c, x in enumerate(z_star) if x != 0)
    off_support = tuple(c for c, x in enumerate(z_star) if x == 0)
    triples = dims.triples()
    support = tuple(triples[c] for c in support_cols)
    half_integral = all(x in (0, half) for x in z_star)
    if len(support_cols) != 24 or not half_integral:
        diagnostics.append("real witness is not the expected half-integral point")

    a_prime = IntMatrix.from_rows([[a.entries[i][c] for c in support_cols]
                                   for i in range(a.rows)])

    # uniqueness: support columns are independent and every off-support
    # coordinate has maximum zero over the polytope
    unique = True
    solved = solve_rational_affine(a_prime, f)
    if solved is None or solved[1]:
        unique = False
        diagnostics.append("support columns are rank deficient")
    else:
        if tuple(solved[0]) != tuple(z_star[c] for c in support_cols):
            diagnostics.append("support solve disagrees with the LP witness")
            unique = False
    objectives = [unit_vector(a.cols, c) for c in off_support]
    maxima = maximize_each(system, objectives)
    for c, res in zip(off_support, maxima):
        if res.status != "optimal" or res.optimum != 0:
            unique = False
            diagnostics.append(f"off-support coordinate {triples[c]} is not fixed to zero")

    in_lattice = lattice_basis(a).contains(f) is not None
    if not in_lattice:
        diagnostics.append("margin vector is not in the matrix lattice")
    fractional = any(x.denominator != 1 for x in z_star)
    f_is_hole = unique and fractional and in_lattice

    # the hole ideal is generated by the off-support variables:
    # each zero-margin row wipes out the off-support coordinates of any
    # candidate, and the support block pins the difference to the
    # half-integral point, so no translate by support columns returns to
    # the semigroup
    zero_rows = [i for i in range(a.rows) if f[i] == 0]
    cover_ok = all(any(a.entries[i][c] for i in zero_rows) for c in off_support)
    if not cover_ok:
        diagnostics.append("zero margins do not pin every off-support coordinate")
    support_clear = all(all(a.entries[i][c] == 0 for i in zero_rows) for c in support_cols)
    if not support_clear:
        diagnostics.append("a support column meets a zero margin")
    all_fractional = all(x == half for x in (z_star[c] for c in support_cols))
    holes_flag = f_is_hole and cover_ok and support_clear and unique and all_fractional

    # fundamentality: f is non-fundamental exactly when f minus some column
    # is again a hole, so every real-feasible difference disqualifies f
    # (an integer-feasible one would contradict f being a hole at all)
    fundamental = True
    for c, triple in enumerate(triples):
        reduced = vec_sub(f, a.col(c))
        if any(x < 0 for x in reduced):
            continue
        sub_feas = lp_exact(_feasibility_system(a, reduced), (0,) * a.cols, "min")
        if sub_feas.status != "optimal":
            continue
        witness = table_feasible(dims, vector_to_margins(dims, reduced), limits)
        if witness is None:
            fundamental = False
            diagnostics.append(f"margin vector minus column {triple} is itself a hole")
        else:
            fundamental = False
            diagnostics.append(f"margin vector minus column {triple} lies in the semigroup, "
                               "contradicting the hole certificate")

    # explicit witnesses: every off-support increment is integer feasible
    witnesses = []
    witnesses_ok = True
    incremented_vectors = [vec_add(f, a.col(c)) for c in off_support]
    tables = _map_witness_searches(
        dims, [vector_to_margins(dims, v) for v in incremented_vectors], limits, jobs)
    for c, incremented, table in zip(off_support, incremented_vectors, tables):
        if table is None:
            witnesses_ok = False
            diagnostics.append(f"no integer witness for incremented margins at {triples[c]}")
            continue
        mu = tuple(table[i][j][k] for (i, j, k) in triples)
        if a.mul_vector(mu) != incremented:
            witnesses_ok = False
            diagnostics.append(f"witness margins mismatch at {triples[c]}")
            continue
        witnesses.append((triples[c], mu))

    conclusions = VlachConclusions(
        f_is_hole=f_is_hole,
        f_is_fundamental_checked=f_is_hole and fundamental,
        unique_real_solution=unique,
        holes_are_f_plus_monoid_a_prime=holes_flag and witnesses_ok,
    )
    return VlachReport(f, z_star, support, a_prime, tuple(witnesses),
                       conclusions, tuple(diagnostics))
