"""Exact linear programming over the rationals.

A small two-phase tableau simplex with Bland's rule.  Every number is a
Fraction, so termination is guaranteed and results are exact.  Problems are
stated over free variables with rows ``a . x >= b`` and ``a . x == b``.

For bounded feasible problems over a pointed region the witness point is
refined to a vertex of the optimal face (hence a vertex of the region) by a
deterministic tight-row pursuit; if a line is detected during refinement the
optimal point is returned as-is.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import DimensionMismatch
from .rationals import Fraction, Vec, is_zero_vec, vec_add, vec_dot, vec_scale, zero_vec

Row = tuple[Vec, Fraction]


class LpStatus(Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    value: Optional[Fraction]
    point: Optional[Vec]
    ray: Optional[Vec]

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL

    @property
    def is_feasible(self) -> bool:
        return self.status is not LpStatus.INFEASIBLE


def gaussian_rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def nullspace_basis(rows: Sequence[Vec], dim: int) -> list[Vec]:
    """Deterministic basis of {d : a . d == 0 for every row a}."""
    reduced, pivots = gaussian_rref([list(r) for r in rows]) if rows else ([], [])
    pivot_set = set(pivots)
    basis: list[Vec] = []
    for free in range(dim):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * dim
        vec[free] = Fraction(1)
        for row, piv in zip(reduced, pivots):
            vec[piv] = -row[free]
        basis.append(tuple(vec))
    return basis


def span_membership(target: Vec, generators: Sequence[Vec]) -> Optional[tuple[Fraction, ...]]:
    """Coefficients expressing target as a linear combination of generators,
    or None when target is outside their span.  Free coefficients are 0."""
    dim = len(target)
    for g in generators:
        if len(g) != dim:
            raise DimensionMismatch("span_membership: generator dimension mismatch")
    if is_zero_vec(target):
        return (Fraction(0),) * len(generators)
    if not generators:
        return None
    augmented = [[g[i] for g in generators] + [target[i]] for i in range(dim)]
    reduced, pivots = gaussian_rref(augmented)
    k = len(generators)
    coeffs = [Fraction(0)] * k
    for row, piv in zip(reduced, pivots):
        if piv == k:
            return None
        coeffs[piv] = row[k]
    return tuple(coeffs)


class _Tableau:
    """Dense simplex tableau. Columns are u (n), w (n), surplus (one per
    inequality); x == u - w. Artificials live past ncols during phase 1."""

    def __init__(self, objective: Vec, ineqs: Sequence[Row], eqs: Sequence[Row]):
        self.n = len(objective)
        self.objective = objective
        self.ineqs = list(ineqs)
        self.eqs = list(eqs)
        self.ncols = 2 * self.n + len(self.ineqs)
        rows: list[list[Fraction]] = []
        for idx, (a, b) in enumerate(self.ineqs):
            row = list(a) + [-x for x in a] + [Fraction(0)] * len(self.ineqs) + [b]
            row[2 * self.n + idx] = Fraction(-1)
            rows.append(row)
        for a, b in self.eqs:
            rows.append(list(a) + [-x for x in a] + [Fraction(0)] * len(self.ineqs) + [b])
        for row in rows:
            if row[-1] < 0:
                for i in range(len(row)):
                    row[i] = -row[i]
        self.rows = rows
        self.basis: list[int] = []

    def _pivot(self, r: int, c: int, cost: list[Fraction]) -> None:
        pivot_row = self.rows[r]
        pv = pivot_row[c]
        self.rows[r] = [x / pv for x in pivot_row]
        pivot_row = self.rows[r]
        for i in range(len(self.rows)):
            if i != r and self.rows[i][c] != 0:
                f = self.rows[i][c]
                self.rows[i] = [x - f * y for x, y in zip(self.rows[i], pivot_row)]
        if cost[c] != 0:
            f = cost[c]
            for j in range(len(cost)):
                cost[j] -= f * pivot_row[j]
        self.basis[r] = c

    def _reduced_costs(self, var_costs: list[Fraction]) -> list[Fraction]:
        width = len(self.rows[0]) if self.rows else len(var_costs) + 1
        cost = list(var_costs) + [Fraction(0)] * (width - len(var_costs))
        for r, b in enumerate(self.basis):
            cb = var_costs[b] if b < len(var_costs) else Fraction(0)
            if cb != 0:
                cost = [x - cb * y for x, y in zip(cost, self.rows[r])]
        return cost

    def _run_simplex(self, cost: list[Fraction], allowed_cols: int) -> Optional[int]:
        """Bland iterations until optimal (None) or unbounded (entering col)."""
        while True:
            entering = None
            for j in range(allowed_cols):
                if cost[j] < 0:
                    entering = j
                    break
            if entering is None:
                return None
            leaving = None
            best_ratio = None
            for r, row in enumerate(self.rows):
                coef = row[entering]
                if coef > 0:
                    ratio = row[-1] / coef
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[r] < self.basis[leaving])
                    ):
                        best_ratio = ratio
                        leaving = r
            if leaving is None:
                return entering
            self._pivot(leaving, entering, cost)

    def phase1(self) -> bool:
        """Install a feasible basis. False when the system is infeasible."""
        m = len(self.rows)
        width = self.ncols + m + 1
        for i, row in enumerate(self.rows):
            art = [Fraction(0)] * m
            art[i] = Fraction(1)
            self.rows[i] = row[: self.ncols] + art + [row[-1]]
        self.basis = [self.ncols + i for i in range(m)]
        var_costs = [Fraction(0)] * self.ncols + [Fraction(1)] * m
        cost = self._reduced_costs(var_costs)
        assert len(cost) == width
        escape = self._run_simplex(cost, self.ncols + m)
        assert escape is None, "phase 1 objective is bounded below by 0"
        total = sum((self.rows[r][-1] for r, b in enumerate(self.basis) if b >= self.ncols), Fraction(0))
        if total != 0:
            return False
        for r in range(len(self.rows) - 1, -1, -1):
            if self.basis[r] >= self.ncols:
                pivot_col = None
                for j in range(self.ncols):
                    if self.rows[r][j] != 0:
                        pivot_col = j
                        break
                if pivot_col is None:
                    del self.rows[r]
                    del self.basis[r]
                else:
                    self._pivot(r, pivot_col, cost)
        self.rows = [row[: self.ncols] + [row[-1]] for row in self.rows]
        return True

    def phase2(self, minimize: Vec) -> tuple[str, Optional[Vec]]:
        var_costs = (
            list(minimize)
            + [-x for x in minimize]
            + [Fraction(0)] * len(self.ineqs)
        )
        cost = self._reduced_costs(var_costs)
        entering = self._run_simplex(cost, self.ncols)
        if entering is None:
            return "optimal", None
        direction = [Fraction(0)] * self.ncols
        direction[entering] = Fraction(1)
        for r, b in enumerate(self.basis):
            direction[b] = -self.rows[r][entering]
        ray = tuple(direction[k] - direction[self.n + k] for k in range(self.n))
        return "unbounded", ray

    def solution(self) -> Vec:
        values = [Fraction(0)] * self.ncols
        for r, b in enumerate(self.basis):
            values[b] = self.rows[r][-1]
        return tuple(values[k] - values[self.n + k] for k in range(self.n))


def _refine_to_vertex(point: Vec, fixed_rows: Sequence[Vec], ineqs: Sequence[Row]) -> Vec:
    """Walk within the optimal face until the tight rows span the space or a
    line is found.  Each step pins at least one new independent row.

    fixed_rows (equations plus the objective) stay tight throughout because
    every move direction is chosen from the nullspace of all tight rows.
    """
    dim = len(point)
    x = point
    while True:
        tight = list(fixed_rows) + [a for a, b in ineqs if vec_dot(a, x) == b]
        basis = nullspace_basis(tight, dim)
        if not basis:
            return x
        d = basis[0]
        moved = False
        for direction in (d, tuple(-v for v in d)):
            step = None
            for a, b in ineqs:
                ad = vec_dot(a, direction)
                if ad < 0:
                    slack = vec_dot(a, x) - b
                    if slack > 0:
                        bound = -slack / ad
                        if step is None or bound < step:
                            step = bound
            if step is not None:
                x = vec_add(x, vec_scale(step, direction))
                moved = True
                break
        if not moved:
            return x


def lp_solve(
    objective: Vec,
    ineqs: Sequence[Row] = (),
    eqs: Sequence[Row] = (),
    sense: str = "min",
    refine: bool = True,
) -> LpOutcome:
    """Optimize objective . x subject to a . x >= b rows and a . x == b rows."""
    if sense not in ("min", "max"):
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
    n = len(objective)
    for a, _ in list(ineqs) + list(eqs):
        if len(a) != n:
            raise DimensionMismatch("lp_solve: row dimension mismatch")
    minimize = objective if sense == "min" else tuple(-c for c in objective)
    tableau = _Tableau(minimize, ineqs, eqs)
    if not tableau.phase1():
        return LpOutcome(LpStatus.INFEASIBLE, None, None, None)
    kind, ray = tableau.phase2(minimize)
    if kind == "unbounded":
        return LpOutcome(LpStatus.UNBOUNDED, None, None, ray)
    x = tableau.solution()
    value = vec_dot(minimize, x)
    if refine and n > 0:
        fixed = [a for a, _ in eqs]
        if not is_zero_vec(minimize):
            fixed.append(minimize)
        x = _refine_to_vertex(x, fixed, ineqs)
        assert vec_dot(minimize, x) == value
    reported = value if sense == "min" else -value
    return LpOutcome(LpStatus.OPTIMAL, reported, x, None)


def feasible_point(dim: int, ineqs: Sequence[Row] = (), eqs: Sequence[Row] = ()) -> Optional[Vec]:
    """Any exact feasible point of the system, or None."""
    outcome = lp_solve(zero_vec(dim), ineqs, eqs, sense="min", refine=False)
    return outcome.point if outcome.is_feasible else None
