"""
Dense two-phase primal simplex with Bland's anti-cycling rule.

The LP  min obj·x  s.t.  A x ≥ c,  A_eq x = b_eq,  x free  is brought to
standard form with x = x⁺ − x⁻ and one surplus column per inequality:

    columns: [x⁺ (d) | x⁻ (d) | surpluses (m) | artificials]

Each row is divided by the norm of its coefficients on x, so every
right-hand side is a signed distance. A row whose right-hand side is not
positive is negated so its surplus starts in the basis; every other row
gets an artificial column.

The tableau B⁻¹[M | b] is recomputed from the standard-form data every
``refactor_every`` pivots and before optimality or unboundedness is
declared. The point read from the final basis is checked against the
caller's constraints; a point that fails is solved again with a
refactorization at every pivot, and NumericalInstability is raised if it
still fails.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exceptions import IterationLimit, NumericalInstability, SolverError
from .polyhedron import Polyhedron
from .types import LpSolution, LpStatus, SolverOptions

# tied leaving rows with a pivot below this share of the largest tied pivot are passed over
_STABLE_SHARE = 1e-3

# a row of B⁻¹M with no structural entry above this is a redundant equation
_REDUNDANT_TOL = 1e-9


class _Tableau:
    """Canonical-form tableau over a fixed standard-form system M x = b, x ≥ 0."""

    def __init__(self, M: np.ndarray, b: np.ndarray, basis: np.ndarray, options: SolverOptions,
                 budget: int, refactor_every: int, share: float):
        self.M = M
        self.b = b
        self.basis = basis
        self.options = options
        self.budget = budget
        self.refactor_every = max(1, refactor_every)
        self.share = share
        self.iterations = 0
        self.stale = 0
        self.zero_tol = options.feasibility_tol * max(1.0, float(np.max(np.abs(b), initial=0.0)))
        self.T = np.empty((M.shape[0], M.shape[1] + 1))
        self.refactor()

    @property
    def values(self) -> np.ndarray:
        return self.T[:, -1]

    def refactor(self):
        """T ← B⁻¹[M | b]; basic values within the zero tolerance below zero become zero."""
        B = self.M[:, self.basis]
        try:
            self.T = np.linalg.solve(B, np.column_stack((self.M, self.b)))
        except np.linalg.LinAlgError:
            raise NumericalInstability(f"Singular basis after {self.iterations} pivots") from None
        self.T[:, self.basis] = np.eye(self.basis.size)
        values = self.T[:, -1]
        values[(values < 0.0) & (values > -self.zero_tol)] = 0.0
        self.stale = 0

    def reduced_costs(self, cost: np.ndarray) -> np.ndarray:
        return cost - cost[self.basis] @ self.T[:, :-1]

    def pivot(self, i: int, j: int):
        T = self.T
        T[i] /= T[i, j]
        col = T[:, j].copy()
        col[i] = 0.0
        T -= np.outer(col, T[i])
        T[:, j] = 0.0
        T[i, j] = 1.0
        self.basis[i] = j
        self.stale += 1
        if self.stale >= self.refactor_every:
            self.refactor()

    def leaving_row(self, j: int) -> Optional[int]:
        """Minimum-ratio row for entering column j, smallest basic index among stable ties."""
        column = self.T[:, j]
        threshold = self.options.pivot_tol * max(1.0, float(np.max(np.abs(column))))
        rows = np.flatnonzero(column > threshold)
        if rows.size == 0:
            return None
        ratios = np.maximum(self.T[rows, -1], 0.0) / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + 1e-12 * (1.0 + abs(best))]
        if self.share > 0.0 and ties.size > 1:
            pivots = column[ties]
            ties = ties[pivots >= self.share * pivots.max()]
        return int(ties[np.argmin(self.basis[ties])])

    def run(self, cost: np.ndarray, eligible: np.ndarray) -> LpStatus:
        """Minimize cost over the current basis; OPTIMAL or UNBOUNDED on a fresh factorization."""
        dual_tol = self.options.feasibility_tol
        while True:
            rc = self.reduced_costs(cost)
            entering = np.flatnonzero(eligible & (rc < -dual_tol))
            if entering.size == 0:
                if self.stale:
                    self.refactor()
                    continue
                return LpStatus.OPTIMAL
            j = int(entering[0])

            i = self.leaving_row(j)
            if i is None:
                if self.stale:
                    self.refactor()
                    continue
                return LpStatus.UNBOUNDED

            self.pivot(i, j)
            self.iterations += 1
            if self.iterations > self.budget:
                raise IterationLimit(
                    f"Simplex exceeded {self.budget} pivots on a {self.T.shape[0]}x{self.M.shape[1]} tableau"
                )


@dataclass
class _StandardForm:
    M: np.ndarray
    b: np.ndarray
    basis: np.ndarray
    n_struct: int
    d: int
    m: int


def _standard_form(poly: Polyhedron, A_eq: np.ndarray, b_eq: np.ndarray) -> _StandardForm:
    d, m, k = poly.dim, poly.n_rows, b_eq.size
    n_struct = 2 * d + m

    A = np.vstack([poly.A, A_eq])
    rhs = np.concatenate([poly.c, b_eq])
    norms = np.linalg.norm(A, axis=1)
    norms[norms == 0.0] = 1.0

    M = np.zeros((m + k, n_struct))
    M[:, :d] = A
    M[:, d:2 * d] = -A
    M[:m, 2 * d:] = -np.eye(m)
    M /= norms[:, None]
    b = rhs / norms

    basis = np.full(m + k, -1, dtype=int)
    artificial_rows = []
    for i in range(m + k):
        if i < m and b[i] <= 0.0:
            M[i] = -M[i]
            b[i] = -b[i]
            basis[i] = 2 * d + i
            continue
        if b[i] < 0.0:
            M[i] = -M[i]
            b[i] = -b[i]
        artificial_rows.append(i)

    artificials = np.zeros((m + k, len(artificial_rows)))
    for offset, i in enumerate(artificial_rows):
        artificials[i, offset] = 1.0
        basis[i] = n_struct + offset
    return _StandardForm(np.hstack([M, artificials]), b, basis, n_struct, d, m)


def _violation(poly: Polyhedron, A_eq: np.ndarray, b_eq: np.ndarray, point: np.ndarray) -> float:
    """Largest relative violation of the inequality and equality rows."""
    worst = poly.violation(point)
    if b_eq.size:
        size = float(np.max(np.abs(point), initial=0.0))
        scale = 1.0 + np.linalg.norm(A_eq, axis=1) * size + np.abs(b_eq)
        worst = max(worst, float(np.max(np.abs(A_eq @ point - b_eq) / scale)))
    return worst


def _simplex(obj: np.ndarray, form: _StandardForm, opts: SolverOptions,
             refactor_every: int, share: float) -> LpSolution:
    d, m, n_struct = form.d, form.m, form.n_struct
    n_cols = form.M.shape[1]
    budget = opts.iteration_factor * (form.M.shape[0] + n_cols)
    tableau = _Tableau(form.M, form.b.copy(), form.basis.copy(), opts, budget, refactor_every, share)
    eligible = np.arange(n_cols) < n_struct

    # Phase I: drive the artificials to zero
    if n_cols > n_struct:
        phase1 = np.zeros(n_cols)
        phase1[n_struct:] = 1.0
        tableau.run(phase1, eligible)
        infeasibility = float(np.sum(tableau.values[tableau.basis >= n_struct]))
        if infeasibility > tableau.zero_tol:
            return LpSolution(LpStatus.INFEASIBLE, iterations=tableau.iterations)
        _pivot_out_artificials(tableau, n_struct)

    # Phase II
    cost = np.zeros(n_cols)
    cost[:d] = obj
    cost[d:2 * d] = -obj
    status = tableau.run(cost, eligible)
    if status is LpStatus.UNBOUNDED:
        return LpSolution(LpStatus.UNBOUNDED, iterations=tableau.iterations)

    x_full = np.zeros(n_cols)
    x_full[tableau.basis] = tableau.values
    point = x_full[:d] - x_full[d:2 * d]
    duals = tableau.reduced_costs(cost)[2 * d:2 * d + m]
    return LpSolution(
        status=LpStatus.OPTIMAL,
        point=point,
        value=float(obj @ point),
        iterations=tableau.iterations,
        duals=duals,
    )


def lp_minimize(
    objective: Sequence[float],
    poly: Polyhedron,
    A_eq: Optional[np.ndarray] = None,
    b_eq: Optional[Sequence[float]] = None,
    options: Optional[SolverOptions] = None
) -> LpSolution:
    """
    Minimize objective·z over the polyhedron, with optional equality rows.

    Args:
        objective: Cost vector of length poly.dim
        poly: Feasible region {z : A z ≥ c}
        A_eq: Equality constraint matrix
        b_eq: Equality right-hand side
        options: Tolerances, refactorization period and iteration factor

    Returns:
        LpSolution; on OPTIMAL the point is a vertex of the feasible set
        that satisfies every constraint within ``verify_tol``, and
        ``duals`` are the inequality multipliers

    Raises:
        IterationLimit: more than iteration_factor·(rows + cols) pivots
        NumericalInstability: no attempt produced a point inside the constraints
    """
    opts = options or SolverOptions()
    obj = np.asarray(objective, dtype=float).reshape(-1)
    d = poly.dim
    if obj.size != d:
        raise SolverError(f"Objective of length {obj.size} for a {d}-dimensional polyhedron")

    if A_eq is None:
        A_eq = np.zeros((0, d))
        b_eq = np.zeros(0)
    A_eq = np.atleast_2d(np.asarray(A_eq, dtype=float))
    b_eq = np.asarray(b_eq, dtype=float).reshape(-1)
    if A_eq.shape != (b_eq.size, d):
        raise SolverError(f"Equality rows {A_eq.shape} do not match ({b_eq.size}, {d})")

    form = _standard_form(poly, A_eq, b_eq)
    solution = _simplex(obj, form, opts, opts.refactor_every, _STABLE_SHARE)
    if not solution.optimal:
        return solution
    violation = _violation(poly, A_eq, b_eq, solution.point)
    if violation <= opts.verify_tol:
        return solution

    retry = _simplex(obj, form, opts, 1, 0.0)
    retry.iterations += solution.iterations
    if not retry.optimal:
        return retry
    violation = _violation(poly, A_eq, b_eq, retry.point)
    if violation > opts.verify_tol:
        raise NumericalInstability(
            f"Simplex point violates its constraints by {violation:.3e} (relative) on "
            f"{poly.n_rows} rows"
        )
    return retry


def _pivot_out_artificials(tableau: _Tableau, n_struct: int):
    """Replace zero-level basic artificials by structural columns; redundant rows keep theirs."""
    for i in range(tableau.basis.size):
        if tableau.basis[i] < n_struct:
            continue
        row = np.abs(tableau.T[i, :n_struct])
        j = int(np.argmax(row))
        if row[j] <= _REDUNDANT_TOL:
            continue
        tableau.T[i, -1] = 0.0
        tableau.pivot(i, j)
    tableau.refactor()
