"""
Linear-fractional programming by the Charnes–Cooper transformation.

    min (e·z + f)/(g·z + h)  over  {A z ≥ c},  with g·z + h > 0 there,

becomes, with s = 1/(g·z + h) and r = s z,

    min e·r + f s  s.t.  A r − c s ≥ 0,  s ≥ σ_min,  g·r + h s = 1.

The point r/s is then checked with Dinkelbach steps, which solve
min num − λ·den over the original polyhedron.
"""
from typing import Optional

import numpy as np

from .exceptions import DenominatorNotPositive, IterationLimit, NumericalInstability, SolverError
from .polyhedron import Polyhedron
from .simplex import lp_minimize
from .types import AffineFunctional, AffineLike, LpSolution, LpStatus, SolverOptions, as_affine


def charnes_cooper(num: AffineLike, den: AffineLike, poly: Polyhedron,
                   sigma_min: float = 1e-9) -> tuple:
    """
    Build the transformed LP over (r, s).

    Returns:
        (objective, polyhedron, A_eq, b_eq) ready for lp_minimize
    """
    num, den = as_affine(num), as_affine(den)
    d = poly.dim
    if num.weights.size != d or den.weights.size != d:
        raise SolverError(f"Affine functionals must have length {d}")

    A = np.zeros((poly.n_rows + 1, d + 1))
    A[:-1, :d] = poly.A
    A[:-1, d] = -poly.c
    A[-1, d] = 1.0
    c = np.zeros(poly.n_rows + 1)
    c[-1] = sigma_min

    objective = np.append(num.weights, num.offset)
    A_eq = np.append(den.weights, den.offset).reshape(1, -1)
    return objective, Polyhedron(A, c), A_eq, np.ones(1)


def lfp_minimize(num: AffineLike, den: AffineLike, poly: Polyhedron,
                 options: Optional[SolverOptions] = None) -> LpSolution:
    """
    Minimize num(z)/den(z) over the polyhedron.

    The lifted LP gives z* = r*/s*; Dinkelbach steps on the original
    polyhedron then certify it, or replace it when the lifted point falls
    outside the polyhedron or a smaller ratio exists.

    Args:
        num: Numerator e·z + f, as AffineFunctional or (e, f)
        den: Denominator g·z + h, positive on the polyhedron
        poly: Feasible region
        options: Solver options (sigma_min bounds s away from zero)

    Returns:
        LpSolution whose point lies in the polyhedron and whose value is
        num(z*)/den(z*); INFEASIBLE and UNBOUNDED statuses pass through

    Raises:
        DenominatorNotPositive: den(z*) ≤ 0
        IterationLimit: no certificate within ``max_refinements`` steps
    """
    opts = options or SolverOptions()
    num, den = as_affine(num), as_affine(den)
    objective, lifted, A_eq, b_eq = charnes_cooper(num, den, poly, opts.sigma_min)
    solution = lp_minimize(objective, lifted, A_eq, b_eq, opts)
    if not solution.optimal:
        return solution

    r, s = solution.point[:-1], solution.point[-1]
    duals = solution.duals[:-1] if solution.duals is not None else None
    return _refine(num, den, poly, r / s, solution.iterations, duals, opts)


def _refine(num: AffineFunctional, den: AffineFunctional, poly: Polyhedron, z: np.ndarray,
            iterations: int, duals: Optional[np.ndarray], opts: SolverOptions) -> LpSolution:
    """
    Dinkelbach steps from z.

    With λ the ratio at a feasible z, min num − λ·den over the polyhedron
    is zero exactly when z is optimal; a negative minimum yields a vertex
    with a smaller ratio. An infeasible z only seeds the first λ.
    """
    feasible = poly.violation(z) <= opts.verify_tol and den(z) > 0.0
    lam = num(z) / den(z) if den(z) > 0.0 else 0.0
    for _ in range(opts.max_refinements):
        step = lp_minimize(num.weights - lam * den.weights, poly, options=opts)
        iterations += step.iterations
        if step.status is LpStatus.UNBOUNDED and feasible:
            # infimum approached only along a ray; the σ_min-bounded lifted point stands
            break
        if not step.optimal:
            raise NumericalInstability(
                f"Refinement program {step.status.value} after an optimal lifted solve"
            )
        gap = num(step.point) - lam * den(step.point)
        if feasible and gap >= -opts.feasibility_tol * (1.0 + abs(lam)):
            break
        z, duals, feasible = step.point, step.duals, True
        denominator = den(z)
        if denominator <= 0.0:
            raise DenominatorNotPositive(f"Denominator {denominator:.3e} at the returned point")
        lam = num(z) / denominator
    else:
        raise IterationLimit(f"Fractional program not certified after {opts.max_refinements} refinements")

    return LpSolution(
        status=LpStatus.OPTIMAL,
        point=z,
        value=lam,
        iterations=iterations,
        duals=duals,
    )
