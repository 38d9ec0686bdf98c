"""
Norm bounds over a parameter polytope and the robust-stability margin.
"""
import itertools
import math
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from l1lab.modules.lfp_solver import Polyhedron, lp_minimize, LpStatus, SolverOptions, EmptyPolytope

from .exceptions import NotMinimumPhase, PolynomialError
from .impulse import xi_norm
from .types import NormOptions, NormSearch


def controller_gain_check(xi: Sequence[float], n: int, delta_y: float, delta_u: float,
                          options: Optional[NormOptions] = None) -> float:
    """
    δ^y + δ^u‖G^ξ‖; the optimal controller is robustly stabilizing iff this is below 1.
    """
    return delta_y + delta_u * xi_norm(xi, n, options)


def _vertex_candidates(poly: Polyhedron, samples: int, rng: np.random.Generator) -> Iterator[np.ndarray]:
    m, d = poly.n_rows, poly.dim
    if m < d:
        return
    if math.comb(m, d) <= samples:
        subsets = itertools.combinations(range(m), d)
    else:
        subsets = (np.sort(rng.choice(m, size=d, replace=False)) for _ in range(samples))
    for subset in subsets:
        rows = list(subset)
        try:
            z = np.linalg.solve(poly.A[rows], poly.c[rows])
        except np.linalg.LinAlgError:
            continue
        if np.all(np.isfinite(z)) and poly.contains(z):
            yield z


def _direction_candidates(poly: Polyhedron, samples: int, rng: np.random.Generator,
                          solver_options: Optional[SolverOptions]) -> Iterator[np.ndarray]:
    for _ in range(samples):
        solution = lp_minimize(rng.standard_normal(poly.dim), poly, options=solver_options)
        if solution.status is LpStatus.OPTIMAL:
            yield solution.point


def l1_norm_upper_over_polytope(
    Xi: Polyhedron,
    n: int,
    method: Union[NormSearch, str] = NormSearch.VERTEX_SAMPLING,
    samples: int = 256,
    seed: int = 0,
    extra_candidates: Optional[Sequence[Sequence[float]]] = None,
    options: Optional[NormOptions] = None,
    solver_options: Optional[SolverOptions] = None
) -> float:
    """
    Largest ‖G^ξ‖ found among candidate points of Ξ.

    This is a lower estimate of sup over Ξ and is not certified: vertices
    are enumerated when there are at most ``samples`` row subsets and drawn
    at random otherwise, or vertices are reached by LPs in random
    directions. Candidates whose b part is not minimum phase, or whose
    series does not converge, are skipped.

    Raises:
        EmptyPolytope: Ξ has no feasible point
        NotMinimumPhase: no candidate has a minimum-phase b part
    """
    method = NormSearch(method)
    feasible = lp_minimize(np.zeros(Xi.dim), Xi, options=solver_options)
    if feasible.status is LpStatus.INFEASIBLE:
        raise EmptyPolytope(f"{Xi!r} is empty")

    rng = np.random.Generator(np.random.Philox(seed))
    if method is NormSearch.VERTEX_SAMPLING:
        candidates = _vertex_candidates(Xi, samples, rng)
    else:
        candidates = _direction_candidates(Xi, samples, rng, solver_options)
    if extra_candidates is not None:
        candidates = itertools.chain(candidates, (np.asarray(x, dtype=float) for x in extra_candidates))

    best = None
    seen = set()
    for xi in candidates:
        key = np.round(xi, 12).tobytes()
        if key in seen:
            continue
        seen.add(key)
        try:
            value = xi_norm(xi, n, options)
        except PolynomialError:
            continue
        best = value if best is None else max(best, value)

    if best is None:
        raise NotMinimumPhase("No candidate in the polytope has a minimum-phase b part")
    return best
