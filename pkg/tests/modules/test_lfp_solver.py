"""
Unit tests for lfp_solver module.
"""
import itertools

import numpy as np
import pytest
from scipy.optimize import linprog

from l1lab.modules.lfp_solver import (
    Polyhedron,
    lp_minimize,
    lfp_minimize,
    charnes_cooper,
    AffineFunctional,
    LpStatus,
    SolverOptions,
    LpService,
    LfpSolverModule,
    SolverError,
    IterationLimit,
    NumericalInstability,
)
from l1lab.core.interfaces import ModuleContext


def _ratio_region(cap: float) -> Polyhedron:
    """{(δw, δ) : δw ≥ 0, 0 ≤ δ ≤ cap}."""
    return Polyhedron([[1.0, 0.0], [0.0, 1.0], [0.0, -1.0]], [0.0, 0.0, -cap])


def _random_polytope(rng, dim: int, n_rows: int) -> tuple:
    """
    [-2, 2]^dim cut by n_rows − 2·dim random halfspaces around an interior point.

    About a third of the cuts pass through that point, which makes
    degenerate vertices common. Returns (polytope, point).
    """
    center = rng.uniform(-1.0, 1.0, dim)
    box = Polyhedron.box([-2.0] * dim, [2.0] * dim)
    extra = n_rows - 2 * dim
    if extra == 0:
        return box, center
    A = rng.standard_normal((extra, dim))
    slack = np.where(rng.random(extra) < 0.3, 0.0, rng.uniform(0.0, 1.5, extra))
    return Polyhedron(A, A @ center - slack).meet(box), center


def _vertices(poly: Polyhedron) -> list:
    """Every vertex, by solving each square subsystem of the rows."""
    d = poly.dim
    found = []
    for rows in itertools.combinations(range(poly.n_rows), d):
        sub = poly.A[list(rows)]
        if np.linalg.cond(sub) > 1e8:
            continue
        z = np.linalg.solve(sub, poly.c[list(rows)])
        if poly.contains(z, tol=1e-9):
            found.append(z)
    return found


def _positive_denominator(rng, dim: int) -> AffineFunctional:
    """g·z + h with h large enough that it stays ≥ 1.5 on [-2, 2]^dim."""
    g = rng.standard_normal(dim)
    return AffineFunctional(g, 1.5 + 2.0 * float(np.sum(np.abs(g))) + rng.uniform(0.0, 1.0))


def _random_instances(rng, count: int):
    for k in range(count):
        dim = 1 + k % 4
        n_rows = int(rng.integers(2 * dim, 11))
        yield _random_polytope(rng, dim, n_rows)


class TestPolyhedron:
    """Tests for the H-representation."""

    def test_box_membership(self):
        """Test box contains its corners and excludes outside points."""
        box = Polyhedron.box([0.0, 0.0], [1.0, 1.0])
        assert box.n_rows == 4
        assert box.contains([1.0, 1.0])
        assert not box.contains([1.5, 0.5])

    def test_intersect_appends_row(self):
        """Test [0,1]² ∩ {x + y ≥ 1} has 5 rows, keeps (1,1), drops (0,0)."""
        poly = Polyhedron.box([0.0, 0.0], [1.0, 1.0]).intersect([1.0, 1.0], 1.0)
        assert poly.n_rows == 5
        assert poly.contains([1.0, 1.0])
        assert not poly.contains([0.0, 0.0])

    def test_repeated_halfspace_is_idempotent(self):
        """Test adding the same halfspace twice leaves membership unchanged."""
        once = Polyhedron.box([0.0, 0.0], [1.0, 1.0]).intersect([1.0, 1.0], 1.0)
        twice = once.intersect([1.0, 1.0], 1.0)
        for point in itertools.product([0.0, 0.4, 0.6, 1.0], repeat=2):
            assert once.contains(point) == twice.contains(point)

    def test_intersect_returns_new_object(self):
        """Test intersections never mutate the original."""
        base = Polyhedron.box([0.0], [1.0])
        base.intersect([1.0], 0.5)
        assert base.n_rows == 2

    def test_arrays_are_read_only(self):
        """Test A and c cannot be mutated in place."""
        poly = Polyhedron.box([0.0], [1.0])
        with pytest.raises(ValueError):
            poly.A[0, 0] = 2.0

    def test_shape_mismatch_raises(self):
        """Test mismatched A and c are rejected."""
        with pytest.raises(SolverError):
            Polyhedron([[1.0, 0.0]], [0.0, 1.0])

    def test_dimension_mismatch_raises(self):
        """Test wrong-dimension points and normals are rejected."""
        poly = Polyhedron.box([0.0, 0.0], [1.0, 1.0])
        with pytest.raises(SolverError):
            poly.contains([0.5])
        with pytest.raises(SolverError):
            poly.intersect([1.0], 0.0)

    def test_embed_and_meet(self):
        """Test lifting a 1-D interval into the second coordinate of R²."""
        interval = Polyhedron.box([2.0], [3.0]).embed(2, offset=1)
        poly = interval.meet(Polyhedron.box([0.0, -10.0], [1.0, 10.0]))
        assert poly.contains([0.5, 2.5])
        assert not poly.contains([0.5, 1.0])

    def test_with_rhs(self):
        """Test replacing one right-hand side."""
        poly = Polyhedron.box([0.0], [1.0]).with_rhs(1, -2.0)
        assert poly.contains([1.5])

    def test_whole_space_contains_everything(self):
        """Test a polyhedron without rows is all of R^d."""
        assert Polyhedron.whole_space(3).contains([1e9, -1e9, 0.0])

    def test_to_dict(self):
        """Test serialization keeps A and c."""
        data = Polyhedron.box([0.0], [1.0]).to_dict()
        assert data == {"A": [[1.0], [-1.0]], "c": [0.0, -1.0]}

    def test_violation_is_zero_inside(self):
        """Test points in the box, boundary included, have no violation."""
        box = Polyhedron.box([0.0, 0.0], [1.0, 1.0])
        assert box.violation([0.5, 0.5]) == 0.0
        assert box.violation([1.0, 0.0]) == 0.0

    def test_violation_is_relative(self):
        """Test x ≥ 1 at x = 0 gives 1/2 and a row scaled by 1e6 stays below 0.1."""
        assert Polyhedron([[1.0]], [1.0]).violation([0.0]) == pytest.approx(0.5)
        small = Polyhedron([[1.0]], [1.0]).violation([0.9])
        large = Polyhedron([[1e6]], [1e6]).violation([0.9])
        assert 0.0 < small < large < 0.1


class TestLpMinimize:
    """Tests for the dense simplex."""

    def test_interval_optimum(self):
        """Test min x over 1 ≤ x ≤ 3 is x = 1."""
        poly = Polyhedron([[1.0], [-1.0]], [1.0, -3.0])
        solution = lp_minimize([1.0], poly)
        assert solution.status is LpStatus.OPTIMAL
        assert solution.point[0] == pytest.approx(1.0)
        assert solution.value == pytest.approx(1.0)

    def test_infeasible(self):
        """Test x ≥ 1 and x ≤ 0 is infeasible."""
        poly = Polyhedron([[1.0], [-1.0]], [1.0, 0.0])
        assert lp_minimize([1.0], poly).status is LpStatus.INFEASIBLE

    def test_unbounded(self):
        """Test min −x over x ≥ 0 is unbounded."""
        poly = Polyhedron([[1.0]], [0.0])
        assert lp_minimize([-1.0], poly).status is LpStatus.UNBOUNDED

    def test_free_variables(self):
        """Test negative optima are reached through the split variables."""
        poly = Polyhedron.box([-4.0, -2.0], [1.0, 5.0])
        solution = lp_minimize([1.0, 1.0], poly)
        assert solution.point == pytest.approx([-4.0, -2.0])

    def test_equality_rows(self):
        """Test min x + 2y over x + y = 1 inside the unit box."""
        poly = Polyhedron.box([0.0, 0.0], [1.0, 1.0])
        solution = lp_minimize([1.0, 2.0], poly, A_eq=[[1.0, 1.0]], b_eq=[1.0])
        assert solution.point == pytest.approx([1.0, 0.0])
        assert solution.value == pytest.approx(1.0)

    def test_duals_certify_optimality(self):
        """Test duals are nonnegative and reproduce the objective."""
        poly = Polyhedron.box([0.0, 0.0], [1.0, 1.0]).intersect([1.0, 1.0], 1.0)
        objective = np.array([1.0, 3.0])
        solution = lp_minimize(objective, poly)
        assert np.all(solution.duals >= -1e-9)
        assert poly.A.T @ solution.duals == pytest.approx(objective)
        assert solution.duals @ poly.c == pytest.approx(solution.value)

    def test_degenerate_vertex_terminates(self):
        """Test many constraints through one vertex do not cycle."""
        rows = [[np.cos(t), np.sin(t)] for t in np.linspace(0.1, 1.4, 12)]
        poly = Polyhedron(rows, np.zeros(12)).meet(Polyhedron.box([-5.0, -5.0], [5.0, 5.0]))
        solution = lp_minimize([1.0, 1.0], poly)
        assert solution.value == pytest.approx(0.0, abs=1e-9)

    def test_iteration_limit(self):
        """Test a zero pivot budget raises."""
        poly = Polyhedron([[1.0], [-1.0]], [1.0, -3.0])
        with pytest.raises(IterationLimit):
            lp_minimize([1.0], poly, options=SolverOptions(iteration_factor=0))

    def test_numerical_instability_is_solver_error(self):
        """Test callers catching SolverError also catch a failed verification."""
        assert issubclass(NumericalInstability, SolverError)
        with pytest.raises(SolverError):
            raise NumericalInstability("point outside its constraints")

    def test_refactor_every_pivot_gives_same_vertex(self, rng):
        """Test refactorizing at every pivot reaches the same optimum as the default period."""
        for poly, _ in _random_instances(rng, 12):
            objective = rng.standard_normal(poly.dim)
            default = lp_minimize(objective, poly)
            eager = lp_minimize(objective, poly, options=SolverOptions(refactor_every=1))
            assert eager.value == pytest.approx(default.value, abs=1e-9)

    def test_objective_length_mismatch(self):
        """Test the objective must match the dimension."""
        with pytest.raises(SolverError):
            lp_minimize([1.0, 2.0], Polyhedron.box([0.0], [1.0]))

    def test_matches_vertex_enumeration(self, rng):
        """Test random bounded LPs against brute-force vertex enumeration."""
        for _ in range(10):
            A = rng.standard_normal((6, 3))
            poly = Polyhedron(A, -np.ones(6)).meet(Polyhedron.box([-2.0] * 3, [2.0] * 3))
            objective = rng.standard_normal(3)

            best = np.inf
            for rows in itertools.combinations(range(poly.n_rows), 3):
                sub = poly.A[list(rows)]
                if abs(np.linalg.det(sub)) < 1e-10:
                    continue
                z = np.linalg.solve(sub, poly.c[list(rows)])
                if poly.contains(z, tol=1e-9):
                    best = min(best, float(objective @ z))

            solution = lp_minimize(objective, poly)
            assert solution.value == pytest.approx(best, abs=1e-7)


class TestLfpMinimize:
    """Tests for the Charnes–Cooper reduction."""

    def test_initial_region_has_zero_value(self):
        """Test δw/(1 − δ) over the data-free region is 0 at δw = 0."""
        solution = lfp_minimize(([1.0, 0.0], 0.0), ([0.0, -1.0], 1.0), _ratio_region(0.5))
        assert solution.status is LpStatus.OPTIMAL
        assert solution.value == pytest.approx(0.0, abs=1e-12)
        assert solution.point[0] == pytest.approx(0.0, abs=1e-12)

    def test_segment_optimum(self):
        """Test δw + δ ≥ 1 gives the minimal ratio 1 along δw = 1 − δ."""
        poly = _ratio_region(0.5).intersect([1.0, 1.0], 1.0)
        solution = lfp_minimize(([1.0, 0.0], 0.0), ([0.0, -1.0], 1.0), poly)
        assert solution.value == pytest.approx(1.0)
        assert solution.point[0] + solution.point[1] == pytest.approx(1.0)
        assert poly.contains(solution.point)

    def test_singleton(self):
        """Test a single point returns its ratio."""
        delta = 1.0 - 1.0 / 2.267
        poly = Polyhedron.box([1.0, delta], [1.0, delta])
        solution = lfp_minimize(([1.0, 0.0], 0.0), ([0.0, -1.0], 1.0), poly)
        assert solution.value == pytest.approx(2.267, rel=1e-9)

    def test_matches_grid_search(self):
        """Test against a brute-force grid on a two-constraint region."""
        poly = _ratio_region(0.8).intersect([1.0, 2.0], 1.2).intersect([1.0, 0.0], 0.1)
        solution = lfp_minimize(AffineFunctional(np.array([1.0, 0.0])),
                                AffineFunctional(np.array([0.0, -1.0]), 1.0), poly)

        grid = np.linspace(0.0, 2.0, 401)
        best = min(
            w / (1.0 - d)
            for w in grid for d in np.linspace(0.0, 0.8, 161)
            if poly.contains([w, d])
        )
        assert solution.value <= best + 1e-9
        assert solution.value == pytest.approx(best, abs=2e-2)

    def test_infeasible_passes_through(self):
        """Test an empty region reports INFEASIBLE."""
        poly = _ratio_region(0.5).intersect([-1.0, 0.0], 1.0)
        solution = lfp_minimize(([1.0, 0.0], 0.0), ([0.0, -1.0], 1.0), poly)
        assert solution.status is LpStatus.INFEASIBLE

    def test_charnes_cooper_shape(self):
        """Test the lifted LP has one extra variable and one extra row."""
        objective, lifted, A_eq, b_eq = charnes_cooper(([1.0, 0.0], 0.0), ([0.0, -1.0], 1.0),
                                                       _ratio_region(0.5))
        assert lifted.dim == 3
        assert lifted.n_rows == 4
        assert A_eq.shape == (1, 3)
        assert objective.tolist() == [1.0, 0.0, 0.0]
        assert b_eq.tolist() == [1.0]

    def test_unattained_infimum_keeps_lifted_point(self):
        """Test −x/(x + 1) over x ≥ 0 returns a feasible point with ratio just above −1."""
        solution = lfp_minimize(([-1.0], 0.0), ([1.0], 1.0), Polyhedron([[1.0]], [0.0]))
        assert solution.status is LpStatus.OPTIMAL
        assert solution.point[0] >= 0.0
        assert -1.0 < solution.value < -1.0 + 1e-6

    def test_functional_length_mismatch(self):
        """Test numerator and denominator must match the dimension."""
        with pytest.raises(SolverError):
            lfp_minimize(([1.0], 0.0), ([0.0, -1.0], 1.0), _ratio_region(0.5))


class TestRandomPolytopes:
    """Tests against vertex enumeration on random bounded polytopes up to dimension 4."""

    def test_lp_matches_vertices(self, rng):
        """Test 100 LPs return a feasible point whose value is the best vertex value."""
        for poly, _ in _random_instances(rng, 100):
            objective = rng.standard_normal(poly.dim)
            best = min(float(objective @ z) for z in _vertices(poly))

            solution = lp_minimize(objective, poly)
            assert solution.status is LpStatus.OPTIMAL
            assert poly.violation(solution.point) <= 1e-7
            assert solution.value == pytest.approx(best, abs=1e-6)

    def test_lfp_matches_vertices(self, rng):
        """Test 100 ratio programs return a feasible point whose ratio is the best vertex ratio."""
        for poly, _ in _random_instances(rng, 100):
            num = AffineFunctional(rng.standard_normal(poly.dim), rng.uniform(-1.0, 1.0))
            den = _positive_denominator(rng, poly.dim)
            best = min(num(z) / den(z) for z in _vertices(poly))

            solution = lfp_minimize(num, den, poly)
            assert solution.status is LpStatus.OPTIMAL
            assert poly.violation(solution.point) <= 1e-7
            assert solution.value == pytest.approx(num(solution.point) / den(solution.point), abs=1e-12)
            assert solution.value == pytest.approx(best, abs=1e-6)

    def test_lfp_nested_polytopes_never_decrease(self, rng):
        """Test the optimal ratio is nondecreasing along a chain of shrinking polytopes."""
        for _ in range(20):
            dim = int(rng.integers(1, 5))
            poly, center = _random_polytope(rng, dim, 2 * dim)
            num = AffineFunctional(rng.standard_normal(dim), 0.0)
            den = _positive_denominator(rng, dim)

            previous = lfp_minimize(num, den, poly).value
            for _ in range(6):
                psi = rng.standard_normal(dim)
                poly = poly.intersect(psi, float(psi @ center) - rng.uniform(0.0, 0.5))
                value = lfp_minimize(num, den, poly).value
                assert value >= previous - 1e-8 * (1.0 + abs(previous))
                previous = value

    def test_infeasible_cut_detected(self, rng):
        """Test a halfspace beyond the box always yields INFEASIBLE."""
        for _ in range(20):
            dim = int(rng.integers(1, 5))
            poly, _ = _random_polytope(rng, dim, min(10, 2 * dim + 1))
            psi = rng.standard_normal(dim)
            poly = poly.intersect(psi, 2.0 * float(np.sum(np.abs(psi))) + 0.1)
            assert lp_minimize(psi, poly).status is LpStatus.INFEASIBLE
            assert lfp_minimize((psi, 0.0), _positive_denominator(rng, dim), poly).status is LpStatus.INFEASIBLE

    def test_badly_scaled_rows(self, rng):
        """Test rows multiplied by 1e-6 and 1e6 leave the optimum and feasibility unchanged."""
        for poly, _ in _random_instances(rng, 20):
            factors = 10.0 ** rng.choice([-6.0, 0.0, 6.0], poly.n_rows)
            scaled = Polyhedron(poly.A * factors[:, None], poly.c * factors)
            objective = rng.standard_normal(poly.dim)

            reference = lp_minimize(objective, poly)
            solution = lp_minimize(objective, scaled)
            assert poly.violation(solution.point) <= 1e-7
            assert solution.value == pytest.approx(reference.value, abs=1e-6)


class TestEstimatorScalePolyhedron:
    """Tests on the parameter polyhedron absorbed by a reference-study run."""

    @pytest.fixture(scope="class")
    def Z(self):
        from l1lab.modules.experiment import RunServices, run, s7_config

        config = s7_config("random", "adaptive", seed=0, horizon=300)
        services = RunServices.standalone(config)
        build = services.controllers.build
        built = []

        def capture(*args, **kwargs):
            built.append(build(*args, **kwargs))
            return built[-1]

        services.controllers.build = capture
        result = run(config, services)
        estimator = built[0].estimator
        assert result.summary.update_count > 0
        return estimator.state.Z, estimator.criterion

    def test_point_is_feasible(self, Z):
        """Test the minimizer lies in Z_t within the verification tolerance."""
        poly, _ = Z
        d = poly.dim
        solution = lfp_minimize((np.eye(d)[d - 2], 0.0), (-np.eye(d)[d - 1], 1.0), poly)
        assert solution.status is LpStatus.OPTIMAL
        assert poly.violation(solution.point) <= 1e-7

    def test_matches_reference_solver(self, Z):
        """Test the ratio δ̂w/(1 − δ̂) against HiGHS on the same Charnes–Cooper program."""
        poly, criterion = Z
        d = poly.dim
        objective, lifted, A_eq, b_eq = charnes_cooper((np.eye(d)[d - 2], 0.0), (-np.eye(d)[d - 1], 1.0), poly)
        reference = linprog(objective, A_ub=-lifted.A, b_ub=-lifted.c, A_eq=A_eq, b_eq=b_eq,
                            bounds=[(None, None)] * (d + 1), method="highs")
        assert reference.status == 0

        solution = lfp_minimize((np.eye(d)[d - 2], 0.0), (-np.eye(d)[d - 1], 1.0), poly)
        assert solution.value == pytest.approx(reference.fun, abs=1e-6 * (1.0 + abs(reference.fun)))
        assert criterion == pytest.approx(solution.value, abs=1e-9 * (1.0 + abs(solution.value)))

    def test_no_smaller_ratio_exists(self, Z):
        """Test min δ̂w − λ(1 − δ̂) over Z_t is zero at the returned ratio λ."""
        poly, _ = Z
        d = poly.dim
        solution = lfp_minimize((np.eye(d)[d - 2], 0.0), (-np.eye(d)[d - 1], 1.0), poly)
        lam = solution.value
        weights = np.eye(d)[d - 2] + lam * np.eye(d)[d - 1]
        reference = linprog(weights, A_ub=-poly.A, b_ub=-poly.c, bounds=[(None, None)] * d, method="highs")
        assert reference.status == 0
        assert reference.fun - lam >= -1e-7 * (1.0 + lam)


class TestLpService:
    """Tests for LpService and LfpSolverModule."""

    def test_counts_solves(self):
        """Test solve and infeasibility counters."""
        service = LpService()
        service.minimize([1.0], Polyhedron([[1.0]], [0.0]))
        assert service.is_empty(Polyhedron([[1.0], [-1.0]], [1.0, 0.0])) is True
        assert service.stats["solves"] == 2
        assert service.stats["infeasible"] == 1

    def test_fractional_through_service(self):
        """Test the service forwards fractional programs."""
        service = LpService()
        solution = service.minimize_fractional(([1.0, 0.0], 0.0), ([0.0, -1.0], 1.0),
                                               _ratio_region(0.5).intersect([1.0, 1.0], 1.0))
        assert solution.value == pytest.approx(1.0)

    def test_options_from_dict(self):
        """Test unknown solver keys are ignored."""
        options = SolverOptions.from_dict({"pivot_tol": 1e-12, "method": "x"})
        assert options.pivot_tol == 1e-12

    def test_options_verification_keys(self):
        """Test the refactorization and verification keys are read."""
        options = SolverOptions.from_dict({"refactor_every": 5, "verify_tol": 1e-6, "max_refinements": 3})
        assert (options.refactor_every, options.verify_tol, options.max_refinements) == (5, 1e-6, 3)

    async def test_module_registers_service(self, mock_config_api, mock_logger_api):
        """Test load publishes lp_service and stop reports counters."""
        mock_config_api.get.return_value = {"iteration_factor": 10}
        context = ModuleContext()
        context.services.set("core_config", mock_config_api)
        context.services.set("core_logger", mock_logger_api)

        module = LfpSolverModule()
        await module.load(context)
        service = context.services.get("lp_service")
        assert service.options.iteration_factor == 10

        await module.stop(context)
        assert mock_logger_api.log.call_count == 2
