"""
Unit tests for plant_sim module.
"""
import numpy as np
import pytest

from l1lab.modules.plant_sim import (
    History,
    PlantParams,
    PlantState,
    step,
    window_max,
    regressor,
    DisturbanceKind,
    DisturbanceSpec,
    DisturbanceAux,
    DisturbanceGenerator,
    gen_disturbance,
    disturbance_envelope,
    perturbation_levels,
    read_sequence,
    write_sequence,
    DisturbanceStream,
    seeded_streams,
    PlantService,
    PlantSimModule,
    PlantError,
    NonFinite,
    MissingAux,
    SequenceExhausted,
)
from l1lab.modules.poly_core import NotMinimumPhase
from l1lab.core.interfaces import ModuleContext


class TestHistory:
    """Tests for absolute-time History."""

    def test_zero_before_origin(self):
        """Test indices before the origin read as zero."""
        h = History(origin=-2, initial=[1.0, 2.0, 3.0])
        assert h[-3] == 0.0
        assert h[-2] == 1.0
        assert h[0] == 3.0
        assert h.last == 0

    def test_future_index_raises(self):
        """Test reading past the newest value raises."""
        h = History(origin=0, initial=[1.0])
        with pytest.raises(PlantError):
            h[1]

    def test_window_pads_with_zeros(self):
        """Test windows reaching before the origin are zero padded."""
        h = History(origin=0, initial=[4.0, 5.0])
        assert h.window(-2, 1).tolist() == [0.0, 0.0, 4.0, 5.0]
        assert h.window(3, 2).size == 0

    def test_append_grows_storage(self):
        """Test appends beyond capacity keep earlier values."""
        h = History(origin=0, capacity=2)
        for k in range(10):
            h.append(float(k))
        assert len(h) == 10
        assert h.values().tolist() == [float(k) for k in range(10)]
        assert h.times().tolist() == list(range(10))


class TestWindowMax:
    """Tests for window_max."""

    def test_full_window(self):
        """Test the maximum magnitude over the whole history."""
        h = History(origin=0, initial=[1.0, -3.0, 2.0])
        assert window_max(h, 0, 2) == 3.0

    def test_window_before_start_is_zero(self):
        """Test a window entirely before t = 0 gives 0."""
        h = History(origin=0, initial=[1.0, -3.0, 2.0])
        assert window_max(h, -10, -1) == 0.0

    def test_partial_window_uses_available_values(self):
        """Test μ = 20 at t = 5 sees only the nine stored values y_{−4}..y_4."""
        values = [0.5, -1.0, 2.0, 0.0, 7.0, -9.0, 1.0, 3.0, 4.0]
        h = History(origin=-4, initial=values)
        assert window_max(h, 5 - 20, 5 - 1) == 9.0

    def test_empty_window(self):
        """Test an empty range gives 0."""
        h = History(origin=0, initial=[1.0])
        assert window_max(h, 1, 0) == 0.0


class TestPlantParams:
    """Tests for PlantParams."""

    def test_split(self, s7_params):
        """Test n, m and the polynomial parts."""
        assert s7_params.m == 3
        assert s7_params.a.coeffs[1] == pytest.approx(-4.2222)
        assert s7_params.b.to_list() == pytest.approx([2.0, -3.3333, 1.3889])

    def test_xi_is_read_only(self, s7_params):
        """Test θ cannot be mutated during a run."""
        with pytest.raises(ValueError):
            s7_params.xi[0] = 0.0

    def test_not_minimum_phase_rejected(self):
        """Test a true plant with an unstable b is refused."""
        with pytest.raises(NotMinimumPhase):
            PlantParams(xi=[0.5, 1.0, -2.0], n=1)

    def test_with_xi_skips_phase_check(self):
        """Test candidate parameters may be non-minimum-phase."""
        params = PlantParams(xi=[0.5, 1.0], n=1).with_xi([0.5, 1.0, -2.0])
        assert params.m == 2

    @pytest.mark.parametrize("kwargs", [
        {"xi": [0.5], "n": 1},
        {"xi": [0.5, 1.0], "n": 1, "delta_w": -1.0},
        {"xi": [0.5, 1.0], "n": 1, "mu": 0},
    ])
    def test_invalid_params(self, kwargs):
        """Test missing b, negative gains and zero memory are rejected."""
        with pytest.raises(PlantError):
            PlantParams(**kwargs)

    def test_to_dict(self, first_order_params):
        """Test serialization."""
        data = first_order_params.to_dict()
        assert data["xi"] == [-0.5, 2.0]
        assert data["mu"] == 2


class TestStep:
    """Tests for the plant recursion."""

    def test_first_order_step(self, first_order_params):
        """Test y_1 = 0.5·1 + 2·0 + 0.1 = 0.6."""
        state = PlantState.create(1, 1, [1.0])
        y1 = step(state, first_order_params, 0.0, 0.1)
        assert y1 == pytest.approx(0.6)
        assert state.t == 1
        assert state.u[0] == 0.0
        assert state.y[1] == pytest.approx(0.6)

    def test_pass_through(self):
        """Test a = 1, b = 1 with zero input gives y_{t+1} = v_{t+1}."""
        params = PlantParams(xi=[0.0, 1.0], n=1)
        state = PlantState.create(1, 1, [5.0])
        assert step(state, params, 0.0, 0.3) == pytest.approx(0.3)

    def test_reference_plant_from_unit_output(self, s7_params):
        """Test y_0 = 1 and zero input give y_1 = −a_1 = 4.2222."""
        state = PlantState.create(4, 3, [0.0, 0.0, 0.0, 1.0])
        assert step(state, s7_params, 0.0, 0.0) == pytest.approx(4.2222)

    def test_input_enters_with_b(self, first_order_params):
        """Test u_t contributes b_1 u_t."""
        state = PlantState.create(1, 1, [0.0])
        assert step(state, first_order_params, 1.5, 0.0) == pytest.approx(3.0)

    def test_overflow_raises_non_finite(self, first_order_params):
        """Test a huge output is reported as a blow-up."""
        state = PlantState.create(1, 1, [0.0])
        with pytest.raises(NonFinite) as exc_info:
            step(state, first_order_params, 1e200, 0.0)
        assert exc_info.value.t == 1
        assert state.t == 0

    def test_non_finite_input_raises(self, first_order_params):
        """Test NaN inputs are refused."""
        state = PlantState.create(1, 1, [0.0])
        with pytest.raises(NonFinite):
            step(state, first_order_params, float("nan"), 0.0)

    def test_initial_length_checked(self):
        """Test the initial data must have n entries."""
        with pytest.raises(PlantError):
            PlantState.create(2, 1, [1.0])

    def test_regressor_layout(self, first_order_params):
        """Test φ_t = (−y_t, u_t) with an override for the pending input."""
        state = PlantState.create(1, 1, [2.0])
        assert regressor(state, u_t=3.0).tolist() == [-2.0, 3.0]
        step(state, first_order_params, 3.0, 0.0)
        assert regressor(state, 0).tolist() == [-2.0, 3.0]


class TestDisturbance:
    """Tests for the disturbance generators."""

    def test_trig_with_zero_history_is_pure_w(self, s7_params):
        """Test the perturbation terms vanish when histories are zero."""
        state = PlantState.create(4, 3)
        spec = DisturbanceSpec(kind="deterministic_trig", seed=3)
        stream = DisturbanceStream.from_seed(3)
        v = gen_disturbance(spec, state, s7_params, 0.0, stream=stream)
        assert v == pytest.approx(s7_params.delta_w * stream.draws(1)[0])

    def test_worst_case_sign(self):
        """Test ξ̂·φ = −2 inside a window gives v = −δw."""
        params = PlantParams(xi=[0.0, 1.0], n=1, delta_w=1.0, delta_y=0.0, delta_u=0.0)
        state = PlantState.create(1, 1)
        spec = DisturbanceSpec(kind="worst_case_sign", windows=[(1, 1)])
        aux = DisturbanceAux(xi_hat=np.array([1.0, 1.0]), phi=np.array([-2.0, 0.0]))
        assert gen_disturbance(spec, state, params, 0.0, aux) == -1.0

    def test_worst_case_outside_window_uses_base(self, first_order_params):
        """Test outside its windows the worst case equals the base kind."""
        state = PlantState.create(1, 1)
        worst = DisturbanceSpec(kind="worst_case_sign", windows=[(50, 60)], seed=1)
        base = DisturbanceSpec(kind="random_uniform", seed=1)
        aux = DisturbanceAux(np.zeros(2), np.zeros(2))
        assert gen_disturbance(worst, state, first_order_params, 0.0, aux) == \
            gen_disturbance(base, state, first_order_params, 0.0)

    def test_worst_case_without_aux_raises(self, first_order_params):
        """Test the worst case needs the estimate."""
        spec = DisturbanceSpec(kind="worst_case_sign", windows=[(1, 1)])
        with pytest.raises(MissingAux):
            gen_disturbance(spec, PlantState.create(1, 1), first_order_params, 0.0)

    def test_worst_case_base_rejected(self):
        """Test the worst case cannot be its own base."""
        with pytest.raises(PlantError):
            DisturbanceSpec(kind="worst_case_sign", base_kind="worst_case_sign")

    def test_random_replay_is_identical(self, s7_params):
        """Test a fixed seed reproduces the sequence."""
        def sequence():
            state = PlantState.create(4, 3, [0.0, 0.0, 0.0, 1.0])
            gen = DisturbanceGenerator(DisturbanceSpec(seed=42), DisturbanceStream.from_seed(42))
            for _ in range(50):
                v = gen.next(state, s7_params, 0.0)
                step(state, s7_params, 0.0, v)
            return gen.emitted

        assert sequence() == sequence()

    def test_draws_are_pure_in_time(self):
        """Test draws at t do not depend on earlier reads."""
        stream = DisturbanceStream.from_seed(7)
        late = stream.draws(100).copy()
        for t in range(1, 100):
            stream.draws(t)
        assert np.array_equal(stream.draws(100), late)
        assert np.all(np.abs(late) <= 1.0)

    def test_seeds_differ(self):
        """Test different seeds give different streams."""
        assert not np.array_equal(DisturbanceStream.from_seed(1).draws(1),
                                  DisturbanceStream.from_seed(2).draws(1))

    def test_initial_generator_independent_of_stream(self):
        """Test the two streams of a seed are distinct."""
        init_rng, stream = seeded_streams(5)
        _, stream_again = seeded_streams(5)
        init_rng.uniform(size=100)
        assert np.array_equal(stream.draws(1), stream_again.draws(1))

    @pytest.mark.parametrize("kind", ["random_uniform", "deterministic_trig"])
    def test_envelope_holds(self, kind, s7_params):
        """Test |v| stays under δw + δy p^y + δu p^u on a driven run."""
        state = PlantState.create(4, 3, [0.3, -0.2, 0.5, 1.0])
        gen = DisturbanceGenerator(DisturbanceSpec(kind=kind, seed=9))
        for t in range(200):
            u = np.sin(0.3 * t)
            v = gen.next(state, s7_params, u)
            assert abs(v) <= gen.last_envelope * (1.0 + 1e-12)
            step(state, s7_params, u, v)
            if abs(state.y[state.t]) > 1e6:
                break

    def test_perturbation_levels_include_pending_input(self, first_order_params):
        """Test p^u covers u_t before it is stored."""
        state = PlantState.create(1, 1, [2.0])
        p_y, p_u = perturbation_levels(state, first_order_params, -4.0)
        assert (p_y, p_u) == (2.0, 4.0)
        assert disturbance_envelope(state, first_order_params, -4.0) == pytest.approx(1.0)

    def test_custom_sequence(self, tmp_path, first_order_params):
        """Test a recorded sequence is replayed and runs out."""
        path = tmp_path / "v.csv"
        write_sequence(str(path), [0.1, -0.2])
        assert read_sequence(str(path)) == (0.1, -0.2)

        state = PlantState.create(1, 1)
        gen = DisturbanceGenerator(DisturbanceSpec(kind="custom_sequence", sequence_path=str(path)))
        for expected in (0.1, -0.2):
            v = gen.next(state, first_order_params, 0.0)
            assert v == expected
            step(state, first_order_params, 0.0, v)
        with pytest.raises(SequenceExhausted):
            gen.next(state, first_order_params, 0.0)

    def test_custom_sequence_without_source(self):
        """Test custom_sequence needs data."""
        with pytest.raises(PlantError):
            DisturbanceGenerator(DisturbanceSpec(kind="custom_sequence"))

    def test_missing_column(self, tmp_path):
        """Test a CSV without a v column is rejected."""
        path = tmp_path / "bad.csv"
        path.write_text("x\n1\n", encoding="utf-8")
        with pytest.raises(PlantError):
            read_sequence(str(path))

    def test_spec_round_trip_fields(self):
        """Test from_dict parses kinds and windows."""
        spec = DisturbanceSpec.from_dict({"kind": "worst_case_sign", "windows": [[3, 4]]}, seed=8)
        assert spec.kind is DisturbanceKind.WORST_CASE_SIGN
        assert spec.windows == ((3, 4),)
        assert spec.seed == 8
        assert spec.in_window(4) and not spec.in_window(5)
        assert spec.to_dict()["windows"] == [[3, 4]]


class TestPlantService:
    """Tests for PlantService and PlantSimModule."""

    def test_prepare_draws_initial_outputs(self, s7_params):
        """Test random initial data is seeded and bounded."""
        service = PlantService()
        state, gen = service.prepare(s7_params, DisturbanceSpec(seed=4), seed=4)
        again, _ = service.prepare(s7_params, DisturbanceSpec(seed=4), seed=4)
        assert np.array_equal(state.y.values(), again.y.values())
        assert np.all(np.abs(state.y.values()) <= 1.0)
        assert isinstance(gen, DisturbanceGenerator)

    def test_prepare_with_given_outputs(self, s7_params):
        """Test explicit initial data is used as given."""
        state, _ = PlantService().prepare(s7_params, DisturbanceSpec(), seed=0,
                                          y_init=[0.0, 0.0, 0.0, 1.0])
        assert state.y[0] == 1.0

    async def test_module_sizes_capacity_from_horizon(self, mock_config_api):
        """Test the history capacity follows experiment.horizon."""
        mock_config_api.get.return_value = 100
        context = ModuleContext()
        context.services.set("core_config", mock_config_api)

        await PlantSimModule().load(context)
        assert context.services.get("plant_service").capacity == 164
