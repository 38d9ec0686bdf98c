"""
Integration tests for the command line.
"""
import json

import pytest

from l1lab.cli import EXIT_ERROR, EXIT_FALSIFIED, EXIT_OK, EXIT_UNSTABLE, build_parser, exit_code, main
from l1lab.core.settings_default import S7_XI


def _experiment_file(tmp_path, **overrides):
    experiment = {
        "plant": {"xi": [-0.5, 2.0], "n": 1, "delta_w": 1.0, "delta_y": 0.0, "delta_u": 0.0, "mu": 2},
        "xi_polytope": {"lower": [-1.0, 0.5], "upper": [0.5, 3.0]},
        "controller": {"kind": "adaptive_optimal", "xi0": [0.0, 1.0]},
        "horizon": 30,
        "mu_bar": 4,
    }
    experiment.update(overrides)
    path = tmp_path / "experiment.json"
    path.write_text(json.dumps({"experiment": experiment}))
    return str(path)


def _json_out(capsys):
    out = capsys.readouterr().out
    return json.loads(out[out.index("{"):])


class TestExitCode:
    """Tests for exit_code."""

    @pytest.mark.parametrize("statuses, code", [
        ([], EXIT_OK),
        (["ok", "ok"], EXIT_OK),
        (["ok", "falsified"], EXIT_FALSIFIED),
        (["falsified", "unstable", "ok"], EXIT_UNSTABLE),
    ])
    def test_worst_status_wins(self, statuses, code):
        """Test the exit code reports the worst run."""
        assert exit_code(statuses) == code


class TestParser:
    """Tests for the argument parser."""

    def test_replicate_defaults(self):
        """Test replicate-s7 defaults to one adaptive run on random disturbances."""
        args = build_parser().parse_args(["replicate-s7"])
        assert args.controller == "adaptive"
        assert args.disturbance == "random"
        assert args.seeds == 1
        assert args.horizon == 2000

    def test_norm_lists(self):
        """Test coefficient lists are parsed."""
        args = build_parser().parse_args(["norm", "--a=-0.5", "--b=2,0.5"])
        assert args.a == [-0.5]
        assert args.b == [2.0, 0.5]

    def test_bad_list(self):
        """Test malformed lists are refused by argparse."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["norm", "--a=x", "--b=1"])

    def test_command_required(self):
        """Test a subcommand is mandatory."""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestNormCommand:
    """Tests for the norm subcommand."""

    def test_reference_plant(self, capsys):
        """Test the reference plant gives J ≈ 2.267."""
        a = ",".join(str(x) for x in S7_XI[:4])
        b = ",".join(str(x) for x in S7_XI[4:])
        assert main(["norm", f"--a={a}", f"--b={b}"]) == EXIT_OK
        data = _json_out(capsys)
        assert data["J"] == pytest.approx(2.267, abs=0.005)
        assert data["verdict"] is None
        assert data["tail_bound"] >= 0.0

    def test_first_order(self, capsys):
        """Test a first-order plant: ‖G‖ = |a_1/b_1| and J = δ^w without gains."""
        assert main(["norm", "--a=-0.5", "--b=2", "--delta-y=0", "--delta-u=0"]) == EXIT_OK
        data = _json_out(capsys)
        assert data["l1_norm"] == pytest.approx(0.25)
        assert data["J"] == pytest.approx(1.0)

    def test_unstabilizable(self, capsys):
        """Test large gains give the verdict instead of J."""
        assert main(["norm", "--a=-0.5", "--b=2", "--delta-y=0.9", "--delta-u=1"]) == EXIT_OK
        data = _json_out(capsys)
        assert data["J"] is None
        assert data["verdict"] == "robustly_unstabilizable"

    def test_non_minimum_phase(self, capsys):
        """Test an unstable b is a configuration error."""
        assert main(["norm", "--a=0.5", "--b=1,2"]) == EXIT_ERROR
        assert "l1lab: error" in capsys.readouterr().err


class TestRunCommand:
    """Tests for the run subcommand."""

    def test_run_writes_artefacts(self, tmp_path, capsys):
        """Test a run prints its summary and writes the three files."""
        out = tmp_path / "out"
        code = main(["--quiet", "run", "--config", _experiment_file(tmp_path), "--seed", "5", "--out", str(out)])
        assert code == EXIT_OK
        summary = _json_out(capsys)
        assert summary["seed"] == 5
        assert summary["status"] == "ok"
        for name in ("trace.csv", "summary.json", "updates.csv"):
            assert (out / name).exists()

    def test_falsified_exit_code(self, tmp_path, capsys):
        """Test a tiny J_* ends with exit code 2."""
        code = main(["--quiet", "run", "--config", _experiment_file(tmp_path, J_star=1e-6),
                     "--out", str(tmp_path / "out")])
        assert code == EXIT_FALSIFIED
        assert _json_out(capsys)["status"] == "falsified"

    def test_missing_config(self, tmp_path, capsys):
        """Test a missing settings file is an error."""
        assert main(["--quiet", "run", "--config", str(tmp_path / "none.json")]) == EXIT_ERROR
        assert "l1lab: error" in capsys.readouterr().err

    def test_invalid_config(self, tmp_path, capsys):
        """Test inconsistent settings are an error."""
        assert main(["--quiet", "run", "--config", _experiment_file(tmp_path, mu_bar=1)]) == EXIT_ERROR
        assert "mu_bar" in capsys.readouterr().err


@pytest.mark.slow
class TestReplicateCommand:
    """Tests for the replicate-s7 subcommand."""

    def test_short_rls_run(self, tmp_path, capsys):
        """Test a short reference run prints one summary."""
        code = main(["--quiet", "replicate-s7", "--controller", "rls", "--horizon", "200",
                     "--out", str(tmp_path)])
        summary = _json_out(capsys)
        assert summary["controller"] == "rls_baseline"
        assert code == exit_code([summary["status"]])
        assert (tmp_path / "trace.csv").exists()
