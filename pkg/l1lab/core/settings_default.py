# l1lab/core/settings_default.py
"""
Default settings values.

The ``experiment`` section reproduces the reference closed-loop study:
an unstable fourth-order plant with a double zero at 1.2, the disturbance
gains (1, 0.2, 0.02), memory 20 and a fixed dead zone of 0.001.
"""
import copy

from l1lab.core.core_apis import CoreConfigAPI

S7_XI = [-4.2222, 6.9290, -5.2469, 1.5432, 2.0000, -3.3333, 1.3889]
S7_XI0 = [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0]
S7_WORST_CASE_WINDOWS = [[801, 810], [1201, 1210]]

DEFAULT_SETTINGS = {
    "modules": [
        {
            "path": "{l1lab_dir}/modules",
            "names": [
                "system_logger",
                "poly_core",
                "lfp_solver",
                "plant_sim",
                "set_estimator",
                "controllers",
                "experiment"
            ]
        }
    ],
    "system": {
        "auto_shutdown": True
    },
    "logs": {
        "show_logs": True,
        "show_banner": False,
        "hide_log_levels": ["DEBUG"],
        "hide_log_tags": [],
        "debug_mode": False
    },
    "information": {
        "project_name": "l1lab",
        "project_version": "0.1.0",
        "project_info": "Adaptive l1-optimal robust stabilization laboratory"
    },
    "template": {
        "project_banner_template": "\n\t{project_name}\n\t{project_version}\n\t{project_info}\n",
        "system_log_template": "[{level}]\t{message}",
        "banner_color_code": "33",
        "system_log_color_code": "96"
    },
    "norm": {
        "tol": 1e-9,
        "abs_floor": 1e-12,
        "max_len": 100000,
        "safety_factor": 2.0,
        "fit_window": 10,
        "decay_margin": 0.05,
        "decay_rate": None,
        "stability_margin": 1e-9,
        "block_size": 256
    },
    "solver": {
        "feasibility_tol": 1e-8,
        "pivot_tol": 1e-10,
        "iteration_factor": 50,
        "sigma_min": 1e-9,
        "refactor_every": 25,
        "verify_tol": 1e-7,
        "max_refinements": 50
    },
    "projection": {
        "tol": 1e-10,
        "max_sweeps": 10000,
        "feasibility_tol": 1e-8
    },
    "experiment": {
        "plant": {
            "xi": S7_XI,
            "n": 4,
            "delta_w": 1.0,
            "delta_y": 0.2,
            "delta_u": 0.02,
            "mu": 20
        },
        "xi_polytope": None,
        "controller": {
            "kind": "adaptive_optimal",
            "xi0": S7_XI0,
            "rls_p0": 0.001
        },
        "disturbance": {
            "kind": "random_uniform",
            "base_kind": "random_uniform",
            "windows": S7_WORST_CASE_WINDOWS,
            "sequence_path": None,
            "trig_frequency": 5.0
        },
        "estimator": {
            "eps_mode": "fixed",
            "eps": 0.001,
            "g_upper": None,
            "g_upper_samples": 256,
            "delta_bar": 0.9,
            "E": 0.1,
            "kappa": 1.1,
            "varkappa": 0.95,
            "eps_floor": 1e-8,
            "criterion": "ratio",
            "on_falsified": "halt",
            "max_widenings": 8
        },
        "horizon": 2000,
        "mu_bar": 40,
        "J_star": None,
        "seed": 0,
        "initial_y": None,
        "steady_fraction": 0.25,
        "certify_true_bound": True
    },
    "output": {
        "dir": "{app_dir}/runs",
        "trace": "trace.csv",
        "summary": "summary.json",
        "updates": "updates.csv",
        "disturbance": "disturbance.csv",
        "summaries": "summaries.json"
    },
    "batch": {
        "workers": None
    }
}


class DefaultConfig(CoreConfigAPI):
    """
    Simple default config class.
    This class is used when the main config does not exist.
    """
    def get(self, key: str) -> None:
        """Always returns None."""
        return None


def get_default_settings() -> dict:
    """
    Get default settings values.

    Returns:
        Deep copy of the defaults, safe to mutate
    """
    return copy.deepcopy(DEFAULT_SETTINGS)
