"""
Plant service - builds plant states and disturbance sources for runs.
"""
from typing import Optional, Sequence, Tuple

import numpy as np

from l1lab.core.core_apis import CoreLoggerAPI

from .core.disturbance import DisturbanceGenerator, DisturbanceSpec
from .core.plant import PlantParams, PlantState, step
from .core.rng import seeded_streams, random_initial_outputs


class PlantService:
    """Factory for the per-run plant objects."""

    def __init__(self, capacity: int = 4096):
        self.capacity = capacity
        self._logger: Optional[CoreLoggerAPI] = None

    def set_logger(self, logger: Optional[CoreLoggerAPI]):
        self._logger = logger

    def prepare(self, params: PlantParams, spec: DisturbanceSpec, seed: int,
                y_init: Optional[Sequence[float]] = None) -> Tuple[PlantState, DisturbanceGenerator]:
        """
        Initial state and disturbance generator for one seeded run.

        Initial outputs are drawn uniformly on [−1, 1] unless given.
        """
        init_rng, stream = seeded_streams(seed)
        if y_init is None:
            y_init = random_initial_outputs(init_rng, params.n)
        state = PlantState.create(params.n, params.m, y_init, capacity=self.capacity)
        if self._logger:
            self._logger.log(f"Plant n={params.n} m={params.m} seed={seed} "
                             f"y0={np.round(state.y.values(), 4).tolist()}", level="DEBUG", tag="plant")
        return state, DisturbanceGenerator(spec, stream)

    @staticmethod
    def step(state: PlantState, params: PlantParams, u_t: float, v_next: float) -> float:
        return step(state, params, u_t, v_next)
