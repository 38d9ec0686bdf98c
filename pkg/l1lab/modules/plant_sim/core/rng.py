"""
Seeded random streams.

Both streams derive from one seed through ``SeedSequence.spawn`` over the
Philox counter-based generator, so results do not depend on the platform
or on how many values other parts of the run consumed.
"""
from typing import Tuple

import numpy as np


class DisturbanceStream:
    """
    Per-step draws (w, δ¹, δ²), each uniform on [−1, 1].

    Step t reads Philox at counter t under a fixed key, so the draws are a
    pure function of (seed, t): every disturbance kind and every
    controller sees the same w-sequence for a given seed.
    """

    def __init__(self, key: np.ndarray):
        self._key = np.asarray(key, dtype=np.uint64)

    @classmethod
    def from_seed(cls, seed: int) -> "DisturbanceStream":
        return seeded_streams(seed)[1]

    def draws(self, t: int) -> np.ndarray:
        bitgen = np.random.Philox(key=self._key, counter=t)
        return np.random.Generator(bitgen).uniform(-1.0, 1.0, 3)


def seeded_streams(seed: int) -> Tuple[np.random.Generator, DisturbanceStream]:
    """
    (initial-data generator, disturbance stream) for an experiment seed.
    """
    init_seq, dist_seq = np.random.SeedSequence(seed).spawn(2)
    init_rng = np.random.Generator(np.random.Philox(init_seq))
    return init_rng, DisturbanceStream(dist_seq.generate_state(2, dtype=np.uint64))


def random_initial_outputs(rng: np.random.Generator, n: int) -> np.ndarray:
    """y_{1−n}..y_0 uniform on [−1, 1]."""
    return rng.uniform(-1.0, 1.0, n)
