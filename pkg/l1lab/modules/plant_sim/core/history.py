"""
Absolute-time signal storage.
"""
from typing import Iterable

import numpy as np

from .exceptions import PlantError


class History:
    """
    Growable record of a scalar signal indexed by absolute time.

    Values exist from ``origin`` up to ``last``; every index before the
    origin reads as zero.
    """

    def __init__(self, origin: int = 0, initial: Iterable[float] = (), capacity: int = 1024):
        initial = np.asarray(list(initial), dtype=float)
        self._origin = origin
        self._data = np.zeros(max(capacity, initial.size, 1))
        self._data[:initial.size] = initial
        self._size = initial.size

    @property
    def origin(self) -> int:
        return self._origin

    @property
    def last(self) -> int:
        """Time of the newest value (origin − 1 when empty)."""
        return self._origin + self._size - 1

    def __len__(self) -> int:
        return self._size

    def append(self, value: float):
        if self._size == self._data.size:
            grown = np.zeros(2 * self._data.size)
            grown[:self._size] = self._data[:self._size]
            self._data = grown
        self._data[self._size] = value
        self._size += 1

    def __getitem__(self, t: int) -> float:
        if t > self.last:
            raise PlantError(f"No value at t={t}; history ends at t={self.last}")
        if t < self._origin:
            return 0.0
        return float(self._data[t - self._origin])

    def window(self, start: int, end: int) -> np.ndarray:
        """Values at times start..end (inclusive), zero before the origin."""
        if end < start:
            return np.zeros(0)
        if end > self.last:
            raise PlantError(f"Window [{start}, {end}] reaches past t={self.last}")
        out = np.zeros(end - start + 1)
        lo = max(start, self._origin)
        if lo <= end:
            out[lo - start:] = self._data[lo - self._origin:end - self._origin + 1]
        return out

    def values(self) -> np.ndarray:
        """Copy of the stored values, oldest first."""
        return self._data[:self._size].copy()

    def times(self) -> np.ndarray:
        return np.arange(self._origin, self.last + 1)
