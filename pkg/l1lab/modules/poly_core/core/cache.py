"""
Memoized controller norms keyed on the exact bits of ξ.
"""
from collections import OrderedDict
from typing import Any, Dict, Optional, Sequence

import numpy as np

from .impulse import xi_impulse_response
from .types import ImpulseNorm, NormOptions


class NormCache:
    """
    LRU cache of ‖G^ξ‖.

    The optimal estimate returned by the fractional program is a vertex of
    the current polyhedron and repeats between updates, so the controller
    and the estimator look up the same ξ many times. Keys are the raw bytes
    of ξ: two vectors share an entry only if they are bitwise equal.
    """

    def __init__(self, n: int, options: Optional[NormOptions] = None, max_size: int = 4096):
        """
        Initialize the cache.

        Args:
            n: Degree of a (splits ξ into a and b)
            options: Truncation settings for every computed norm
            max_size: Maximum number of entries
        """
        self.n = n
        self.options = options or NormOptions()
        self._max_size = max_size
        self._entries: "OrderedDict[bytes, ImpulseNorm]" = OrderedDict()

        # Statistics
        self._hits = 0
        self._misses = 0
        self._evictions = 0

    @staticmethod
    def _key(xi: Sequence[float]) -> bytes:
        return np.ascontiguousarray(xi, dtype=float).tobytes()

    def impulse(self, xi: Sequence[float]) -> ImpulseNorm:
        """Impulse response of the controller for ξ, computed once per distinct ξ."""
        key = self._key(xi)
        entry = self._entries.get(key)
        if entry is not None:
            self._entries.move_to_end(key)
            self._hits += 1
            return entry

        self._misses += 1
        entry = xi_impulse_response(xi, self.n, self.options)
        while len(self._entries) >= self._max_size:
            self._entries.popitem(last=False)
            self._evictions += 1
        self._entries[key] = entry
        return entry

    def norm(self, xi: Sequence[float]) -> float:
        """‖G^ξ‖ (the truncated sum)."""
        return self.impulse(xi).l1_norm

    def __contains__(self, xi) -> bool:
        return self._key(xi) in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def clear(self):
        self._entries.clear()

    @property
    def stats(self) -> Dict[str, Any]:
        total = self._hits + self._misses
        return {
            "size": len(self._entries),
            "max_size": self._max_size,
            "hits": self._hits,
            "misses": self._misses,
            "evictions": self._evictions,
            "hit_rate": self._hits / total if total else 0.0,
        }
