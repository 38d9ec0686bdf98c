"""
Polynomials in the delay variable and the Schur–Cohn (Jury) stability test.

Coefficients are stored in ascending powers of λ, so ``coeffs[0]`` is the
constant term: a(λ) = 1 + a_1 λ + ... + a_n λ^n, b(λ) = b_1 + b_2 λ + ...
"""
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from .exceptions import PolynomialError, NotMinimumPhase

ArrayLike = Union[Sequence[float], np.ndarray, "Polynomial"]

# Bisection steps for the smallest root modulus; enough for double precision.
_BISECTION_STEPS = 60


class Polynomial:
    """
    Real polynomial with ascending coefficients.

    The coefficient vector keeps its length even when trailing entries are
    zero, so the degree is the index of the last stored coefficient.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[float]):
        if isinstance(coeffs, Polynomial):
            coeffs = coeffs.coeffs
        arr = np.array(coeffs if isinstance(coeffs, np.ndarray) else list(coeffs), dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise PolynomialError("A polynomial needs a nonempty one-dimensional coefficient vector")
        arr.setflags(write=False)
        self._coeffs = arr

    @classmethod
    def monic(cls, tail: Iterable[float]) -> "Polynomial":
        """Build 1 + tail[0] λ + tail[1] λ² + ..."""
        return cls(np.concatenate(([1.0], np.asarray(list(tail), dtype=float))))

    @staticmethod
    def from_xi(xi: Sequence[float], n: int) -> Tuple["Polynomial", "Polynomial"]:
        """
        Split ξ = (a_1..a_n, b_1..b_m) into the monic a and the b polynomial.

        Raises:
            PolynomialError: ξ has no b part
        """
        xi = np.asarray(xi, dtype=float)
        if n < 0 or xi.size <= n:
            raise PolynomialError(f"ξ of length {xi.size} has no b coefficients for n={n}")
        return Polynomial.monic(xi[:n]), Polynomial(xi[n:])

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree(self) -> int:
        return self._coeffs.size - 1

    def trimmed(self) -> np.ndarray:
        """Coefficients without trailing zeros (at least one entry)."""
        nz = np.flatnonzero(self._coeffs)
        if nz.size == 0:
            return self._coeffs[:1].copy()
        return self._coeffs[: nz[-1] + 1].copy()

    def reversed(self) -> "Polynomial":
        """λ^d p(1/λ) for the true degree d."""
        return Polynomial(self.trimmed()[::-1])

    def scaled(self, r: float) -> "Polynomial":
        """p(rλ)."""
        return Polynomial(self._coeffs * r ** np.arange(self._coeffs.size))

    def __call__(self, lam):
        return np.polynomial.polynomial.polyval(lam, self._coeffs)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(np.convolve(self._coeffs, _as_coeffs(other)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self):
        return hash(self._coeffs.tobytes())

    def __len__(self) -> int:
        return self._coeffs.size

    def __repr__(self) -> str:
        return f"Polynomial({self._coeffs.tolist()})"

    def to_list(self) -> list:
        return self._coeffs.tolist()


def _as_coeffs(p: ArrayLike) -> np.ndarray:
    if isinstance(p, Polynomial):
        return p.coeffs
    return np.asarray(p, dtype=float)


def jury_margin(p: ArrayLike) -> float:
    """
    Schur–Cohn stability margin of p (ascending coefficients).

    Returns the smallest ``1 - |k|`` over the reflection coefficients of the
    reduction chain. The value is positive iff every root of p lies strictly
    inside the unit disk and is at most zero otherwise. A nonzero constant
    has no roots and gets margin 1.

    Raises:
        PolynomialError: p is identically zero
    """
    c = Polynomial(_as_coeffs(p)).trimmed()
    if not np.any(c):
        raise PolynomialError("The zero polynomial has no stability margin")

    margin = 1.0
    while c.size > 1:
        c0, cN = c[0], c[-1]
        k = c0 / cN
        margin = min(margin, 1.0 - abs(k))
        if margin <= 0.0:
            return margin
        c = cN * c[1:] - c0 * c[::-1][1:]
        c = c / np.max(np.abs(c))
    return margin


def is_minimum_phase(b: ArrayLike, stability_margin: float = 1e-9) -> bool:
    """
    True iff every root of b(λ) has modulus greater than one.

    The test runs the Schur–Cohn reduction on the reversed polynomial, whose
    roots are the reciprocals of those of b. A pass with a margin below
    ``stability_margin`` counts as a failure.

    Raises:
        NotMinimumPhase: b_1 = 0
    """
    c = Polynomial(_as_coeffs(b)).trimmed()
    if c[0] == 0.0:
        raise NotMinimumPhase("b_1 must be nonzero")
    if c.size == 1:
        return True
    return jury_margin(c[::-1]) >= stability_margin


def smallest_root_modulus(b: ArrayLike) -> float:
    """
    Lower bound on the smallest root modulus of a minimum-phase b(λ).

    Bisects on r: b(rλ) is minimum phase iff all roots of b exceed r in
    modulus. Returns ``inf`` for a constant b.

    Raises:
        NotMinimumPhase: b is not minimum phase
    """
    c = Polynomial(_as_coeffs(b)).trimmed()
    if not is_minimum_phase(c, stability_margin=0.0):
        raise NotMinimumPhase(f"b = {c.tolist()} has a root in the closed unit disk")
    d = c.size - 1
    if d == 0:
        return float("inf")

    lo = 1.0
    # the product of root moduli is |b_1 / b_d|, so some root lies below its d-th root
    hi = (abs(c[0]) / abs(c[-1])) ** (1.0 / d) * (1.0 + 1e-6)
    powers = np.arange(c.size)
    for _ in range(_BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if jury_margin((c * mid ** powers)[::-1]) > 0.0:
            lo = mid
        else:
            hi = mid
    return lo
