"""
Impulse response of the optimal controller and its ℓ1 norm.

The controller b(q⁻¹)u_t = (a(q⁻¹) − 1)y_{t+1} has the causal expansion
u_t = Σ_k g_k y_{t−k}, the power series of (a_1 + a_2λ + ... + a_nλ^{n−1})/b(λ).
The series is produced by ``scipy.signal.lfilter`` in blocks, carrying the
filter state, until a geometric tail bound drops below tolerance.
"""
from typing import List, Optional, Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.signal import lfilter

from .exceptions import PolynomialError, NotMinimumPhase, NonConvergent
from .polynomial import Polynomial, ArrayLike, _as_coeffs, is_minimum_phase, smallest_root_modulus
from .types import ImpulseNorm, NormOptions


def decay_rate_for(b: ArrayLike, options: NormOptions) -> float:
    """
    Geometric rate ρ < 1 dominating the decay of 1/b(λ).

    ρ sits a fraction ``decay_margin`` of the way from 1/r_min towards 1,
    unless ``decay_rate`` is configured explicitly.
    """
    if options.decay_rate is not None:
        rho = float(options.decay_rate)
    else:
        q = 1.0 / smallest_root_modulus(b)
        rho = q + options.decay_margin * (1.0 - q)
    if not 0.0 <= rho < 1.0:
        raise PolynomialError(f"Decay rate must lie in [0, 1), got {rho}")
    return rho


def _tail_bounds(g: np.ndarray, rho: float, window: int, safety: float) -> np.ndarray:
    """
    Tail bound after each index K ≥ window − 1.

    |g_k| ≤ C ρ^k with C fitted on g_{K−window+1..K} and inflated by
    ``safety``; the discarded tail is then at most C ρ^{K+1}/(1 − ρ).
    """
    weights = rho ** np.arange(window - 1, -1, -1, dtype=float)
    fitted = np.max(sliding_window_view(np.abs(g), window) * weights, axis=1)
    return safety * rho * fitted / (1.0 - rho)


def controller_impulse_response(
    a: ArrayLike,
    b: ArrayLike,
    tol: Optional[float] = None,
    max_len: Optional[int] = None,
    options: Optional[NormOptions] = None
) -> ImpulseNorm:
    """
    Compute g_0..g_K and ‖G‖ for the plant factors a (monic) and b.

    Args:
        a: a(λ) with a[0] = 1
        b: b(λ), minimum phase
        tol: relative tail tolerance (overrides options.tol)
        max_len: largest admissible number of coefficients (overrides options.max_len)
        options: remaining truncation settings

    Returns:
        ImpulseNorm with l1_norm ≤ ‖G‖ ≤ l1_norm + tail_bound

    Raises:
        NotMinimumPhase: b fails the stability test
        NonConvergent: tail bound above tolerance after max_len coefficients
        PolynomialError: a is not monic
    """
    opts = options or NormOptions()
    tol = opts.tol if tol is None else tol
    max_len = opts.max_len if max_len is None else max_len

    a_c = _as_coeffs(a)
    if a_c.size == 0 or a_c[0] != 1.0:
        raise PolynomialError("a must be monic in its constant term")
    den = Polynomial(b).trimmed()
    if not is_minimum_phase(den, opts.stability_margin):
        raise NotMinimumPhase(f"b = {den.tolist()} is not minimum phase")

    num = Polynomial(a_c[1:]).trimmed() if a_c.size > 1 else np.zeros(1)
    if not np.any(num):
        return ImpulseNorm(np.zeros(1), 0.0, 0.0, 0)

    if den.size == 1:
        g = num / den[0]
        return ImpulseNorm(g, float(np.sum(np.abs(g))), 0.0, g.size - 1)

    rho = decay_rate_for(den, opts)
    window = opts.fit_window
    # tail fitting is valid once the recursion is homogeneous
    min_len = max(window, num.size, den.size) + window

    zi = np.zeros(max(num.size, den.size) - 1)
    blocks: List[np.ndarray] = []
    count = 0
    checked = 0
    while count < max_len:
        size = min(opts.block_size, max_len - count)
        x = np.zeros(size)
        if count == 0:
            x[0] = 1.0
        y, zi = lfilter(num, den, x, zi=zi)
        blocks.append(y)
        count += size
        if count < min_len:
            continue

        g = np.concatenate(blocks)
        tails = _tail_bounds(g, rho, window, opts.safety_factor)
        partial = np.cumsum(np.abs(g))
        first_k = max(checked, min_len - 1)
        ks = np.arange(first_k, count)
        ok = tails[ks - window + 1] <= np.maximum(tol * partial[ks], opts.abs_floor)
        if np.any(ok):
            k = int(ks[np.argmax(ok)])
            return ImpulseNorm(
                coefficients=g[: k + 1],
                l1_norm=float(partial[k]),
                tail_bound=float(tails[k - window + 1]),
                truncation_length=k,
                decay_rate=rho,
            )
        checked = count

    raise NonConvergent(
        f"Tail bound above tolerance after {max_len} coefficients (decay rate {rho:.6f})"
    )


def xi_impulse_response(xi: Sequence[float], n: int, options: Optional[NormOptions] = None) -> ImpulseNorm:
    """Impulse response for ξ = (a_1..a_n, b_1..b_m)."""
    a, b = Polynomial.from_xi(xi, n)
    return controller_impulse_response(a, b, options=options)


def xi_norm(xi: Sequence[float], n: int, options: Optional[NormOptions] = None) -> float:
    """‖G^ξ‖ for ξ = (a_1..a_n, b_1..b_m)."""
    return xi_impulse_response(xi, n, options).l1_norm
