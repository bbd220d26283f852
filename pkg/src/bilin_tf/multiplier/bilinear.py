"""Bilinear multipliers on the grid.

All evaluators compute

    T(f, g)(x_j) = (1/L^2) sum_{k,l} c_k(f) c_l(g) s(xi_k, xi_l) e^{i(xi_k + xi_l) x_j}

by accumulating the output spectrum at tau = k + l. Indices k, l run over
[-N/2, N/2), so tau runs over [-N, N - 2]; since N is even,
e^{i xi_tau x_j} = e^{i xi_{tau mod N} x_j} exactly on the grid and the
accumulator is folded modulo N before the inverse transform.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from bilin_tf.errors import GridError, SizeGuardError
from bilin_tf.grid.sampled import SampledFunction, forward_transform, inverse_transform
from bilin_tf.grid.spec import GridSpec
from bilin_tf.multiplier.symbols import Arity, StripSupport, SymbolDescriptor, lift_diagonal

logger = logging.getLogger(__name__)

XDEP_MAX_SAMPLES = 1024


def _centered_spectra(
    f: SampledFunction, g: SampledFunction
) -> tuple[GridSpec, np.ndarray, np.ndarray]:
    if f.grid != g.grid:
        raise GridError(f"grid mismatch: {f.grid} vs {g.grid}")
    return (
        f.grid,
        np.fft.fftshift(forward_transform(f)),
        np.fft.fftshift(forward_transform(g)),
    )


def _fold(grid: GridSpec, accumulator: np.ndarray) -> SampledFunction:
    """Fold the tau accumulator (index tau + N) into an output function."""
    n = grid.sample_count
    folded = accumulator[:n] + accumulator[n:]
    centered = np.roll(folded, -n // 2)
    return inverse_transform(grid, np.fft.ifftshift(centered) / grid.period_length)


def bilinear_diagonal(f: SampledFunction, g: SampledFunction, s: SymbolDescriptor) -> SampledFunction:
    """T(f, g) for s(xi, eta) = s1(xi - eta).

    Loops over the differences delta = k - l where s1 is nonzero and adds the
    whole diagonal at once, so the cost is O(N log N + N * B) with B the
    number of active differences.
    """
    s.require(Arity.BILINEAR_DIAGONAL)
    grid, fc, gc = _centered_spectra(f, g)
    n = grid.sample_count
    half = n // 2
    deltas = np.arange(-(n - 1), n)
    weights = s(deltas * grid.frequency_step)
    active = np.flatnonzero(weights)
    accumulator = np.zeros(2 * n, dtype=np.complex128)
    for position in active:
        delta = int(deltas[position])
        k_lo, k_hi = max(-half, -half + delta), min(half - 1, half - 1 + delta)
        count = k_hi - k_lo + 1
        a = k_lo + half
        products = fc[a : a + count] * gc[a - delta : a - delta + count]
        start = 2 * k_lo - delta + n
        accumulator[start : start + 2 * count : 2] += weights[position] * products
    logger.debug("bilinear_diagonal %s: %d active differences", s.name, active.size)
    return _fold(grid, accumulator)


def _row_window(
    hint: StripSupport | None, xi: float, grid: GridSpec
) -> tuple[int, int] | None:
    """Centered l-range of row xi_k inside a strip hint, or None if empty."""
    half = grid.sample_count // 2
    if hint is None:
        return -half, half - 1
    lo, hi = hint.interval.lo, hint.interval.hi
    if hint.lambda2 == 0:
        projected = hint.lambda1 * xi
        return (-half, half - 1) if lo <= projected <= hi else None
    bounds = sorted(((lo - hint.lambda1 * xi) / hint.lambda2, (hi - hint.lambda1 * xi) / hint.lambda2))
    l_lo = max(-half, math.floor(bounds[0] / grid.frequency_step) - 1)
    l_hi = min(half - 1, math.ceil(bounds[1] / grid.frequency_step) + 1)
    return (l_lo, l_hi) if l_lo <= l_hi else None


def bilinear_general(f: SampledFunction, g: SampledFunction, s: SymbolDescriptor) -> SampledFunction:
    """T(f, g) for a general symbol s(xi, eta), row by row over k.

    A strip hint restricts each row to the l-range meeting the strip.
    """
    if s.arity is Arity.BILINEAR_DIAGONAL:
        s = lift_diagonal(s)
    s.require(Arity.BILINEAR_GENERAL)
    grid, fc, gc = _centered_spectra(f, g)
    n = grid.sample_count
    half = n // 2
    hint = s.support_hint if isinstance(s.support_hint, StripSupport) else None
    step = grid.frequency_step
    accumulator = np.zeros(2 * n, dtype=np.complex128)
    for k in np.flatnonzero(fc) - half:
        window = _row_window(hint, k * step, grid)
        if window is None:
            continue
        l_lo, l_hi = window
        ls = np.arange(l_lo, l_hi + 1)
        row = s(np.full(ls.shape, k * step), ls * step) * gc[ls + half]
        accumulator[k + l_lo + n : k + l_hi + n + 1] += fc[k + half] * row
    return _fold(grid, accumulator)


def exponential_matrix(grid: GridSpec) -> np.ndarray:
    """E[j, k] = e^{i xi_k x_j} with k in FFT order, from the twiddle table."""
    n = grid.sample_count
    j = np.arange(n, dtype=np.int64)[:, None]
    k = grid.frequency_indices[None, :]
    return grid.sign_alternation[None, :] * grid.twiddle[(j * k) % n]


def bilinear_xdep(
    f: SampledFunction,
    g: SampledFunction,
    s: SymbolDescriptor,
    *,
    allow_large: bool = False,
) -> SampledFunction:
    """T_sigma(f, g) for sigma(x, xi, eta) by direct O(N^3) summation."""
    s.require(Arity.BILINEAR_XDEP)
    if f.grid != g.grid:
        raise GridError(f"grid mismatch: {f.grid} vs {g.grid}")
    grid = f.grid
    if grid.sample_count > XDEP_MAX_SAMPLES and not allow_large:
        raise SizeGuardError(
            f"bilinear_xdep is O(N^3); N={grid.sample_count} exceeds {XDEP_MAX_SAMPLES}"
            " (pass allow_large=True to override)"
        )
    exponentials = exponential_matrix(grid)
    fv = exponentials * forward_transform(f)[None, :]
    gv = exponentials * forward_transform(g)[None, :]
    xi = grid.frequencies
    values = np.empty(grid.sample_count, dtype=np.complex128)
    for j, x in enumerate(grid.points):
        sigma = s(np.full((1, 1), x), xi[:, None], xi[None, :])
        values[j] = fv[j] @ sigma @ gv[j]
    return SampledFunction(grid, values / grid.period_length**2)


def apply_bilinear(f: SampledFunction, g: SampledFunction, s: SymbolDescriptor) -> SampledFunction:
    """Dispatch to the evaluator matching the symbol arity."""
    match s.arity:
        case Arity.BILINEAR_DIAGONAL:
            return bilinear_diagonal(f, g, s)
        case Arity.BILINEAR_GENERAL:
            return bilinear_general(f, g, s)
        case Arity.BILINEAR_XDEP:
            return bilinear_xdep(f, g, s)
    s.require(Arity.BILINEAR_DIAGONAL, Arity.BILINEAR_GENERAL, Arity.BILINEAR_XDEP)
    raise AssertionError("unreachable")


def direct_double_sum(f: SampledFunction, g: SampledFunction, s: SymbolDescriptor) -> SampledFunction:
    """Brute-force physical-space evaluation for x-independent symbols (small N)."""
    if s.arity is Arity.BILINEAR_DIAGONAL:
        s = lift_diagonal(s)
    s.require(Arity.BILINEAR_GENERAL)
    if f.grid != g.grid:
        raise GridError(f"grid mismatch: {f.grid} vs {g.grid}")
    grid = f.grid
    if grid.sample_count > XDEP_MAX_SAMPLES:
        raise SizeGuardError(f"direct double sum limited to N <= {XDEP_MAX_SAMPLES}")
    exponentials = exponential_matrix(grid)
    xi = grid.frequencies
    matrix = s(xi[:, None], xi[None, :])
    left = exponentials * forward_transform(f)[None, :]
    right = exponentials * forward_transform(g)[None, :]
    values = ((left @ matrix) * right).sum(axis=1)
    return SampledFunction(grid, values / grid.period_length**2)
