"""Translated families phi_n = phi(. - n) of diagonal symbols.

phi is cut into unit translates phi_p = chi(. - p) phi, and

    ||(sum_n |T_{phi_n}(f, g)|^2)^{1/2}||_r <= sum_p ||(sum_n |T_{phi_{p,n}}(f, g)|^2)^{1/2}||_r

by Minkowski; the right side converges when ||phi_p||_inf decays in p.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.grid.exponents import ExponentTriple
from bilin_tf.grid.norms import lp_norm_values
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.intervals.interval import Interval
from bilin_tf.multiplier.bilinear import bilinear_diagonal
from bilin_tf.multiplier.symbols import (
    Arity,
    IntervalSupport,
    SymbolDescriptor,
    diagonal_symbol,
)
from bilin_tf.pseudo.decompose import partition_weight

logger = logging.getLogger(__name__)

DECAY_FIT_RANGE = (-16, 16)
SUP_MESH_POINTS = 1001
MIN_DECAY = 1.0
COMPARISON_SLACK = 1e-10


@dataclass(frozen=True)
class TranslatedFamilyReport:
    direct: float
    assembly: float
    pieces: tuple[int, ...]
    piece_norms: tuple[float, ...]
    decay_exponent: float
    decay_warning: bool
    n_range: tuple[int, int]

    @property
    def holds(self) -> bool:
        return self.direct <= self.assembly + COMPARISON_SLACK


def _shifted(profile: SymbolDescriptor, shift: float, support: Interval | None) -> SymbolDescriptor:
    evaluate = profile.evaluator
    hint = IntervalSupport(support.shift(shift)) if support is not None else None
    return diagonal_symbol(
        SymbolDescriptor(
            Arity.LINEAR_1D,
            lambda lam: evaluate(lam - shift),
            hint,
            profile.smoothness,
            name=f"{profile.name}(.-{shift:g})",
        )
    )


def translate_profile(phi: SymbolDescriptor, p: int) -> SymbolDescriptor:
    """phi_p = chi(. - p) phi, supported in [p - 1, p + 1]."""
    evaluate = phi.evaluator

    def piece(lam: np.ndarray) -> np.ndarray:
        lam = np.asarray(lam, dtype=float)
        weight = partition_weight(lam, p)
        out = np.zeros(lam.shape, dtype=np.complex128)
        active = weight != 0
        out[active] = weight[active] * evaluate(lam[active])
        return out

    return SymbolDescriptor(
        Arity.LINEAR_1D, piece, IntervalSupport(Interval(float(p), 2.0)), phi.smoothness, f"{phi.name}_p{p}"
    )


def piece_sup(phi: SymbolDescriptor, p: int) -> float:
    mesh = np.linspace(p - 1.0, p + 1.0, SUP_MESH_POINTS)
    return float(np.abs(translate_profile(phi, p)(mesh)).max())


def fit_decay(phi: SymbolDescriptor, fit_range: tuple[int, int] = DECAY_FIT_RANGE) -> float:
    """M in ||phi_p||_inf ~ (1 + |p|)^(-M), fitted over p in ``fit_range``."""
    ps = np.arange(fit_range[0], fit_range[1] + 1)
    sups = np.array([piece_sup(phi, int(p)) for p in ps])
    keep = sups > 0
    if np.count_nonzero(keep) < 2:
        return math.inf
    slope, _ = np.polyfit(np.log1p(np.abs(ps[keep])), np.log(sups[keep]), 1)
    return float(-slope)


def _single_window(phi: SymbolDescriptor) -> int | None:
    if not isinstance(phi.support_hint, IntervalSupport):
        return None
    support = phi.support_hint.interval
    p = round(support.center)
    return p if p - 1 <= support.lo and support.hi <= p + 1 else None


def _square_norm(
    f: SampledFunction, g: SampledFunction, profile: SymbolDescriptor, ns: range, r: float
) -> float:
    support = profile.support_hint.interval if isinstance(profile.support_hint, IntervalSupport) else None
    squares = np.zeros(f.grid.sample_count)
    for n in ns:
        values = bilinear_diagonal(f, g, _shifted(profile, float(n), support)).samples
        squares += np.abs(values) ** 2
    return lp_norm_values(np.sqrt(squares), f.grid, r)


def translated_family_bound(
    phi: SymbolDescriptor,
    f: SampledFunction,
    g: SampledFunction,
    exponents: ExponentTriple,
    n_range: tuple[int, int],
) -> TranslatedFamilyReport:
    """Direct square-function norm against the Minkowski assembly over p.

    ``n_range`` is inclusive on both ends.
    """
    phi.require(Arity.LINEAR_1D)
    n_lo, n_hi = n_range
    if n_lo > n_hi:
        raise ParameterError(f"empty translate range {n_range}")
    ns = range(n_lo, n_hi + 1)
    r = exponents.r
    decay = fit_decay(phi)
    decay_warning = decay < MIN_DECAY
    if decay_warning:
        logger.warning(
            f"profile {phi.name} does not decay (fitted exponent {decay:.3g});"
            " the assembly over p may diverge on the window"
        )

    if f.is_zero() or g.is_zero():
        return TranslatedFamilyReport(0.0, 0.0, (), (), decay, decay_warning, n_range)

    direct = _square_norm(f, g, phi, ns, r)
    only = _single_window(phi)
    if only is not None:
        return TranslatedFamilyReport(
            direct, direct, (only,), (piece_sup(phi, only),), decay, decay_warning, n_range
        )

    # p beyond the reachable differences contribute nothing on the grid
    reach = 2 * f.grid.nyquist + max(abs(n_lo), abs(n_hi)) + 1
    pieces = []
    norms = []
    assembly = []
    for p in range(-math.ceil(reach), math.ceil(reach) + 1):
        sup = piece_sup(phi, p)
        if sup == 0:
            continue
        pieces.append(p)
        norms.append(sup)
        assembly.append(_square_norm(f, g, translate_profile(phi, p), ns, r))
    return TranslatedFamilyReport(
        direct,
        math.fsum(assembly),
        tuple(pieces),
        tuple(norms),
        decay,
        decay_warning,
        n_range,
    )
