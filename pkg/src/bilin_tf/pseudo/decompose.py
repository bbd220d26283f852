"""Unit-translate decomposition m = sum_p chi(lam - p) m along a direction,
with the pieces grouped into buckets D_k by their local mass."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import integrate

from bilin_tf.intervals.bump import BumpSymbol, unit_partition_bump
from bilin_tf.intervals.interval import Interval
from bilin_tf.multiplier.symbols import Arity, StripSupport, SymbolDescriptor, general_symbol
from bilin_tf.pseudo.directional import (
    LAMBDA_STEP,
    DirectionalSymbol,
    directional_profile,
    lp_integral,
)

logger = logging.getLogger(__name__)

# lam-mesh points per unit
MESH_PER_UNIT = round(1 / LAMBDA_STEP)


def partition_weight(lam: np.ndarray, p: int, chi: BumpSymbol | None = None) -> np.ndarray:
    """chi(lam - p) divided by the telescoped sum chi(y) + chi(y - 1), y = frac(lam)."""
    chi = chi or unit_partition_bump()
    lam = np.asarray(lam, dtype=float)
    frac = lam - np.floor(lam)
    total = chi(frac) + chi(frac - 1.0)
    return np.real(chi(lam - p)) / np.real(total)


def single_window(ds: DirectionalSymbol) -> int | None:
    """The p whose window [p - 1, p + 1] holds the whole declared strip support, if any."""
    hint = ds.base.support_hint
    if not isinstance(hint, StripSupport):
        return None
    c, s = ds.theta
    scale = hint.lambda1 * c + hint.lambda2 * s
    cross = hint.lambda1 * s - hint.lambda2 * c
    if scale == 0 or abs(cross) > 1e-12 * math.hypot(hint.lambda1, hint.lambda2):
        return None
    lo, hi = sorted((hint.interval.lo / scale, hint.interval.hi / scale))
    p = round(0.5 * (lo + hi))
    return p if p - 1 <= lo and hi <= p + 1 else None


def translate_piece(ds: DirectionalSymbol, p: int, *, whole: bool = False) -> SymbolDescriptor:
    """m_p = chi(lam - p) m, or m itself when it already sits in one window."""
    c, s = ds.theta
    evaluate = ds.base.evaluator
    chi = unit_partition_bump()
    hint = StripSupport(Interval(float(p), 2.0), c, s)
    if whole:
        return general_symbol(
            evaluate, support_hint=hint, gradient=ds.base.gradient, name=f"{ds.base.name}[p={p}]"
        )

    def piece(xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        xi, eta = np.broadcast_arrays(np.asarray(xi, dtype=float), np.asarray(eta, dtype=float))
        weight = partition_weight(c * xi + s * eta, p, chi)
        out = np.zeros(xi.shape, dtype=np.complex128)
        active = weight != 0
        out[active] = weight[active] * evaluate(xi[active], eta[active])
        return out

    return general_symbol(piece, support_hint=hint, name=f"{ds.base.name}[p={p}]")


@dataclass(frozen=True)
class TranslateDecomposition:
    symbol: DirectionalSymbol
    pieces: dict[int, SymbolDescriptor]
    partition_bump: BumpSymbol
    buckets: dict[int, tuple[int, ...]]
    bucket_weights: dict[int, tuple[float, ...]]
    window: int
    norm: float

    @cached_property
    def weighted_count(self) -> float:
        """sum_k 2^(k s) #D_k."""
        s = self.symbol.sobolev_s
        return math.fsum(2.0 ** (k * s) * len(members) for k, members in self.buckets.items())

    @property
    def ratio(self) -> float:
        if self.norm > 0:
            return self.weighted_count / self.norm**self.symbol.sobolev_s
        return 0.0 if self.weighted_count == 0 else math.inf

    def bucket_of(self, p: int) -> int | None:
        for k, members in self.buckets.items():
            if p in members:
                return k
        return None


def unit_decompose(ds: DirectionalSymbol) -> TranslateDecomposition:
    """Pieces m_p over the lam-window, and D_k = {p : 2^k <= int_{p-1}^{p+1} F < 2^(k+1)}."""
    ds.base.require(Arity.BILINEAR_GENERAL)
    lam = ds.lambda_mesh
    profile = directional_profile(ds, 0)
    window = ds.lambda_window
    norm = lp_integral(profile, lam, ds.sobolev_s)

    only = single_window(ds)
    candidates = [only] if only is not None else range(-window + 1, window)
    buckets: dict[int, list[int]] = {}
    weights: dict[int, list[float]] = {}
    pieces: dict[int, SymbolDescriptor] = {}
    for p in candidates:
        start = (p - 1 + window) * MESH_PER_UNIT
        stop = (p + 1 + window) * MESH_PER_UNIT + 1
        segment = profile[max(start, 0) : stop]
        if len(segment) < 3:
            continue
        mass = float(integrate.simpson(segment, x=lam[max(start, 0) : stop]))
        if not mass > 0:
            continue
        k = math.floor(math.log2(mass))
        buckets.setdefault(k, []).append(p)
        weights.setdefault(k, []).append(mass)
        pieces[p] = translate_piece(ds, p, whole=only is not None)

    logger.debug(
        f"unit decomposition of {ds.base.name}: {len(pieces)} pieces in {len(buckets)} buckets"
    )
    return TranslateDecomposition(
        ds,
        pieces,
        unit_partition_bump(),
        {k: tuple(v) for k, v in sorted(buckets.items())},
        {k: tuple(v) for k, v in sorted(weights.items())},
        window,
        norm,
    )
