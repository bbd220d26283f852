"""Evaluation of T_sigma through the bucketed translate decomposition.

Within a bucket D_k, Cauchy-Schwarz gives

    |sum_{p in D_k} T_{m_p}(f, g)| <= (#D_k)^{1/2} (sum_{p in D_k} |T_{m_p}(f, g)|^2)^{1/2},

so sum_k (#D_k)^{1/2} ||square function of D_k||_r bounds ||T_sigma(f, g)||_r.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from bilin_tf.grid.exponents import ExponentTriple
from bilin_tf.grid.norms import lp_norm, lp_norm_values
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.multiplier.bilinear import bilinear_general, bilinear_xdep
from bilin_tf.multiplier.symbols import Arity, SymbolDescriptor
from bilin_tf.pseudo.adjoint import ADJOINT_MAPS, adjoint, adjoint_symbol, is_degenerate
from bilin_tf.pseudo.decompose import TranslateDecomposition, unit_decompose
from bilin_tf.pseudo.directional import DirectionalSymbol

logger = logging.getLogger(__name__)

DEFAULT_R = 2.0


@dataclass(frozen=True)
class BucketRecord:
    level: int
    count: int
    square_norm: float

    @property
    def term(self) -> float:
        return math.sqrt(self.count) * self.square_norm


@dataclass(frozen=True)
class BucketReport:
    records: tuple[BucketRecord, ...] = ()
    r: float = DEFAULT_R
    output_norm: float = 0.0
    assembly: float = 0.0
    geometric_series: float = 0.0
    bound_warning: bool = False
    routed_through_adjoint: bool = False
    delegated: bool = False
    weighted_count: float = 0.0
    class_norm: float = 0.0


@dataclass(frozen=True)
class BucketPlan:
    """Decomposition used for the bound and the pieces that rebuild sigma."""

    decomposition: TranslateDecomposition
    pieces: dict[int, SymbolDescriptor]
    routed_through_adjoint: bool


def _adjoint_frame(ds: DirectionalSymbol) -> DirectionalSymbol:
    frame = adjoint(ds, 1)
    # the frame must cover <A v, theta*> for v in the Nyquist square
    c, s = ADJOINT_MAPS[1].T @ np.array(frame.theta)
    reach = (abs(c) + abs(s)) * ds.grid.nyquist
    window = max(math.ceil(reach) + 1, frame.lambda_window)
    return replace(frame, window=window) if window != frame.window else frame


def plan_buckets(ds: DirectionalSymbol) -> BucketPlan:
    """Degenerate directions are decomposed in the first-adjoint frame and the
    pieces are mapped back, so they still sum to sigma."""
    if not is_degenerate(ds.angle):
        decomposition = unit_decompose(ds)
        return BucketPlan(decomposition, decomposition.pieces, False)
    decomposition = unit_decompose(_adjoint_frame(ds))
    pieces = {p: adjoint_symbol(piece, 1) for p, piece in decomposition.pieces.items()}
    return BucketPlan(decomposition, pieces, True)


def geometric_series(s: float) -> float:
    """sum over k <= 0 of 2^(k (2 - s))."""
    if s >= 2:
        return math.inf
    return 1.0 / (1.0 - 2.0 ** (s - 2.0))


def evaluate_via_buckets(
    f: SampledFunction,
    g: SampledFunction,
    ds: DirectionalSymbol,
    exponents: ExponentTriple | None = None,
    *,
    workers: int = 1,
) -> tuple[SampledFunction, BucketReport]:
    """T_sigma(f, g) = sum_k sum_{p in D_k} T_{m_p}(f, g), with the bucket report."""
    r = exponents.r if exponents is not None else DEFAULT_R
    if ds.base.arity is Arity.BILINEAR_XDEP:
        out = bilinear_xdep(f, g, ds.base)
        return out, BucketReport(r=r, output_norm=lp_norm(out, r), delegated=True)

    plan = plan_buckets(ds)
    decomposition = plan.decomposition

    def run_bucket(level: int) -> tuple[np.ndarray, BucketRecord]:
        members = decomposition.buckets[level]
        total = np.zeros(f.grid.sample_count, dtype=np.complex128)
        squares = np.zeros(f.grid.sample_count)
        for p in members:
            values = np.asarray(bilinear_general(f, g, plan.pieces[p]).samples)
            total += values
            squares += np.abs(values) ** 2
        square_norm = lp_norm_values(np.sqrt(squares), f.grid, r)
        return total, BucketRecord(level, len(members), square_norm)

    levels = sorted(decomposition.buckets)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(run_bucket, levels))

    samples = np.zeros(f.grid.sample_count, dtype=np.complex128)
    for total, _ in results:
        samples += total
    out = SampledFunction(f.grid, samples)

    s = ds.sobolev_s
    series = geometric_series(s) if results else 0.0
    bound_warning = results != [] and s >= 2
    if bound_warning:
        logger.warning(f"Sobolev exponent s = {s} >= 2: the bucket series over k does not converge")
    records = tuple(record for _, record in results)
    report = BucketReport(
        records=records,
        r=r,
        output_norm=lp_norm(out, r),
        assembly=math.fsum(record.term for record in records),
        geometric_series=series,
        bound_warning=bound_warning,
        routed_through_adjoint=plan.routed_through_adjoint,
        weighted_count=decomposition.weighted_count,
        class_norm=decomposition.norm,
    )
    return out, report
