"""Finite Whitney refinement of a well-distributed collection.

Each omega is covered by N + 1 overlapping pieces

    omega_i = [nu_i, nu_{i+2}],   nu_m = lo(omega) + m |omega| / N,

for i = -1, ..., N - 1, with N = ceil(4 kappa). Then kappa * omega_i sits
inside 2 * omega, so every refined sub-collection inherits the overlap bound
of the dilates 2 * omega.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.intervals.bump import smooth_step
from bilin_tf.intervals.collection import IntervalCollection, overlap_constant
from bilin_tf.intervals.interval import FreqInterval

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WhitneyCutoff:
    """chi_{omega,i}: rises on [nu_i, nu_{i+1}], falls on [nu_{i+1}, nu_{i+2}]."""

    parent: FreqInterval
    index: int
    divisions: int

    @property
    def piece(self) -> FreqInterval:
        step = self.parent.length / self.divisions
        lo = self.parent.lo + self.index * step
        return FreqInterval.from_endpoints(lo, lo + 2 * step)

    def __call__(self, xi: np.ndarray | float) -> np.ndarray:
        step = self.parent.length / self.divisions
        u = (np.asarray(xi, dtype=float) - (self.parent.lo + self.index * step)) / step
        return np.where(u <= 1.0, smooth_step(u), smooth_step(2.0 - u))


@dataclass(frozen=True)
class WhitneyPiece:
    index: int
    collection: IntervalCollection
    cutoffs: tuple[WhitneyCutoff, ...]


def whitney_divisions(kappa: float) -> int:
    return math.ceil(4 * kappa)


def whitney_refine(c: IntervalCollection, kappa: float) -> list[WhitneyPiece]:
    """Split ``c`` into sub-collections Omega_i, i = -1..N-1, with cutoff families."""
    if kappa < 2:
        raise ParameterError(f"kappa must be >= 2, got {kappa}")
    divisions = whitney_divisions(kappa)
    bound = overlap_constant(c, 2.0)
    logger.debug("refining %d intervals with N=%d, overlap bound %d", len(c), divisions, bound)

    low, high = c.length_range
    piece_range = (2 * low / divisions, 2 * high / divisions)
    pieces = []
    for index in range(-1, divisions):
        cutoffs = tuple(WhitneyCutoff(omega, index, divisions) for omega in c)
        pieces.append(
            WhitneyPiece(
                index=index,
                collection=IntervalCollection(
                    tuple(cutoff.piece for cutoff in cutoffs), piece_range, kappa
                ),
                cutoffs=cutoffs,
            )
        )
    return pieces
