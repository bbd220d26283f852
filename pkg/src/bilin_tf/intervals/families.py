"""Standard interval families: dyadic, unit translates, random well-distributed."""

from __future__ import annotations

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.interval import FreqInterval


def dyadic_collection(n_min: int, n_max: int, *, symmetric: bool = True) -> IntervalCollection:
    """[2^n, 2^(n+1)) for n_min <= n <= n_max, mirrored to the negative axis."""
    if n_min > n_max:
        raise ParameterError(f"empty dyadic range [{n_min}, {n_max}]")
    positive = [FreqInterval.from_endpoints(2.0**n, 2.0 ** (n + 1)) for n in range(n_min, n_max + 1)]
    negative = [FreqInterval.from_endpoints(-w.hi, -w.lo) for w in reversed(positive)]
    return IntervalCollection.of([*negative, *positive] if symmetric else positive)


def unit_translates(n_min: int, n_max: int, length: float = 1.0) -> IntervalCollection:
    """Carleson-type family [n l, (n + 1) l) for n_min <= n <= n_max."""
    if n_min > n_max:
        raise ParameterError(f"empty translate range [{n_min}, {n_max}]")
    intervals = [
        FreqInterval.from_endpoints(n * length, (n + 1) * length) for n in range(n_min, n_max + 1)
    ]
    return IntervalCollection(tuple(intervals), (length, length))


def random_well_distributed(
    count: int,
    rng_seed: int,
    *,
    length_band: tuple[float, float] = (1.0, 1.0),
    separation: float = 2.0,
    jitter: float = 0.5,
    center: float = 0.0,
    kappa: float = 2.0,
) -> IntervalCollection:
    """Random intervals with lengths in ``length_band`` laid out left to right.

    Consecutive centers are ``separation * (l_i + l_{i+1}) / 2`` apart plus a
    uniform jitter in ``[0, jitter * mean length)``. With separation >= 2 the
    dilates 2*omega are pairwise disjoint; smaller separations give bounded,
    nontrivial overlap.
    """
    if count < 1:
        raise ParameterError(f"count must be positive, got {count}")
    low, high = length_band
    if not 0 < low <= high:
        raise ParameterError(f"invalid length band {length_band}")
    if separation <= 0:
        raise ParameterError(f"separation must be positive, got {separation}")
    rng = np.random.default_rng(rng_seed)
    lengths = rng.uniform(low, high, size=count) if high > low else np.full(count, low)
    gaps = separation * 0.5 * (lengths[:-1] + lengths[1:])
    gaps = gaps + jitter * lengths.mean() * rng.random(count - 1)
    centers = np.concatenate([[0.0], np.cumsum(gaps)])
    centers += center - 0.5 * (centers[0] + centers[-1])
    intervals = [FreqInterval(float(c), float(w)) for c, w in zip(centers, lengths, strict=True)]
    return IntervalCollection(tuple(intervals), (low, high), kappa)


def band_partition(
    low: float, high: float, pieces: int, rng_seed: int | None = None
) -> IntervalCollection:
    """Consecutive intervals covering [low, high); random cuts when seeded."""
    if not low < high or pieces < 1:
        raise ParameterError(f"cannot split [{low}, {high}) into {pieces} pieces")
    if rng_seed is None:
        cuts = np.linspace(low, high, pieces + 1)
    else:
        rng = np.random.default_rng(rng_seed)
        inner = np.sort(rng.uniform(low, high, size=pieces - 1))
        cuts = np.concatenate([[low], inner, [high]])
    intervals = [
        FreqInterval.from_endpoints(float(a), float(b))
        for a, b in zip(cuts[:-1], cuts[1:], strict=True)
        if b > a
    ]
    return IntervalCollection.of(intervals)
