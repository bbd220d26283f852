"""Deterministic tri-tile covers over a strip collection."""

from __future__ import annotations

import logging
import math

from bilin_tf.errors import AssumptionError, ParameterError
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.interval import FreqInterval
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.tiles import AREA_RANGE, SPACE_LENGTH_RANGE, SpaceInterval, TriTile

logger = logging.getLogger(__name__)

DEFAULT_BAND = (-8.0, 8.0)


def _space_lattice(space_extent: float, space_scale: float) -> list[SpaceInterval]:
    count = math.ceil(space_extent / space_scale - 1e-12)
    return [SpaceInterval((m + 0.5) * space_scale, space_scale) for m in range(count)]


def build_tritile_cover(
    strips: IntervalCollection,
    space_extent: float,
    space_scale: float,
    band: tuple[float, float] = DEFAULT_BAND,
) -> TileCollection:
    """Tri-tiles over [0, space_extent) with one space scale and all strips.

    For strip omega_n (center c_n, length l): omega_1 = [a - l/4, a + l/4] runs over
    the lattice a = band_lo + l/4 + m l/2, omega_2 = omega_1 + c_n and omega_3 is
    centered at -(2a + c_n) with length l. Only boxes with omega_1 and omega_2
    inside ``band`` are kept.
    """
    strips.require_assumption()
    low, high = SPACE_LENGTH_RANGE
    if not low <= space_scale <= high:
        raise AssumptionError(f"space scale {space_scale} outside {SPACE_LENGTH_RANGE}")
    if not space_extent > 0:
        raise ParameterError(f"space extent must be positive, got {space_extent}")
    band_lo, band_hi = band
    if not band_lo < band_hi:
        raise ParameterError(f"empty frequency band {band}")

    spaces = _space_lattice(space_extent, space_scale)
    cover: dict[TriTile, None] = {}
    for n, strip in enumerate(strips):
        ell, c_n = strip.length, strip.center
        product = space_scale * ell
        # omega_1 area is product/2 and omega_3 area is product
        if not 2 * AREA_RANGE[0] <= product <= AREA_RANGE[1]:
            raise AssumptionError(
                f"strip {n}: space scale x strip length = {product} outside [1, 2]"
            )
        slack = 1e-12 * max(abs(band_lo), abs(band_hi))
        boxes = []
        m = 0
        while True:
            a = band_lo + ell / 4 + m * ell / 2
            if a + ell / 4 > band_hi + slack:
                break
            if band_lo - slack <= a + c_n - ell / 4 and a + c_n + ell / 4 <= band_hi + slack:
                boxes.append(
                    (
                        FreqInterval(a, ell / 2),
                        FreqInterval(a + c_n, ell / 2),
                        FreqInterval(-(2 * a + c_n), ell),
                    )
                )
            m += 1
        for space in spaces:
            for freqs in boxes:
                cover.setdefault(TriTile(space, freqs, n), None)

    logger.debug(
        f"cover with {len(cover)} tri-tiles from {len(strips)} strips and {len(spaces)} space cells"
    )
    return TileCollection(tuple(cover), strips)
