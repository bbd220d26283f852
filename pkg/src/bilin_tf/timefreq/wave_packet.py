"""L2-normalized wave packets adapted to tiles, and a shared packet cache."""

from __future__ import annotations

import logging
import math
import threading
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from bilin_tf.errors import BandError, ParameterError, StateError
from bilin_tf.grid.sampled import SampledFunction, inverse_transform
from bilin_tf.grid.spec import GridSpec
from bilin_tf.timefreq.tiles import Tile

logger = logging.getLogger(__name__)

# spectrum lives in the middle 90% of omega
SUPPORT_FRACTION = 0.9
SHARPNESS = 4.0
MIN_SPACE_CELLS = 4
DECAY_WINDOW = (1e-12, 1e-2)
DECAY_REACH = 0.45


def packet_profile(t: np.ndarray) -> np.ndarray:
    """exp(-a t^2 / (1 - t^2)) on |t| < 1, exactly zero elsewhere."""
    t = np.asarray(t, dtype=float)
    inside = np.abs(t) < 1.0
    profile = np.zeros_like(t)
    ti = t[inside]
    profile[inside] = np.exp(-SHARPNESS * ti**2 / (1.0 - ti**2))
    return profile


def measure_decay(values: np.ndarray, grid: GridSpec, center: float, length: float) -> float:
    """Fit M in |phi(x)| ~ (1 + |x - c|/|I|)^(-M) on the monotone envelope.

    Uses periodic distances up to 0.45 L and the part of the envelope between
    1e-12 and 1e-2 of the peak.
    """
    period = grid.period_length
    distance = np.abs(np.asarray(grid.points) - center) % period
    distance = np.minimum(distance, period - distance)
    near = distance <= DECAY_REACH * period
    order = np.argsort(distance[near], kind="stable")
    d = distance[near][order]
    amplitude = np.abs(values[near][order])
    peak = amplitude.max()
    if peak == 0:
        return 0.0
    envelope = np.maximum.accumulate(amplitude[::-1])[::-1]
    low, high = DECAY_WINDOW
    window = (envelope >= low * peak) & (envelope <= high * peak)
    if np.count_nonzero(window) < 3:
        return math.inf if envelope[-1] < low * peak else 0.0
    slope, _ = np.polyfit(np.log1p(d[window] / length), np.log(envelope[window]), 1)
    return float(-slope)


@dataclass(frozen=True, eq=False)
class WavePacket:
    tile: Tile
    grid: GridSpec
    spectrum: np.ndarray
    support: np.ndarray

    @property
    def values(self) -> SampledFunction:
        return inverse_transform(self.grid, self.spectrum)

    @cached_property
    def l2_norm(self) -> float:
        return math.sqrt(float(np.sum(np.abs(self.spectrum) ** 2)) / self.grid.period_length)

    @cached_property
    def leakage(self) -> float:
        """Largest coefficient magnitude outside the middle 90% of omega."""
        xi = np.asarray(self.grid.frequencies)
        half = 0.5 * SUPPORT_FRACTION * self.tile.freq.length
        outside = np.abs(xi - self.tile.freq.center) >= half
        return float(np.abs(self.spectrum[outside]).max(initial=0.0))

    @cached_property
    def decay_exponent(self) -> float:
        return measure_decay(
            np.asarray(self.values.samples), self.grid, self.tile.space.center, self.tile.space.length
        )


def make_wave_packet(tile: Tile, grid: GridSpec) -> WavePacket:
    omega = tile.freq
    low, high = grid.nyquist_band
    if omega.lo < low or omega.hi > high:
        raise BandError(f"tile frequency {omega} outside the Nyquist band {grid.nyquist_band}")
    if tile.space.length < MIN_SPACE_CELLS * grid.spatial_step:
        raise ParameterError(
            f"space interval {tile.space.length} shorter than {MIN_SPACE_CELLS} grid cells"
        )
    xi = np.asarray(grid.frequencies)
    profile = packet_profile((xi - omega.center) / (0.5 * SUPPORT_FRACTION * omega.length))
    support = np.flatnonzero(profile)
    if not len(support):
        raise ParameterError(f"no grid frequency inside the packet support of {omega}")
    spectrum = np.zeros(grid.sample_count, dtype=np.complex128)
    spectrum[support] = profile[support] * np.exp(-1j * xi[support] * tile.space.center)
    spectrum *= math.sqrt(grid.period_length / float(np.sum(profile[support] ** 2)))
    spectrum.setflags(write=False)
    support.setflags(write=False)
    return WavePacket(tile, grid, spectrum, support)


class PacketBank:
    """Packets keyed by tile, built once and shared by sub-collections.

    Builders publish finished packets under a lock; readers never see a
    partial entry.
    """

    def __init__(self, grid: GridSpec):
        self.grid = grid
        self._packets: dict[Tile, WavePacket] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._packets)

    def __contains__(self, tile: object) -> bool:
        return tile in self._packets

    def build(self, tiles: Iterable[Tile]) -> None:
        built = 0
        for tile in tiles:
            if tile in self._packets:
                continue
            packet = make_wave_packet(tile, self.grid)
            with self._lock:
                if self._packets.setdefault(tile, packet) is packet:
                    built += 1
        if built:
            logger.debug(f"built {built} wave packets ({len(self)} cached)")

    def packet(self, tile: Tile) -> WavePacket:
        try:
            return self._packets[tile]
        except KeyError:
            raise StateError(f"no wave packet was built for {tile}") from None

    def coefficients(self, f: SampledFunction, tiles: Sequence[Tile]) -> np.ndarray:
        """<f, phi_P> = (1/L) sum_k c_k(f) conj(c_k(phi_P)) for each tile."""
        self.grid.require_same(f.grid)
        spectrum = f.spectrum()
        cache: dict[Tile, complex] = {}
        out = np.empty(len(tiles), dtype=np.complex128)
        for index, tile in enumerate(tiles):
            if tile not in cache:
                packet = self.packet(tile)
                cache[tile] = np.vdot(
                    packet.spectrum[packet.support], spectrum[packet.support]
                ) / self.grid.period_length
            out[index] = cache[tile]
        return out
