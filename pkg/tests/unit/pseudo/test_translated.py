import math

import numpy as np
import pytest

from bilin_tf.errors import DegenerateInputError, ParameterError
from bilin_tf.grid.exponents import ExponentTriple
from bilin_tf.grid.families import FunctionFamily, synthesize_test_function
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.intervals.interval import FreqInterval
from bilin_tf.multiplier.symbols import Arity, SymbolDescriptor, bump_symbol, constant_symbol
from bilin_tf.pseudo import fit_decay, gaussian_ridge, offdiag_decay, translate_profile, translated_family_bound

EXPONENTS = ExponentTriple.from_pq(4, 4)


def _gaussian(width: float = 2.0) -> SymbolDescriptor:
    return SymbolDescriptor(Arity.LINEAR_1D, lambda lam: np.exp(-((lam / width) ** 2)), name="gauss")


class TestTranslateProfile:
    def test_pieces_rebuild_profile(self):
        phi = _gaussian()
        lam = np.linspace(-4.5, 4.5, 91)
        rebuilt = sum(translate_profile(phi, p)(lam) for p in range(-6, 7))
        np.testing.assert_allclose(rebuilt, phi(lam), atol=1e-12)

    def test_fit_decay(self):
        assert fit_decay(_gaussian()) > 5
        assert fit_decay(constant_symbol()) == pytest.approx(0.0, abs=1e-9)


class TestTranslatedFamilyBound:
    def test_assembly_bounds_direct(self, bandlimited):
        report = translated_family_bound(_gaussian(), bandlimited(1), bandlimited(2), EXPONENTS, (-4, 4))
        assert report.holds
        assert report.direct > 0
        assert not report.decay_warning
        assert 0 in report.pieces

    def test_single_window_profile(self, bandlimited):
        phi = bump_symbol(FreqInterval(0.0, 1.5))
        report = translated_family_bound(phi, bandlimited(3), bandlimited(4), EXPONENTS, (0, 2))
        assert report.pieces == (0,)
        assert report.assembly == report.direct

    def test_empty_range(self, bandlimited):
        with pytest.raises(ParameterError):
            translated_family_bound(_gaussian(), bandlimited(1), bandlimited(2), EXPONENTS, (3, 2))

    def test_zero_input(self, bandlimited, small_grid):
        report = translated_family_bound(
            _gaussian(), SampledFunction.zeros(small_grid), bandlimited(2), EXPONENTS, (0, 1)
        )
        assert (report.direct, report.assembly) == (0.0, 0.0)

    def test_flat_profile_warns(self, bandlimited):
        report = translated_family_bound(constant_symbol(), bandlimited(1), bandlimited(2), EXPONENTS, (0, 0))
        assert report.decay_warning


class TestOffDiagonal:
    @pytest.fixture
    def packet(self, small_grid):
        return synthesize_test_function(small_grid, FunctionFamily.GAUSSIAN_PACKET, {"width": 1.0}, 0)

    def test_local_norms_fall_off(self, packet, bandlimited, small_grid):
        sigma = gaussian_ridge(math.pi / 2, grid=small_grid).base
        report = offdiag_decay(packet, bandlimited(1), sigma, max_distance=12)
        assert report.distances == tuple(range(13))
        assert report.center == pytest.approx(0.0)
        assert report.local_norms[0] > 1e3 * report.local_norms[-1]
        assert report.decay_exponent > 1

    def test_zero_input(self, bandlimited, small_grid):
        sigma = gaussian_ridge(math.pi / 2, grid=small_grid).base
        with pytest.raises(DegenerateInputError):
            offdiag_decay(SampledFunction.zeros(small_grid), bandlimited(1), sigma)

    @pytest.mark.parametrize("distance", [0, 32])
    def test_distance_range(self, packet, bandlimited, small_grid, distance):
        sigma = gaussian_ridge(math.pi / 2, grid=small_grid).base
        with pytest.raises(ParameterError):
            offdiag_decay(packet, bandlimited(1), sigma, max_distance=distance)
