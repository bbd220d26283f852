import numpy as np
import pytest

from bilin_tf.errors import GridError, ParameterError, SizeGuardError
from bilin_tf.grid.modulation import modulate
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.grid.spec import GridSpec
from bilin_tf.intervals.interval import FreqInterval
from bilin_tf.multiplier import (
    Arity,
    apply_bilinear,
    bilinear_diagonal,
    bilinear_general,
    bilinear_xdep,
    bump_symbol,
    constant_symbol,
    diagonal_symbol,
    direct_double_sum,
    frequency_side_pairing,
    lift_diagonal,
    modulated_symbol,
    strip_symbol,
    trilinear_pairing,
)
from bilin_tf.multiplier.symbols import SymbolDescriptor

ATOL = 1e-9


def _gaussian_profile(width: float = 2.0) -> SymbolDescriptor:
    return SymbolDescriptor(Arity.LINEAR_1D, lambda lam: np.exp(-((lam / width) ** 2)), name="gauss")


class TestBilinearEvaluators:
    @pytest.mark.parametrize(
        "arity",
        [
            pytest.param(Arity.BILINEAR_DIAGONAL, id="diagonal"),
            pytest.param(Arity.BILINEAR_GENERAL, id="general"),
        ],
    )
    def test_constant_symbol_is_pointwise_product(self, bandlimited, arity):
        f, g = bandlimited(1), bandlimited(2)
        out = apply_bilinear(f, g, constant_symbol(1.0, arity))
        np.testing.assert_allclose(out.samples, f.samples * g.samples, atol=ATOL)

    def test_diagonal_matches_general_and_direct(self, bandlimited):
        f, g = bandlimited(3), bandlimited(4)
        s = diagonal_symbol(_gaussian_profile())
        fast = bilinear_diagonal(f, g, s)
        general = bilinear_general(f, g, lift_diagonal(s))
        direct = direct_double_sum(f, g, s)
        np.testing.assert_allclose(fast.samples, general.samples, atol=ATOL)
        np.testing.assert_allclose(fast.samples, direct.samples, atol=ATOL)

    def test_strip_hint_does_not_change_result(self, bandlimited):
        f, g = bandlimited(5), bandlimited(6)
        s = strip_symbol(bump_symbol(FreqInterval(1.0, 3.0)), 1.0, 2.0)
        assert s.support_hint is not None
        np.testing.assert_allclose(
            bilinear_general(f, g, s).samples, direct_double_sum(f, g, s).samples, atol=ATOL
        )

    def test_strip_with_opposite_directions_is_diagonal(self, bandlimited):
        f, g = bandlimited(7), bandlimited(8)
        profile = bump_symbol(FreqInterval(0.5, 2.0))
        np.testing.assert_allclose(
            bilinear_general(f, g, strip_symbol(profile, 1.0, -1.0)).samples,
            bilinear_diagonal(f, g, diagonal_symbol(profile)).samples,
            atol=ATOL,
        )

    def test_xdep_modulation(self, bandlimited):
        f, g = bandlimited(9), bandlimited(10)
        s = lift_diagonal(diagonal_symbol(_gaussian_profile()))
        out = bilinear_xdep(f, g, modulated_symbol(np.cos, s))
        expected = np.cos(np.asarray(f.grid.points)) * bilinear_general(f, g, s).samples
        np.testing.assert_allclose(out.samples, expected, atol=ATOL)

    def test_xdep_size_guard(self):
        zero = SampledFunction.zeros(GridSpec(64.0, 2048))
        s = modulated_symbol(np.cos, constant_symbol(1.0, Arity.BILINEAR_GENERAL))
        with pytest.raises(SizeGuardError):
            bilinear_xdep(zero, zero, s)

    def test_grid_mismatch(self, bandlimited, fine_grid):
        s = constant_symbol(1.0, Arity.BILINEAR_GENERAL)
        with pytest.raises(GridError):
            apply_bilinear(bandlimited(1), SampledFunction.zeros(fine_grid), s)

    def test_linear_symbol_rejected(self, bandlimited):
        with pytest.raises(ParameterError):
            apply_bilinear(bandlimited(1), bandlimited(2), constant_symbol())


class TestIdentities:
    @pytest.mark.parametrize(
        "symbol",
        [
            pytest.param(diagonal_symbol(_gaussian_profile()), id="diagonal"),
            pytest.param(strip_symbol(bump_symbol(FreqInterval(1.0, 3.0)), 1.0, 2.0), id="strip"),
            pytest.param(
                modulated_symbol(np.sin, constant_symbol(1.0, Arity.BILINEAR_GENERAL)), id="xdep"
            ),
        ],
    )
    def test_linear_in_each_slot(self, bandlimited, symbol):
        f1, f2, g = bandlimited(21), bandlimited(22), bandlimited(23)
        alpha = 0.7 - 1.3j
        combined = f1.scaled(alpha).plus(f2)
        left = apply_bilinear(combined, g, symbol).samples
        expected = alpha * apply_bilinear(f1, g, symbol).samples + apply_bilinear(f2, g, symbol).samples
        np.testing.assert_allclose(left, expected, atol=ATOL)
        right = apply_bilinear(g, combined, symbol).samples
        expected = alpha * apply_bilinear(g, f1, symbol).samples + apply_bilinear(g, f2, symbol).samples
        np.testing.assert_allclose(right, expected, atol=ATOL)

    @pytest.mark.parametrize("steps", [1, 3, -5])
    @pytest.mark.parametrize(
        "profile",
        [
            pytest.param(_gaussian_profile(), id="gaussian"),
            pytest.param(bump_symbol(FreqInterval(0.5, 2.0)), id="bump"),
        ],
    )
    def test_modulation_covariance(self, bandlimited, steps, profile):
        f, g = bandlimited(24), bandlimited(25)
        a = steps * f.grid.frequency_step
        s = diagonal_symbol(profile)
        shifted = bilinear_diagonal(modulate(f, a), modulate(g, a), s)
        np.testing.assert_allclose(
            shifted.samples, modulate(bilinear_diagonal(f, g, s), 2 * a).samples, atol=ATOL
        )


class TestPairing:
    def test_physical_and_frequency_sides_agree(self, bandlimited):
        f, g, h = bandlimited(11), bandlimited(12), bandlimited(13)
        s = diagonal_symbol(_gaussian_profile())
        physical = trilinear_pairing(f, g, h, s)
        frequency = frequency_side_pairing(f, g, h, s)
        assert abs(physical - frequency) <= 1e-9 * max(1.0, abs(physical))
