import math
from dataclasses import replace

import numpy as np
import pytest
from scipy import integrate

from bilin_tf.errors import ParameterError
from bilin_tf.multiplier.symbols import Arity, constant_symbol, hilbert_symbol, xdep_symbol
from bilin_tf.pseudo import (
    DirectionalSymbol,
    adjoint,
    adjoint_angle,
    adjoint_level_angle,
    adjoint_symbol,
    build_symbol_preset,
    directional_norm_report,
    gaussian_ridge,
    hilbert_ridge,
    is_degenerate,
)


class TestDirectionalSymbol:
    @pytest.mark.parametrize("s", [1.0, 2.5])
    def test_sobolev_range(self, small_grid, s):
        with pytest.raises(ParameterError):
            DirectionalSymbol(constant_symbol(1.0, Arity.BILINEAR_GENERAL), 0.0, s, small_grid)

    def test_linear_symbol_rejected(self, small_grid):
        with pytest.raises(ParameterError):
            DirectionalSymbol(hilbert_symbol(), 0.0, 1.5, small_grid)

    def test_angle_normalized(self, small_grid):
        ds = DirectionalSymbol(constant_symbol(1.0, Arity.BILINEAR_GENERAL), -math.pi / 2, 1.5, small_grid)
        assert ds.angle == pytest.approx(3 * math.pi / 2)

    def test_window_covers_nyquist_square(self, small_grid):
        ds = gaussian_ridge(math.pi / 4, grid=small_grid)
        assert ds.lambda_window >= math.sqrt(2) * small_grid.nyquist
        assert gaussian_ridge(0.0, grid=small_grid, window=3).lambda_window == 3


class TestDirectionalNorm:
    def test_gaussian_ridge_matches_closed_form(self, small_grid):
        s = 1.5
        ds = gaussian_ridge(math.pi / 2, width=1.0, s=s, grid=small_grid)
        report = directional_norm_report(ds)

        def integrand(lam):
            return ((1 + 2 * abs(lam)) * math.exp(-(lam**2))) ** s

        expected = integrate.quad(integrand, -ds.lambda_window, ds.lambda_window, points=[0.0])[0] ** (1 / s)
        assert report.decays
        assert report.value == pytest.approx(expected, rel=1e-3)

    def test_stencil_agrees_with_gradient(self, small_grid):
        ds = gaussian_ridge(0.7, grid=small_grid, window=4)
        stencil = DirectionalSymbol(replace(ds.base, gradient=None), 0.7, 1.5, small_grid, 4)
        expected = directional_norm_report(ds).value
        assert directional_norm_report(stencil).value == pytest.approx(expected, rel=1e-5)

    def test_hilbert_ridge_does_not_decay(self, small_grid):
        report = directional_norm_report(hilbert_ridge(math.pi / 2, grid=small_grid))
        assert not report.decays

    def test_x_dependent_orders(self, small_grid):
        base = gaussian_ridge(math.pi / 2, grid=small_grid, window=4).base
        sigma = xdep_symbol(lambda x, xi, eta: (1 + 0.5 * np.cos(x)) * base.evaluator(xi, eta))
        ds = DirectionalSymbol(sigma, math.pi / 2, 1.5, small_grid, window=4, t_points=33)
        report = directional_norm_report(ds, max_x_order=2)
        assert len(report.per_order) == 3
        assert report.value == max(report.per_order)

    def test_order_range(self, small_grid):
        with pytest.raises(ParameterError):
            directional_norm_report(gaussian_ridge(0.0, grid=small_grid), max_x_order=3)


class TestAdjoint:
    def test_adjoint_symbol_formula(self):
        m = gaussian_ridge(0.4).base
        xi, eta = np.array([0.3, -1.2]), np.array([0.7, 2.0])
        np.testing.assert_allclose(adjoint_symbol(m, 1)(xi, eta), np.conj(m(-xi - eta, eta)))
        np.testing.assert_allclose(adjoint_symbol(m, 2)(xi, eta), np.conj(m(xi, -eta - xi)))

    @pytest.mark.parametrize("which", [1, 2])
    def test_adjoint_is_involution(self, which):
        m = hilbert_ridge(0.9).base
        twice = adjoint_symbol(adjoint_symbol(m, which), which)
        xi, eta = np.array([0.1, 3.0, -2.0]), np.array([1.0, -0.5, 0.25])
        np.testing.assert_allclose(twice(xi, eta), m(xi, eta), atol=1e-14)
        angle = 1.1
        assert adjoint_angle(adjoint_angle(angle, which), which) == pytest.approx(angle)

    def test_level_line_relations(self):
        u = 0.3
        u1 = adjoint_level_angle(u, 1)
        u2 = adjoint_level_angle(u, 2)
        assert 1 / math.tan(u) + 1 / math.tan(u1) == pytest.approx(-1.0)
        assert math.tan(u) + math.tan(u2) == pytest.approx(-1.0)

    def test_adjoint_gradient_matches_values(self):
        m = gaussian_ridge(0.4).base
        star = adjoint_symbol(m, 1)
        xi, eta, h = np.array([0.2]), np.array([-0.6]), 1e-6
        d_xi, d_eta = star.gradient(xi, eta)
        np.testing.assert_allclose(d_xi, (star(xi + h, eta) - star(xi - h, eta)) / (2 * h), rtol=1e-6)
        np.testing.assert_allclose(d_eta, (star(xi, eta + h) - star(xi, eta - h)) / (2 * h), rtol=1e-6)

    def test_degenerate_directions(self):
        assert is_degenerate(3 * math.pi / 4)
        assert is_degenerate(7 * math.pi / 4)
        assert not is_degenerate(math.pi / 2)

    def test_adjoint_keeps_options(self, small_grid):
        ds = gaussian_ridge(0.5, grid=small_grid, window=5)
        star = adjoint(ds, 2)
        assert star.window == 5
        assert star.grid == small_grid
        assert star.angle == pytest.approx(adjoint_angle(0.5, 2))


class TestPresets:
    def test_unknown_preset(self):
        with pytest.raises(ParameterError):
            build_symbol_preset("not_a_preset")

    def test_unknown_parameter(self):
        with pytest.raises(ParameterError):
            build_symbol_preset("gaussian_ridge", {"depth": 2})

    def test_random_series_is_seeded(self, small_grid):
        a = build_symbol_preset("random_translate_series", {"seed": 3}, small_grid)
        b = build_symbol_preset("random_translate_series", {"seed": 3}, small_grid)
        xi, eta = np.linspace(-5, 5, 11), np.linspace(5, -5, 11)
        np.testing.assert_array_equal(a.base(xi, eta), b.base(xi, eta))

    def test_options_pass_through(self, small_grid):
        ds = build_symbol_preset("compact_bump_ridge", {"window": 2, "s": 1.25}, small_grid)
        assert ds.lambda_window == 2
        assert ds.sobolev_s == 1.25
