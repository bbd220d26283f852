"""Directional Sobolev regularity of bilinear symbols.

For a direction theta in the frequency plane write (xi, eta) = lam theta + t theta_perp.
The directional norm of m is the L^s norm in lam of

    F(lam) = sup_t (|m| + |d_theta m|)

with the sup over a t-mesh spanning the Nyquist square and, for x-dependent
symbols, over sampled x and x-derivatives up to a given order.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy import integrate

from bilin_tf.errors import DivergenceError, ParameterError
from bilin_tf.grid.spec import GridSpec
from bilin_tf.multiplier.symbols import Arity, SymbolDescriptor

logger = logging.getLogger(__name__)

LAMBDA_STEP = 1.0 / 84
T_POINTS = 257
X_POINTS = 33
X_STEP = 1e-3
MAX_X_ORDER = 2
EDGE_RATIO = 1e-6
CHUNK_ROWS = 256


@dataclass(frozen=True, eq=False)
class DirectionalSymbol:
    base: SymbolDescriptor
    angle: float
    sobolev_s: float
    grid: GridSpec = field(default_factory=GridSpec)
    window: int | None = None
    t_points: int = T_POINTS

    def __post_init__(self) -> None:
        self.base.require(Arity.BILINEAR_GENERAL, Arity.BILINEAR_XDEP)
        if not math.isfinite(self.angle):
            raise ParameterError(f"angle must be finite, got {self.angle}")
        if not 1 < self.sobolev_s <= 2:
            raise ParameterError(f"Sobolev exponent must lie in (1, 2], got {self.sobolev_s}")
        if self.window is not None and self.window < 1:
            raise ParameterError(f"window must be a positive integer, got {self.window}")
        if self.t_points < 3:
            raise ParameterError(f"need at least 3 t points, got {self.t_points}")
        object.__setattr__(self, "angle", self.angle % (2 * math.pi))

    @property
    def theta(self) -> tuple[float, float]:
        return math.cos(self.angle), math.sin(self.angle)

    @property
    def theta_perp(self) -> tuple[float, float]:
        return -math.sin(self.angle), math.cos(self.angle)

    @property
    def x_dependent(self) -> bool:
        return self.base.arity is Arity.BILINEAR_XDEP

    @property
    def reach(self) -> float:
        """Largest |<(xi, eta), theta>| over the Nyquist square."""
        c, s = self.theta
        return (abs(c) + abs(s)) * self.grid.nyquist

    @property
    def lambda_window(self) -> int:
        return self.window if self.window is not None else math.ceil(self.reach) + 1

    @cached_property
    def lambda_mesh(self) -> np.ndarray:
        w = self.lambda_window
        return np.linspace(-w, w, 2 * w * round(1 / LAMBDA_STEP) + 1)

    @cached_property
    def t_mesh(self) -> np.ndarray:
        return np.linspace(-self.reach, self.reach, self.t_points)

    def coordinates(self, lam: np.ndarray, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        (c, s), (pc, ps) = self.theta, self.theta_perp
        return lam * c + t * pc, lam * s + t * ps

    @cached_property
    def class_norm(self) -> float:
        return directional_norm(self, 0)


@dataclass(frozen=True)
class DirectionalNorm:
    value: float
    window: int
    decays: bool
    per_order: tuple[float, ...]


def _x_samples(ds: DirectionalSymbol) -> np.ndarray:
    period = ds.grid.period_length
    return np.linspace(-0.5 * period, 0.5 * period, X_POINTS, endpoint=False)


def _evaluate(ds: DirectionalSymbol, x_order: int, xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
    """d_x^a m on (xi, eta), with a leading x axis for x-dependent symbols."""
    if not ds.x_dependent:
        return ds.base(xi, eta)[None]
    x = _x_samples(ds).reshape((-1,) + (1,) * xi.ndim)
    sigma = ds.base
    match x_order:
        case 0:
            return sigma(x, xi, eta)
        case 1:
            return (sigma(x + X_STEP, xi, eta) - sigma(x - X_STEP, xi, eta)) / (2 * X_STEP)
        case _:
            return (
                sigma(x + X_STEP, xi, eta) - 2 * sigma(x, xi, eta) + sigma(x - X_STEP, xi, eta)
            ) / X_STEP**2


def directional_derivative(
    ds: DirectionalSymbol, x_order: int, xi: np.ndarray, eta: np.ndarray
) -> np.ndarray:
    """<grad m, theta>, analytic when the symbol carries a gradient, else a
    five-point stencil along theta with step (frequency step)/4."""
    c, s = ds.theta
    if ds.base.gradient is not None and not ds.x_dependent:
        d_xi, d_eta = ds.base.gradient(xi, eta)
        return (c * np.asarray(d_xi) + s * np.asarray(d_eta))[None]
    h = ds.grid.frequency_step / 4

    def shifted(k: int) -> np.ndarray:
        return _evaluate(ds, x_order, xi + k * h * c, eta + k * h * s)

    return (shifted(-2) - 8 * shifted(-1) + 8 * shifted(1) - shifted(2)) / (12 * h)


def directional_profile(ds: DirectionalSymbol, x_order: int = 0) -> np.ndarray:
    """F(lam) on ``ds.lambda_mesh``."""
    lam = ds.lambda_mesh
    t = ds.t_mesh
    profile = np.empty(lam.shape)
    for start in range(0, len(lam), CHUNK_ROWS):
        rows = lam[start : start + CHUNK_ROWS, None]
        xi, eta = ds.coordinates(rows, t[None, :])
        values = np.abs(_evaluate(ds, x_order, xi, eta)) + np.abs(
            directional_derivative(ds, x_order, xi, eta)
        )
        profile[start : start + CHUNK_ROWS] = values.max(axis=(0, 2))
    if not np.all(np.isfinite(profile)):
        raise DivergenceError(f"non-finite directional integrand for {ds.base.name}")
    return profile


def lp_integral(profile: np.ndarray, lam: np.ndarray, s: float) -> float:
    return float(integrate.simpson(profile**s, x=lam)) ** (1.0 / s)


def decays_at_edge(profile: np.ndarray) -> bool:
    peak = profile.max(initial=0.0)
    return peak == 0 or max(profile[0], profile[-1]) <= EDGE_RATIO * peak


def directional_norm_report(ds: DirectionalSymbol, max_x_order: int = 0) -> DirectionalNorm:
    if not 0 <= max_x_order <= MAX_X_ORDER:
        raise ParameterError(f"x-derivative order must lie in [0, {MAX_X_ORDER}], got {max_x_order}")
    orders = range(max_x_order + 1) if ds.x_dependent else range(1)
    values = []
    decays = True
    for order in orders:
        profile = directional_profile(ds, order)
        values.append(lp_integral(profile, ds.lambda_mesh, ds.sobolev_s))
        decays &= decays_at_edge(profile)
    if not decays:
        logger.warning(
            f"directional integrand of {ds.base.name} does not decay at the window edge"
            f" |lambda| = {ds.lambda_window}; the norm grows with the window"
        )
    return DirectionalNorm(max(values), ds.lambda_window, decays, tuple(values))


def directional_norm(ds: DirectionalSymbol, max_x_order: int = 0) -> float:
    return directional_norm_report(ds, max_x_order).value
