"""Adjoint symbols of a bilinear multiplier and the induced direction maps.

With the pairing int T(f, g) h, the two adjoints act by

    m1*(xi, eta) = conj(m(-xi - eta, eta)),    m2*(xi, eta) = conj(m(xi, -eta - xi)),

i.e. m*(v) = conj(m(A v)) for the involutions A below. Level lines of m in
direction u become level lines of m* in direction A u, which gives
cot(u) + cot(u*1) = -1 and tan(u) + tan(u*2) = -1. The regularity direction
theta (orthogonal to the level lines) maps to A^T theta.
"""

from __future__ import annotations

import math
from dataclasses import replace
from typing import Literal

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.multiplier.symbols import Arity, StripSupport, SymbolDescriptor
from bilin_tf.pseudo.directional import DirectionalSymbol

type Which = Literal[1, 2]

ADJOINT_MAPS: dict[int, np.ndarray] = {
    1: np.array([[-1.0, -1.0], [0.0, 1.0]]),
    2: np.array([[1.0, 0.0], [-1.0, -1.0]]),
}
DEGENERATE_TOLERANCE = 1e-12


def _adjoint_map(which: int) -> np.ndarray:
    try:
        return ADJOINT_MAPS[which]
    except KeyError:
        raise ParameterError(f"adjoint index must be 1 or 2, got {which}") from None


def adjoint_symbol(m: SymbolDescriptor, which: Which) -> SymbolDescriptor:
    m.require(Arity.BILINEAR_GENERAL)
    (a, b), (c, d) = _adjoint_map(which)
    evaluate = m.evaluator

    def adjoint(xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        return np.conj(evaluate(a * xi + b * eta, c * xi + d * eta))

    gradient = None
    if m.gradient is not None:
        base_gradient = m.gradient

        def gradient(xi: np.ndarray, eta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
            g_xi, g_eta = base_gradient(a * xi + b * eta, c * xi + d * eta)
            g_xi, g_eta = np.conj(g_xi), np.conj(g_eta)
            return a * g_xi + c * g_eta, b * g_xi + d * g_eta

    hint = m.support_hint
    if isinstance(hint, StripSupport):
        # l1 (a xi + b eta) + l2 (c xi + d eta) lies in the same interval
        hint = StripSupport(
            hint.interval,
            hint.lambda1 * a + hint.lambda2 * c,
            hint.lambda1 * b + hint.lambda2 * d,
        )
    return replace(
        m, evaluator=adjoint, support_hint=hint, gradient=gradient, name=f"adjoint{which}({m.name})"
    )


def _angle(vector: np.ndarray) -> float:
    return math.atan2(vector[1], vector[0]) % (2 * math.pi)


def adjoint_level_angle(angle: float, which: Which) -> float:
    """Level-line direction u -> A u, on the circle."""
    u = np.array([math.cos(angle), math.sin(angle)])
    return _angle(_adjoint_map(which) @ u)


def adjoint_angle(angle: float, which: Which) -> float:
    """Regularity direction theta -> A^T theta, normalized."""
    theta = np.array([math.cos(angle), math.sin(angle)])
    return _angle(_adjoint_map(which).T @ theta)


def is_degenerate(angle: float) -> bool:
    """sqrt(2) theta is (1, -1) or (-1, 1)."""
    return abs(math.cos(angle) + math.sin(angle)) <= DEGENERATE_TOLERANCE


def adjoint(ds: DirectionalSymbol, which: Which) -> DirectionalSymbol:
    return DirectionalSymbol(
        adjoint_symbol(ds.base, which),
        adjoint_angle(ds.angle, which),
        ds.sobolev_s,
        ds.grid,
        ds.window,
        ds.t_points,
    )
