"""Square-function specifications: a collection plus how each piece is cut out."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from bilin_tf.errors import ShapeError
from bilin_tf.intervals.bump import DEFAULT_FLATNESS, smooth_step
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.families import dyadic_collection, unit_translates
from bilin_tf.intervals.interval import FreqInterval
from bilin_tf.multiplier.symbols import (
    Arity,
    IntervalSupport,
    Smoothness,
    SymbolDescriptor,
    bump_symbol,
    diagonal_symbol,
    indicator_symbol,
)


class CutoffMode(StrEnum):
    SHARP = "sharp"
    SMOOTH = "smooth"


@dataclass(frozen=True)
class SquareFunctionSpec:
    collection: IntervalCollection
    cutoff_mode: CutoffMode = CutoffMode.SMOOTH
    bump_flatness: float = DEFAULT_FLATNESS
    # per-interval overrides: linear_1d profiles, or bilinear symbols m_omega
    symbol_family: tuple[SymbolDescriptor, ...] | None = None
    relaxed: bool = False

    def __post_init__(self) -> None:
        if self.symbol_family is not None:
            object.__setattr__(self, "symbol_family", tuple(self.symbol_family))
            if len(self.symbol_family) != len(self.collection):
                raise ShapeError(
                    f"{len(self.symbol_family)} symbols for {len(self.collection)} intervals"
                )

    def linear_symbols(self) -> list[SymbolDescriptor]:
        if self.symbol_family is not None:
            for symbol in self.symbol_family:
                symbol.require(Arity.LINEAR_1D)
            return list(self.symbol_family)
        if self.cutoff_mode is CutoffMode.SHARP:
            return [indicator_symbol(omega) for omega in self.collection]
        return [bump_symbol(omega, self.bump_flatness) for omega in self.collection]

    def bilinear_symbols(self) -> list[SymbolDescriptor]:
        """chi_omega(xi - eta) per interval, or the declared m_omega overrides."""
        if self.symbol_family is not None:
            return [
                diagonal_symbol(symbol) if symbol.arity is Arity.LINEAR_1D else symbol
                for symbol in self.symbol_family
            ]
        return [diagonal_symbol(symbol) for symbol in self.linear_symbols()]


def dyadic_spec(
    n_min: int, n_max: int, cutoff_mode: CutoffMode = CutoffMode.SHARP
) -> SquareFunctionSpec:
    """Littlewood-Paley pieces +-[2^n, 2^(n+1))."""
    return SquareFunctionSpec(dyadic_collection(n_min, n_max), cutoff_mode, relaxed=True)


def carleson_spec(
    n_min: int, n_max: int, cutoff_mode: CutoffMode = CutoffMode.SHARP
) -> SquareFunctionSpec:
    """Unit translates [n, n + 1), sharp (Carleson) or smooth (Lacey)."""
    return SquareFunctionSpec(unit_translates(n_min, n_max), cutoff_mode)


def lacey_spec(n_min: int, n_max: int, flatness: float = DEFAULT_FLATNESS) -> SquareFunctionSpec:
    return SquareFunctionSpec(unit_translates(n_min, n_max), CutoffMode.SMOOTH, flatness)


def littlewood_paley_profile(scale: float) -> SymbolDescriptor:
    """psi(xi / scale) with psi(xi) = phi(xi) - phi(2 xi).

    phi is 1 on [-1, 1] and 0 outside [-2, 2], so psi lives on
    1/2 <= |xi| <= 2 and sum_n psi(2^-n xi) telescopes to 1 away from 0.
    """

    def phi(xi: np.ndarray) -> np.ndarray:
        return smooth_step(2.0 - np.abs(xi))

    def evaluate(xi: np.ndarray) -> np.ndarray:
        t = np.asarray(xi) / scale
        return np.where(t > 0, phi(t) - phi(2.0 * t), 0.0)

    support = FreqInterval.from_endpoints(scale / 2.0, 2.0 * scale)
    return SymbolDescriptor(
        Arity.LINEAR_1D,
        evaluate,
        IntervalSupport(support),
        Smoothness.SMOOTH,
        name=f"lp_psi({scale:g})",
    )


def smooth_dyadic_spec(n_min: int, n_max: int) -> SquareFunctionSpec:
    """Smooth bilinear dyadic family psi(2^-n (xi - eta)), n_min <= n <= n_max."""
    profiles = [littlewood_paley_profile(2.0**n) for n in range(n_min, n_max + 1)]
    collection = IntervalCollection.of(
        FreqInterval.from_endpoints(2.0 ** (n - 1), 2.0 ** (n + 1)) for n in range(n_min, n_max + 1)
    )
    return SquareFunctionSpec(
        collection, CutoffMode.SMOOTH, symbol_family=tuple(profiles), relaxed=True
    )
