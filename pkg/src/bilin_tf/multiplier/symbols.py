"""Symbol descriptors for linear and bilinear multipliers.

A descriptor bundles a vectorized evaluator with its arity, an optional
support hint and a smoothness tag. Evaluator signatures by arity:

- ``linear_1d``: ``s(xi)``
- ``bilinear_diagonal``: ``s(lam)`` with ``lam = xi - eta``
- ``bilinear_general``: ``s(xi, eta)``
- ``bilinear_xdep``: ``s(x, xi, eta)``

When a hint is declared the evaluator must return exact zeros outside it;
fast paths rely on this to skip work.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, replace
from enum import StrEnum

import numpy as np

from bilin_tf.errors import ParameterError
from bilin_tf.intervals.bump import DEFAULT_FLATNESS, make_bump
from bilin_tf.intervals.interval import Interval

SUPPORT_AUDIT_POINTS = 1000

type Evaluator = Callable[..., np.ndarray]
type Gradient = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray]]


class Arity(StrEnum):
    LINEAR_1D = "linear_1d"
    BILINEAR_DIAGONAL = "bilinear_diagonal"
    BILINEAR_GENERAL = "bilinear_general"
    BILINEAR_XDEP = "bilinear_xdep"


class Smoothness(StrEnum):
    SHARP = "sharp"
    SMOOTH = "smooth"
    CONSTANT = "constant"


@dataclass(frozen=True)
class IntervalSupport:
    """The single active coordinate (xi, or xi - eta) lies in ``interval``."""

    interval: Interval

    def contains(self, coordinate: np.ndarray) -> np.ndarray:
        slack = 1e-12 * max(abs(self.interval.lo), abs(self.interval.hi), 1.0)
        return (coordinate >= self.interval.lo - slack) & (coordinate <= self.interval.hi + slack)


@dataclass(frozen=True)
class StripSupport:
    """The strip {lambda1 * xi + lambda2 * eta in interval}."""

    interval: Interval
    lambda1: float
    lambda2: float

    def __post_init__(self) -> None:
        if self.lambda1 == 0 and self.lambda2 == 0:
            raise ParameterError("strip direction cannot vanish")

    def contains(self, xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        projected = self.lambda1 * xi + self.lambda2 * eta
        slack = 1e-12 * max(abs(self.interval.lo), abs(self.interval.hi), 1.0)
        return (projected >= self.interval.lo - slack) & (projected <= self.interval.hi + slack)


type SupportHint = IntervalSupport | StripSupport | None


@dataclass(frozen=True)
class SymbolDescriptor:
    arity: Arity
    evaluator: Evaluator
    support_hint: SupportHint = None
    smoothness: Smoothness = Smoothness.SMOOTH
    name: str = "symbol"
    gradient: Gradient | None = None

    def __call__(self, *coordinates: np.ndarray | float) -> np.ndarray:
        arrays = [np.asarray(c, dtype=float) for c in coordinates]
        values = np.asarray(self.evaluator(*arrays), dtype=np.complex128)
        return np.broadcast_to(values, np.broadcast_shapes(*(a.shape for a in arrays)))

    def require(self, *arities: Arity) -> None:
        if self.arity not in arities:
            raise ParameterError(
                f"symbol {self.name!r} has arity {self.arity}, expected one of {list(arities)}"
            )

    def renamed(self, name: str) -> SymbolDescriptor:
        return replace(self, name=name)


def _half_open(interval: Interval) -> Evaluator:
    lo, hi = interval.lo, interval.hi
    return lambda xi: np.where((xi >= lo) & (xi < hi), 1.0, 0.0)


def indicator_symbol(omega: Interval) -> SymbolDescriptor:
    """Sharp cutoff 1_[a, b) (half-open, so partitions do not double count)."""
    return SymbolDescriptor(
        Arity.LINEAR_1D,
        _half_open(omega),
        IntervalSupport(omega),
        Smoothness.SHARP,
        name=f"indicator[{omega.lo:g},{omega.hi:g})",
    )


def bump_symbol(omega: Interval, flatness: float = DEFAULT_FLATNESS) -> SymbolDescriptor:
    bump = make_bump(omega, flatness)
    return SymbolDescriptor(
        Arity.LINEAR_1D,
        bump,
        IntervalSupport(omega),
        Smoothness.SMOOTH,
        name=f"bump[{omega.lo:g},{omega.hi:g}]",
    )


def constant_symbol(value: complex = 1.0, arity: Arity = Arity.LINEAR_1D) -> SymbolDescriptor:
    def evaluate(*coordinates: np.ndarray) -> np.ndarray:
        shape = np.broadcast_shapes(*(np.shape(c) for c in coordinates))
        return np.full(shape, value, dtype=np.complex128)

    return SymbolDescriptor(arity, evaluate, None, Smoothness.CONSTANT, name=f"constant({value})")


def hilbert_symbol() -> SymbolDescriptor:
    return SymbolDescriptor(
        Arity.LINEAR_1D, lambda xi: -1j * np.sign(xi), None, Smoothness.SHARP, name="hilbert"
    )


def diagonal_symbol(profile: SymbolDescriptor) -> SymbolDescriptor:
    """s(xi, eta) = profile(xi - eta), evaluated on lam = xi - eta."""
    profile.require(Arity.LINEAR_1D)
    return SymbolDescriptor(
        Arity.BILINEAR_DIAGONAL,
        profile.evaluator,
        profile.support_hint,
        profile.smoothness,
        name=f"diag({profile.name})",
    )


def bilinear_hilbert_symbol() -> SymbolDescriptor:
    """-i sgn(xi - eta)."""
    return diagonal_symbol(hilbert_symbol()).renamed("bilinear_hilbert")


def strip_symbol(profile: SymbolDescriptor, lambda1: float, lambda2: float) -> SymbolDescriptor:
    """s(xi, eta) = profile(lambda1 xi + lambda2 eta)."""
    profile.require(Arity.LINEAR_1D)
    evaluate = profile.evaluator
    hint = None
    if isinstance(profile.support_hint, IntervalSupport):
        hint = StripSupport(profile.support_hint.interval, lambda1, lambda2)
    return SymbolDescriptor(
        Arity.BILINEAR_GENERAL,
        lambda xi, eta: evaluate(lambda1 * xi + lambda2 * eta),
        hint,
        profile.smoothness,
        name=f"strip({profile.name};{lambda1:g},{lambda2:g})",
    )


def lift_diagonal(s: SymbolDescriptor) -> SymbolDescriptor:
    """View a diagonal symbol as a general one on the strip xi - eta in omega."""
    s.require(Arity.BILINEAR_DIAGONAL)
    hint = None
    if isinstance(s.support_hint, IntervalSupport):
        hint = StripSupport(s.support_hint.interval, 1.0, -1.0)
    evaluate = s.evaluator
    return SymbolDescriptor(
        Arity.BILINEAR_GENERAL,
        lambda xi, eta: evaluate(xi - eta),
        hint,
        s.smoothness,
        name=f"lift({s.name})",
    )


def separable_symbol(s1: SymbolDescriptor, s2: SymbolDescriptor) -> SymbolDescriptor:
    """s(xi, eta) = s1(xi) s2(eta)."""
    s1.require(Arity.LINEAR_1D)
    s2.require(Arity.LINEAR_1D)
    first, second = s1.evaluator, s2.evaluator
    return SymbolDescriptor(
        Arity.BILINEAR_GENERAL,
        lambda xi, eta: first(xi) * second(eta),
        None,
        Smoothness.SHARP if Smoothness.SHARP in (s1.smoothness, s2.smoothness) else Smoothness.SMOOTH,
        name=f"{s1.name}x{s2.name}",
    )


def general_symbol(
    evaluator: Evaluator,
    *,
    support_hint: SupportHint = None,
    gradient: Gradient | None = None,
    name: str = "general",
) -> SymbolDescriptor:
    return SymbolDescriptor(
        Arity.BILINEAR_GENERAL, evaluator, support_hint, Smoothness.SMOOTH, name, gradient
    )


def xdep_symbol(evaluator: Evaluator, *, name: str = "xdep") -> SymbolDescriptor:
    """sigma(x, xi, eta)."""
    return SymbolDescriptor(Arity.BILINEAR_XDEP, evaluator, None, Smoothness.SMOOTH, name)


def modulated_symbol(coefficient: Callable[[np.ndarray], np.ndarray], s: SymbolDescriptor) -> SymbolDescriptor:
    """sigma(x, xi, eta) = c(x) s(xi, eta)."""
    s.require(Arity.BILINEAR_GENERAL)
    evaluate = s.evaluator
    return xdep_symbol(
        lambda x, xi, eta: coefficient(x) * evaluate(xi, eta), name=f"modulated({s.name})"
    )


@dataclass(frozen=True)
class SupportAudit:
    checked: int
    outside: int
    violations: int

    @property
    def passed(self) -> bool:
        return self.violations == 0


def audit_support(
    s: SymbolDescriptor,
    *,
    extent: float,
    rng_seed: int = 0,
    points: int = SUPPORT_AUDIT_POINTS,
) -> SupportAudit:
    """Check exact zeros outside the declared hint at random points in [-extent, extent]^d."""
    if s.support_hint is None:
        return SupportAudit(0, 0, 0)
    rng = np.random.default_rng(rng_seed)
    match s.arity, s.support_hint:
        case (Arity.LINEAR_1D | Arity.BILINEAR_DIAGONAL), IntervalSupport() as hint:
            coordinate = rng.uniform(-extent, extent, size=points)
            outside = ~hint.contains(coordinate)
            values = s(coordinate)
        case Arity.BILINEAR_GENERAL, StripSupport() as hint:
            xi, eta = rng.uniform(-extent, extent, size=(2, points))
            outside = ~hint.contains(xi, eta)
            values = s(xi, eta)
        case _:
            raise ParameterError(f"hint {s.support_hint} does not fit arity {s.arity}")
    violations = int(np.count_nonzero(values[outside]))
    return SupportAudit(points, int(outside.sum()), violations)
