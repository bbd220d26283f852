from __future__ import annotations

import math
from dataclasses import dataclass

from bilin_tf.errors import ExponentError

HOLDER_TOLERANCE = 1e-12
# finite stand-in for p = inf in sweeps
SWEEP_INFINITY_PROXY = 64.0


def reciprocal(p: float) -> float:
    return 0.0 if p == math.inf else 1.0 / p


@dataclass(frozen=True)
class ExponentTriple:
    """Hölder triple (p, q, r) with 1/r = 1/p + 1/q."""

    p: float
    q: float
    r: float

    def __post_init__(self) -> None:
        for name, value in (("p", self.p), ("q", self.q)):
            if not value > 1:
                raise ExponentError(f"{name} must lie in (1, inf], got {value}")
        if not (0 < self.r < math.inf):
            raise ExponentError(f"r must lie in (0, inf), got {self.r}")
        gap = abs(reciprocal(self.r) - reciprocal(self.p) - reciprocal(self.q))
        if gap > HOLDER_TOLERANCE:
            raise ExponentError(
                f"1/r != 1/p + 1/q for (p, q, r) = ({self.p}, {self.q}, {self.r}): gap {gap:.3e}"
            )

    @classmethod
    def from_pq(cls, p: float, q: float) -> ExponentTriple:
        total = reciprocal(p) + reciprocal(q)
        if total <= 0:
            raise ExponentError("p and q cannot both be infinite")
        return cls(p, q, 1.0 / total)

    @property
    def r_conjugate(self) -> float:
        return math.inf if self.r <= 1 else self.r / (self.r - 1)

    @property
    def local_l2(self) -> bool:
        """p, q >= 2 and 1 <= r <= 2, i.e. p, q, r' all in [2, inf]."""
        return self.p >= 2 and self.q >= 2 and 1 <= self.r <= 2

    def with_proxy(self) -> ExponentTriple:
        """Same triple with infinite p or q replaced by the sweep proxy."""
        p = SWEEP_INFINITY_PROXY if self.p == math.inf else self.p
        q = SWEEP_INFINITY_PROXY if self.q == math.inf else self.q
        return ExponentTriple.from_pq(p, q)
