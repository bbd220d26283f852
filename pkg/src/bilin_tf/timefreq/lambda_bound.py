"""Level-by-level bound for the model form.

The collection is peeled with the four decrement steps at d = d0, d0+1, ...
Every removed tree is compared with its size product; the bound is

    C_tree * C_alg * sum_d 4^d prod_i min(2^-d E_i, S_i)

plus the exact contribution of anything left after the level cap.

The model sum over each level's tri-tiles must stay below that level's own
term C_tree |I_d| prod_i min(2^-d E_i, S_i), where |I_d| is the total length
of the tree tops removed at level d. A single tri-tile is its own tree and
the bound is its tree estimate.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field, replace

import numpy as np

from bilin_tf.errors import ExponentError
from bilin_tf.grid.exponents import HOLDER_TOLERANCE
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.timefreq.algorithms import DecrementResult, energy_decrement, energy_decrement_seq
from bilin_tf.timefreq.collection import TileCollection
from bilin_tf.timefreq.energy import energy_seq, energy_vec
from bilin_tf.timefreq.model_sum import collection_sizes, model_terms, tree_estimate
from bilin_tf.timefreq.size import size_seq, size_vec

logger = logging.getLogger(__name__)

LEVEL_CAP = 60
LEVEL_SLACK = 1e-9


@dataclass(frozen=True)
class LevelRecord:
    level: int
    tritiles: int
    trees: int
    total_space: float
    c_alg: float
    size_product: float
    model_sum: float
    bound: float


@dataclass(frozen=True)
class LambdaReport:
    energies: tuple[float, float, float]
    sizes: tuple[float, float, float]
    start_level: int | None
    levels: tuple[LevelRecord, ...]
    c_tree: float
    c_alg_max: float
    leftover: float
    theta: tuple[float, float, float]
    holder_exact: bool
    interpolated_product: float
    model_sum: float
    audits_passed: bool
    level_bounds: bool
    strongly_disjoint: bool


@dataclass(frozen=True)
class LambdaBound:
    bound: float
    partition: dict[int, tuple[int, ...]] = field(default_factory=dict)
    report: LambdaReport | None = None


def interpolation_weights(exponents: Sequence[float]) -> tuple[tuple[float, float, float], bool]:
    """theta_i = 1 - 2/p_i, rescaled to sum to one when sum 1/p_i != 1."""
    if len(exponents) != 3:
        raise ExponentError(f"need three exponents, got {len(exponents)}")
    for p in exponents:
        if not (2 < p < math.inf):
            raise ExponentError(f"exponents must lie in (2, inf), got {tuple(exponents)}")
    theta = [1.0 - 2.0 / p for p in exponents]
    exact = abs(sum(1.0 / p for p in exponents) - 1.0) <= HOLDER_TOLERANCE
    if not exact:
        total = sum(theta)
        theta = [t / total for t in theta]
        logger.warning(
            f"exponents {tuple(exponents)} are not Hoelder-dual; interpolation weights rescaled"
        )
    return (theta[0], theta[1], theta[2]), exact


def lambda_bound(
    f1: SampledFunction,
    f2: SampledFunction,
    f3: Sequence[SampledFunction],
    tc: TileCollection,
    exponents: Sequence[float] = (3.0, 3.0, 3.0),
) -> LambdaBound:
    theta, exact = interpolation_weights(exponents)
    terms = model_terms(f1, f2, f3, tc)
    total = math.fsum(terms.tolist())

    energies = (
        energy_vec(f1, tc, 1, 2).value,
        energy_vec(f2, tc, 2, 1).value,
        energy_seq(f3, tc).value,
    )
    sizes = (
        size_vec(f1, tc, 1, 2).value,
        size_vec(f2, tc, 2, 1).value,
        max(size_seq(f3, tc, 1, 2).value, size_seq(f3, tc, 2, 1).value),
    )
    interpolated = math.prod(e ** (1 - t) * s**t for e, s, t in zip(energies, sizes, theta))

    def report(**kwargs) -> LambdaReport:
        defaults = dict(
            energies=energies,
            sizes=sizes,
            start_level=None,
            levels=(),
            c_tree=1.0,
            c_alg_max=0.0,
            leftover=0.0,
            theta=theta,
            holder_exact=exact,
            interpolated_product=interpolated,
            model_sum=total,
            audits_passed=True,
            level_bounds=True,
            strongly_disjoint=True,
        )
        return LambdaReport(**(defaults | kwargs))

    if not len(tc) or min(energies) == 0 or min(sizes) == 0:
        return LambdaBound(0.0, {}, report())

    start = min(math.floor(math.log2(e / s)) for e, s in zip(energies, sizes))
    if len(tc) == 1:
        return _single_tritile_bound(terms, tc, f1, f2, f3, start, report)

    remaining = np.arange(len(tc))
    partition: dict[int, tuple[int, ...]] = {}
    levels: list[LevelRecord] = []
    c_tree = 1.0
    audits_passed = True
    strongly = True

    d = start
    while len(remaining) and d <= start + LEVEL_CAP:
        removed: list[int] = []
        tree_count = 0
        total_space = 0.0
        steps = (
            lambda p: energy_decrement(f1, p, 1, 2, d, energies[0]),
            lambda p: energy_decrement(f2, p, 2, 1, d, energies[1]),
            lambda p: energy_decrement_seq(f3, p, 1, 2, d, energies[2]),
            lambda p: energy_decrement_seq(f3, p, 2, 1, d, energies[2]),
        )
        for step in steps:
            current = tc.subset(remaining)
            local_terms = terms[remaining]
            result: DecrementResult = step(current)
            audits_passed &= result.audit.partition_passed
            strongly &= result.audit.strongly_disjoint is not False
            if result.trees:
                order = result.trees[0].components
                current_sizes = collection_sizes(f1, f2, f3, current, *order)
                for tree in result.trees:
                    estimate = tree_estimate(local_terms, current, tree.base, *order, current_sizes)
                    c_tree = max(c_tree, estimate.ratio)
                    total_space += current[tree.base].space.length
                    removed.extend(int(remaining[i]) for i in tree.members)
                    tree_count += 1
            remaining = remaining[list(result.remainder_indices)]
        if removed:
            product = math.prod(min(2.0**-d * e, s) for e, s in zip(energies, sizes))
            members = tuple(sorted(removed))
            partition[d] = members
            levels.append(
                LevelRecord(
                    level=d,
                    tritiles=len(members),
                    trees=tree_count,
                    total_space=total_space,
                    c_alg=total_space / 4.0**d,
                    size_product=product,
                    model_sum=math.fsum(terms[list(members)].tolist()),
                    bound=total_space * product,
                )
            )
        d += 1

    leftover = math.fsum(terms[remaining].tolist()) if len(remaining) else 0.0
    if len(remaining):
        logger.warning(f"{len(remaining)} tri-tiles left after {LEVEL_CAP} levels; bounded one by one")
        partition[d] = tuple(int(i) for i in remaining)

    # level bounds carry the measured tree constant
    levels = [
        replace(record, bound=c_tree * record.bound) for record in levels
    ]
    failed = [r for r in levels if r.model_sum > r.bound * (1 + LEVEL_SLACK)]
    for record in failed:
        logger.warning(
            f"level {record.level}: model sum {record.model_sum:.6g} exceeds "
            f"level bound {record.bound:.6g}"
        )
    level_bounds = not failed
    c_alg_max = max((record.c_alg for record in levels), default=0.0)
    bound = (
        c_tree
        * c_alg_max
        * math.fsum(4.0**record.level * record.size_product for record in levels)
        + leftover
    )
    return LambdaBound(
        bound,
        partition,
        report(
            start_level=start,
            levels=tuple(levels),
            c_tree=c_tree,
            c_alg_max=c_alg_max,
            leftover=leftover,
            audits_passed=audits_passed and level_bounds,
            level_bounds=level_bounds,
            strongly_disjoint=strongly,
        ),
    )


def _single_tritile_bound(
    terms: np.ndarray,
    tc: TileCollection,
    f1: SampledFunction,
    f2: SampledFunction,
    f3: Sequence[SampledFunction],
    start: int,
    report: Callable[..., LambdaReport],
) -> LambdaBound:
    estimate = tree_estimate(terms, tc, 0, 1, 2, collection_sizes(f1, f2, f3, tc, 1, 2))
    c_tree = max(1.0, estimate.ratio)
    bound = c_tree * estimate.rhs
    length = tc[0].space.length
    record = LevelRecord(
        level=start,
        tritiles=1,
        trees=1,
        total_space=length,
        c_alg=length / 4.0**start,
        size_product=math.prod(estimate.sizes),
        model_sum=estimate.lhs,
        bound=bound,
    )
    level_bounds = record.model_sum <= bound * (1 + LEVEL_SLACK)
    return LambdaBound(
        bound,
        {start: (0,)},
        report(
            start_level=start,
            levels=(record,),
            c_tree=c_tree,
            c_alg_max=record.c_alg,
            audits_passed=level_bounds,
            level_bounds=level_bounds,
        ),
    )
