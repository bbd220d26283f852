from bilin_tf.intervals.bump import (
    DEFAULT_FLATNESS,
    BumpSymbol,
    make_bump,
    smooth_step,
    unit_partition_bump,
)
from bilin_tf.intervals.collection import (
    ASSUMPTION_LENGTH_RANGE,
    IntervalCollection,
    max_overlap,
    overlap_constant,
    overlap_constant_mesh,
)
from bilin_tf.intervals.families import (
    band_partition,
    dyadic_collection,
    random_well_distributed,
    unit_translates,
)
from bilin_tf.intervals.interval import FreqInterval, Interval
from bilin_tf.intervals.whitney import (
    WhitneyCutoff,
    WhitneyPiece,
    whitney_divisions,
    whitney_refine,
)

__all__ = [
    "ASSUMPTION_LENGTH_RANGE",
    "BumpSymbol",
    "DEFAULT_FLATNESS",
    "FreqInterval",
    "Interval",
    "IntervalCollection",
    "WhitneyCutoff",
    "WhitneyPiece",
    "band_partition",
    "dyadic_collection",
    "make_bump",
    "max_overlap",
    "overlap_constant",
    "overlap_constant_mesh",
    "random_well_distributed",
    "smooth_step",
    "unit_partition_bump",
    "unit_translates",
    "whitney_divisions",
    "whitney_refine",
]
