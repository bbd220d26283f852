"""Experiment configuration schema.

Experiment files are TOML (or YAML) tables whose keys mirror the models
below. Unknown keys are rejected at every level::

    experiment = "bilinear_sweep"
    trials = 200
    seed = 7

    [grid]
    period_length = 64.0
    sample_count = 4096

    [collection]
    kind = "random"
    sweep_counts = [4, 16, 64]

    [exponents]
    p = 4.0
    q = 4.0
"""

import logging
import math
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from bilin_tf.config.experiment_file import read_experiment_file
from bilin_tf.errors import BilinTfError, ConfigError
from bilin_tf.grid.exponents import ExponentTriple
from bilin_tf.grid.families import FunctionFamily
from bilin_tf.grid.spec import DEFAULT_PERIOD_LENGTH, DEFAULT_SAMPLE_COUNT, GridSpec
from bilin_tf.harness.experiment_names import Experiment
from bilin_tf.intervals.collection import IntervalCollection
from bilin_tf.intervals.families import (
    band_partition,
    dyadic_collection,
    random_well_distributed,
    unit_translates,
)
from bilin_tf.pseudo.presets import SymbolPreset

logger = logging.getLogger(__name__)

MAX_SEED = 2**64 - 1


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GridParams(_Section):
    period_length: float = Field(DEFAULT_PERIOD_LENGTH, gt=0)
    sample_count: int = Field(DEFAULT_SAMPLE_COUNT, ge=64)

    @model_validator(mode="after")
    def check_power_of_two(self) -> "GridParams":
        n = self.sample_count
        if n & (n - 1):
            raise ValueError(f"sample_count must be a power of two, got {n}")
        return self

    def to_grid(self) -> GridSpec:
        return GridSpec(self.period_length, self.sample_count)


class CollectionParams(_Section):
    kind: Literal["random", "dyadic", "unit_translates", "band_partition"] = "random"
    count: int = Field(8, ge=1)
    length_low: float = Field(1.0, gt=0)
    length_high: float = Field(1.0, gt=0)
    separation: float = Field(2.0, gt=0)
    center: float = 0.0
    seed: int = Field(0, ge=0)
    # |Omega| values for the uniform-boundedness sweeps
    sweep_counts: list[int] = Field(default_factory=lambda: [4, 8, 16, 32, 64])
    band_low: float = -16.0
    band_high: float = 16.0

    @model_validator(mode="after")
    def check_ranges(self) -> "CollectionParams":
        if self.length_low > self.length_high:
            raise ValueError(f"length_low {self.length_low} exceeds length_high {self.length_high}")
        if any(count < 1 for count in self.sweep_counts):
            raise ValueError(f"sweep counts must be positive, got {self.sweep_counts}")
        if not self.band_low < self.band_high:
            raise ValueError(f"empty band [{self.band_low}, {self.band_high})")
        return self

    def build(self, count: int | None = None, seed: int | None = None) -> IntervalCollection:
        count = self.count if count is None else count
        seed = self.seed if seed is None else seed
        match self.kind:
            case "random":
                return random_well_distributed(
                    count,
                    seed,
                    length_band=(self.length_low, self.length_high),
                    separation=self.separation,
                    center=self.center,
                )
            case "dyadic":
                return dyadic_collection(0, count - 1)
            case "unit_translates":
                start = math.floor(self.center) - count // 2
                return unit_translates(start, start + count - 1, self.length_low)
            case "band_partition":
                return band_partition(self.band_low, self.band_high, count, seed)


class ExponentParams(_Section):
    p: float = 4.0
    q: float = 4.0
    r: float | None = None

    @model_validator(mode="after")
    def check_holder(self) -> "ExponentParams":
        try:
            self.triple()
        except BilinTfError as e:
            raise ValueError(str(e)) from None
        return self

    def triple(self) -> ExponentTriple:
        if self.r is None:
            return ExponentTriple.from_pq(self.p, self.q)
        return ExponentTriple(self.p, self.q, self.r)


class TileParams(_Section):
    strip_count: int = Field(2, ge=1)
    strip_length: float = Field(1.5, gt=0)
    strip_separation: float = Field(2.0, gt=0)
    space_extent: float = Field(8.0, gt=0)
    space_scale: float = Field(1.0, gt=0)
    band_low: float = -8.0
    band_high: float = 8.0
    exponents: tuple[float, float, float] = (3.0, 3.0, 3.0)
    max_tritiles: int = Field(500, ge=1)
    # tri-tiles drawn for the greedy/exhaustive energy comparison
    oracle_size: int = Field(6, ge=1, le=12)

    @model_validator(mode="after")
    def check_band(self) -> "TileParams":
        if not self.band_low < self.band_high:
            raise ValueError(f"empty band [{self.band_low}, {self.band_high})")
        if any(not 2 < p < math.inf for p in self.exponents):
            raise ValueError(f"tile exponents must lie in (2, inf), got {self.exponents}")
        return self


class SymbolParams(_Section):
    preset: SymbolPreset = SymbolPreset.GAUSSIAN_RIDGE
    params: dict[str, float | int] = Field(default_factory=dict)
    # translated_family and offdiag_decay profile
    profile_width: float = Field(1.0, gt=0)
    n_range: tuple[int, int] = (-4, 4)
    max_distance: int | None = Field(None, ge=1)

    @model_validator(mode="after")
    def check_range(self) -> "SymbolParams":
        if self.n_range[0] > self.n_range[1]:
            raise ValueError(f"empty translate range {self.n_range}")
        return self


class WeakTypeParams(_Section):
    set_kind: Literal["random", "interval", "full", "single_cell"] = "random"
    fractions: tuple[float, float, float] = (0.25, 0.25, 0.25)
    phases: Literal["sign", "circle"] = "sign"

    @model_validator(mode="after")
    def check_fractions(self) -> "WeakTypeParams":
        if any(not 0 < fraction <= 1 for fraction in self.fractions):
            raise ValueError(f"set fractions must lie in (0, 1], got {self.fractions}")
        return self


class FunctionParams(_Section):
    family: FunctionFamily = FunctionFamily.RANDOM_BANDLIMITED
    params: dict[str, Any] = Field(default_factory=lambda: {"band_low": -20.0, "band_high": 20.0})


class ExperimentConfig(_Section):
    experiment: Experiment
    grid: GridParams = Field(default_factory=GridParams)
    collection: CollectionParams = Field(default_factory=CollectionParams)
    exponents: ExponentParams = Field(default_factory=ExponentParams)
    tiles: TileParams = Field(default_factory=TileParams)
    symbol: SymbolParams = Field(default_factory=SymbolParams)
    weak_type: WeakTypeParams = Field(default_factory=WeakTypeParams)
    functions: FunctionParams = Field(default_factory=FunctionParams)
    trials: int = Field(20, ge=1)
    seed: int = Field(0, ge=0, le=MAX_SEED)
    output_path: str = "results"

    @property
    def output_dir(self) -> Path:
        return Path(self.output_path)


def _field_path(location: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in location) or "<root>"


def validate_experiment(data: dict[str, Any]) -> ExperimentConfig:
    """Validate a raw mapping, collecting every failing field path into one error."""
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        problems = [f"{_field_path(error['loc'])}: {error['msg']}" for error in e.errors()]
        raise ConfigError("invalid experiment config:\n  " + "\n  ".join(problems)) from None


def load_experiment(
    experiment: Experiment,
    config_path: Path | None = None,
    overrides: dict[str, Any] | None = None,
) -> ExperimentConfig:
    """File values (if any), then CLI overrides; the sub-command names the experiment."""
    data: dict[str, Any] = read_experiment_file(config_path) if config_path else {}
    named = data.get("experiment")
    if named is not None and named != experiment.value:
        raise ConfigError(
            f"experiment: config file is for {named!r}, not {experiment.value!r}"
        )
    data = data | {"experiment": experiment.value}
    data |= {key: value for key, value in (overrides or {}).items() if value is not None}
    config = validate_experiment(data)
    logger.debug(f"loaded {experiment} config: {config}")
    return config
