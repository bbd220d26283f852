import pytest

from bilin_tf.grid.families import FunctionFamily, synthesize_test_function
from bilin_tf.grid.sampled import SampledFunction
from bilin_tf.grid.spec import GridSpec
from bilin_tf.intervals.families import random_well_distributed
from bilin_tf.timefreq import build_tritile_cover

BILIN_TF_ENV_VARS = ("BILIN_TF_THREADS", "BILIN_TF_FILE_LOGGING", "BILIN_TF_LOG_LEVEL")
TILE_BAND = (-4.0, 4.0)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep settings read by the CLI independent of the calling shell."""
    for name in BILIN_TF_ENV_VARS:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def small_grid() -> GridSpec:
    return GridSpec(64.0, 256)


@pytest.fixture
def fine_grid() -> GridSpec:
    return GridSpec(64.0, 1024)


@pytest.fixture
def bandlimited(small_grid):
    """Factory for seeded band-limited functions on ``small_grid``."""

    def _make(seed: int, band: tuple[float, float] = (-4.0, 4.0)) -> SampledFunction:
        return synthesize_test_function(
            small_grid,
            FunctionFamily.RANDOM_BANDLIMITED,
            {"band_low": band[0], "band_high": band[1]},
            seed,
        )

    return _make


@pytest.fixture(scope="module")
def tile_grid() -> GridSpec:
    return GridSpec(64.0, 512)


@pytest.fixture(scope="module")
def strips():
    return random_well_distributed(2, 3, length_band=(1.5, 1.5), separation=2.0)


@pytest.fixture(scope="module")
def cover(strips, tile_grid):
    return build_tritile_cover(strips, 4.0, 1.0, TILE_BAND).with_packets(tile_grid)


@pytest.fixture(scope="module")
def inputs(tile_grid, strips):
    """(f1, f2, [h_1, ..., h_K]) band-limited to the cover band."""
    params = {"band_low": TILE_BAND[0] - 2.0, "band_high": TILE_BAND[1] + 2.0}

    def draw(seed):
        return synthesize_test_function(tile_grid, FunctionFamily.RANDOM_BANDLIMITED, params, seed)

    return draw(1), draw(2), [draw(10 + n) for n in range(len(strips))]
