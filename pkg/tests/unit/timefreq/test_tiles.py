import pytest

from bilin_tf.errors import AssumptionError, ParameterError
from bilin_tf.intervals.families import random_well_distributed
from bilin_tf.intervals.interval import FreqInterval
from bilin_tf.timefreq import (
    SpaceInterval,
    Tile,
    TriTile,
    audit_tritile,
    build_tritile_cover,
    grid_certificate,
)
from bilin_tf.timefreq.serialization import read_tile_csv, write_tile_csv


class TestTile:
    def test_area_range(self):
        Tile(SpaceInterval(0.5, 1.0), FreqInterval(0.0, 1.0))
        with pytest.raises(ParameterError):
            Tile(SpaceInterval(0.5, 1.0), FreqInterval(0.0, 4.0))

    def test_space_length_range(self):
        with pytest.raises(ParameterError):
            Tile(SpaceInterval(0.0, 0.05), FreqInterval(0.0, 20.0))

    def test_overlap_needs_both_axes(self):
        a = Tile(SpaceInterval(0.5, 1.0), FreqInterval(0.0, 1.0))
        b = Tile(SpaceInterval(0.5, 1.0), FreqInterval(1.0, 1.0))
        c = Tile(SpaceInterval(0.5, 1.0), FreqInterval(0.5, 1.0))
        assert not a.overlaps(b)
        assert a.overlaps(c)

    def test_negative_strip_index(self):
        with pytest.raises(ParameterError):
            TriTile(SpaceInterval(0.5, 1.0), (FreqInterval(0.0, 1.0),) * 3, -1)


class TestCover:
    def test_every_tritile_passes_audit(self, cover, strips):
        assert len(cover) > 0
        failures = [s for s in cover if not audit_tritile(s, strips).passed]
        assert not failures, f"{len(failures)} tri-tiles fail the audit, first {failures[0]}"

    def test_deterministic(self, strips):
        a = build_tritile_cover(strips, 4.0, 1.0, (-4.0, 4.0))
        b = build_tritile_cover(strips, 4.0, 1.0, (-4.0, 4.0))
        assert a.tritiles == b.tritiles

    def test_components_inside_band(self, cover):
        for s in cover:
            assert -4.0 - 1e-9 <= s.freqs[0].lo and s.freqs[0].hi <= 4.0 + 1e-9
            assert -4.0 - 1e-9 <= s.freqs[1].lo and s.freqs[1].hi <= 4.0 + 1e-9

    def test_space_lattice_does_not_overlap(self, cover):
        space, frequency = cover.certificates
        assert space.overlap == 1
        assert frequency.family == "frequency"

    def test_area_assumption(self):
        long = random_well_distributed(2, 0, length_band=(4.0, 4.0))
        with pytest.raises(AssumptionError):
            build_tritile_cover(long, 4.0, 1.0)

    def test_space_scale_assumption(self, strips):
        with pytest.raises(AssumptionError):
            build_tritile_cover(strips, 4.0, 20.0)

    def test_strip_members_partition(self, cover, strips):
        members = [i for n in range(len(strips)) for i in cover.strip_members(n)]
        assert sorted(members) == list(range(len(cover)))


def test_grid_certificate_counts_same_scale_overlap():
    intervals = [SpaceInterval(0.5, 1.0), SpaceInterval(1.0, 1.0), SpaceInterval(1.5, 1.0)]
    assert grid_certificate("space", intervals).overlap == 2


def test_tile_csv_round_trip(tmp_path, cover, strips):
    path = tmp_path / "tiles.csv"
    write_tile_csv(cover, path)
    assert read_tile_csv(path, strips).tritiles == cover.tritiles
