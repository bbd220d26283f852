import numpy as np

from bilin_tf.timefreq import TileCollection, conflict_matrix, is_sparse, sparse_split


class TestSparseSplit:
    def test_cover_is_not_sparse(self, cover):
        # neighbouring omega_1 boxes touch, so their closed 2-dilates meet
        assert not is_sparse(cover)

    def test_parts_are_sparse_and_partition(self, cover):
        parts = sparse_split(cover)
        assert len(parts) > 1
        for index, part in enumerate(parts):
            assert is_sparse(part), f"part {index} has conflicts"
        merged = sorted(s for part in parts for s in part)
        assert merged == sorted(cover)

    def test_parts_keep_packets(self, cover):
        assert all(part.packets is cover.packets for part in sparse_split(cover))

    def test_single_tritile_is_sparse(self, cover):
        assert sparse_split(cover.subset([0]))[0].tritiles == (cover[0],)

    def test_empty(self, cover):
        assert sparse_split(cover.subset([])) == []

    def test_identical_duplicates_conflict(self, cover):
        doubled = TileCollection((cover[0], cover[0]), cover.strips)
        matrix = conflict_matrix(doubled)
        assert matrix[0, 1] and matrix[1, 0]
        assert not np.diag(matrix).any()
