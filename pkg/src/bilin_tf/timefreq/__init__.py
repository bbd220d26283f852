from bilin_tf.timefreq.algorithms import (
    DecrementAudit,
    DecrementResult,
    energy_decrement,
    energy_decrement_seq,
)
from bilin_tf.timefreq.collection import (
    GridCertificate,
    SparsenessParams,
    TileCollection,
    grid_certificate,
    nesting_violations,
)
from bilin_tf.timefreq.cover import DEFAULT_BAND, build_tritile_cover
from bilin_tf.timefreq.energy import EnergyMode, EnergyResult, energy_seq, energy_vec, strongly_disjoint
from bilin_tf.timefreq.lambda_bound import LambdaBound, LambdaReport, LevelRecord, lambda_bound
from bilin_tf.timefreq.model_sum import TreeEstimate, model_sum, model_terms, tritile_estimate
from bilin_tf.timefreq.size import SizeResult, size_seq, size_vec
from bilin_tf.timefreq.sparse import conflict_matrix, is_sparse, sparse_split
from bilin_tf.timefreq.tiles import SpaceInterval, Tile, TriTile, TriTileAudit, audit_tritile
from bilin_tf.timefreq.vectorize import VectorizedSet, vectorize, vectorize_pair
from bilin_tf.timefreq.wave_packet import PacketBank, WavePacket, make_wave_packet

__all__ = [
    "DEFAULT_BAND",
    "DecrementAudit",
    "DecrementResult",
    "EnergyMode",
    "EnergyResult",
    "GridCertificate",
    "LambdaBound",
    "LambdaReport",
    "LevelRecord",
    "PacketBank",
    "SizeResult",
    "SpaceInterval",
    "SparsenessParams",
    "Tile",
    "TileCollection",
    "TreeEstimate",
    "TriTile",
    "TriTileAudit",
    "VectorizedSet",
    "WavePacket",
    "audit_tritile",
    "build_tritile_cover",
    "conflict_matrix",
    "energy_decrement",
    "energy_decrement_seq",
    "energy_seq",
    "energy_vec",
    "grid_certificate",
    "is_sparse",
    "lambda_bound",
    "make_wave_packet",
    "model_sum",
    "model_terms",
    "nesting_violations",
    "size_seq",
    "size_vec",
    "sparse_split",
    "strongly_disjoint",
    "tritile_estimate",
    "vectorize",
    "vectorize_pair",
]
