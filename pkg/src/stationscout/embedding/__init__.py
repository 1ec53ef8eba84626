"""Region vectors, neighborhood combination, city normalization."""

from .combine import COMBINATION_METHODS, NeighborhoodConfig, combine_neighborhood
from .matrix import (
    EMBEDDING_METHODS,
    EmbeddingMatrix,
    build_matrix,
    load_matrix,
    matrix_to_csv,
    normalize_city,
    save_matrix,
    save_norm_sidecar,
)
from .vectors import (
    COUNT_COLUMNS,
    SHAPE_COLUMNS,
    RegionVector,
    embed_count,
    embed_shape,
)

__all__ = [
    "COMBINATION_METHODS",
    "COUNT_COLUMNS",
    "EMBEDDING_METHODS",
    "EmbeddingMatrix",
    "NeighborhoodConfig",
    "RegionVector",
    "SHAPE_COLUMNS",
    "build_matrix",
    "combine_neighborhood",
    "embed_count",
    "embed_shape",
    "load_matrix",
    "matrix_to_csv",
    "normalize_city",
    "save_matrix",
    "save_norm_sidecar",
]
