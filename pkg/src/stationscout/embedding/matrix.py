"""City embedding matrices: build, normalize, serialize."""

import json
from dataclasses import dataclass

import numpy as np

from ..hexgrid import k_rings
from ..snapshot import load_snapshot, save_snapshot
from .combine import NeighborhoodConfig, combine_neighborhood
from .vectors import COUNT_COLUMNS, SHAPE_COLUMNS, embed_count, embed_shape

EMBEDDING_METHODS = ("category_counting", "shape_analysis")

MATRIX_SNAPSHOT_KIND = "embedding-matrix"


@dataclass(frozen=True)
class EmbeddingMatrix:
    city_name: str
    resolution: int
    config: NeighborhoodConfig
    rows: dict  # CellId -> np.ndarray
    column_semantics: tuple
    normalized: bool
    norm_bounds: tuple | None  # (mins, maxs) recorded by normalize_city


def _combined_columns(base_columns, config: NeighborhoodConfig):
    if config.method != "concatenate":
        return tuple(base_columns)
    cols = list(base_columns)
    for k in range(1, config.K + 1):
        cols.extend(f"{c}_ring{k}" for c in base_columns)
    return tuple(cols)


def build_matrix(grid, embedding_method: str, config: NeighborhoodConfig) -> EmbeddingMatrix:
    """Embed every grid cell and fold in its K-ring neighborhood.

    Ring means consider only cells inside the city grid; a ring with
    no interior cells contributes a zero vector at full weight.
    """
    if embedding_method not in EMBEDDING_METHODS:
        raise ValueError(f"unknown embedding method {embedding_method!r}")
    embed = embed_count if embedding_method == "category_counting" else embed_shape
    base_columns = COUNT_COLUMNS if embedding_method == "category_counting" else SHAPE_COLUMNS

    base = {cell: embed(grid, cell).values for cell in grid.cells}
    rows = {}
    for cell in grid.cells:
        hood = k_rings(cell, config.K)
        ring_vecs = []
        for ring in hood.rings:
            inside = [base[c] for c in sorted(ring) if c in base]
            ring_vecs.append(np.array(inside) if inside else np.empty((0,)))
        rows[cell] = combine_neighborhood(base[cell], ring_vecs, config)
    return EmbeddingMatrix(
        city_name=grid.city_name,
        resolution=grid.resolution,
        config=config,
        rows=rows,
        column_semantics=_combined_columns(base_columns, config),
        normalized=False,
        norm_bounds=None,
    )


def normalize_city(matrix: EmbeddingMatrix) -> EmbeddingMatrix:
    """Per-column min-max over all city rows; constant columns map to 0."""
    if matrix.normalized:
        raise ValueError("matrix already normalized")
    if not matrix.rows:
        raise ValueError("empty matrix")
    order = sorted(matrix.rows)
    stacked = np.stack([matrix.rows[c] for c in order])
    mins = stacked.min(axis=0)
    maxs = stacked.max(axis=0)
    span = maxs - mins
    safe = np.where(span == 0.0, 1.0, span)
    scaled = (stacked - mins) / safe
    scaled[:, span == 0.0] = 0.0
    return EmbeddingMatrix(
        city_name=matrix.city_name,
        resolution=matrix.resolution,
        config=matrix.config,
        rows={c: scaled[i] for i, c in enumerate(order)},
        column_semantics=matrix.column_semantics,
        normalized=True,
        norm_bounds=(tuple(float(x) for x in mins), tuple(float(x) for x in maxs)),
    )


def matrix_to_csv(matrix: EmbeddingMatrix, path):
    """Deterministic CSV: header = cell + column semantics, rows sorted."""
    with open(path, "w") as f:
        f.write("cell," + ",".join(matrix.column_semantics) + "\n")
        for cell in sorted(matrix.rows):
            values = ",".join(repr(float(v)) for v in matrix.rows[cell])
            f.write(f"{cell},{values}\n")


def save_norm_sidecar(matrix: EmbeddingMatrix, path):
    if matrix.norm_bounds is None:
        raise ValueError("matrix has no recorded normalization bounds")
    mins, maxs = matrix.norm_bounds
    doc = {
        "city": matrix.city_name,
        "resolution": matrix.resolution,
        "columns": list(matrix.column_semantics),
        "min": list(mins),
        "max": list(maxs),
    }
    with open(path, "w") as f:
        json.dump(doc, f, indent=1, sort_keys=True)


def save_matrix(matrix: EmbeddingMatrix, path):
    save_snapshot(matrix, path, MATRIX_SNAPSHOT_KIND)


def load_matrix(path) -> EmbeddingMatrix:
    return load_snapshot(path, MATRIX_SNAPSHOT_KIND)
