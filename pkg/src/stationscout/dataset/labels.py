"""Turn an embedding matrix plus station locations into labeled regions."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..embedding import EmbeddingMatrix
from ..h3core import latlng_to_cell
from ..hexgrid import CellId
from ..ingest import StationRecord

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LabeledRegion:
    """One micro-region with its feature vector and station label."""

    cell: CellId
    features: np.ndarray
    label: int


def label_regions(
    matrix: EmbeddingMatrix, stations: Sequence[StationRecord]
) -> list[LabeledRegion]:
    """Label every cell of the matrix: 1 if it contains a station, else 0.

    A station belongs to exactly one cell, the one its point falls in.
    Stations outside the tessellated area are logged and ignored. The
    matrix must already be normalized so that downstream training sees
    comparable feature scales.
    """
    if not matrix.normalized:
        raise ValueError("matrix must be normalized before labeling")
    positive: set[CellId] = set()
    for st in stations:
        cell = CellId(latlng_to_cell(st.lat, st.lon, matrix.resolution), matrix.resolution)
        if cell in matrix.rows:
            positive.add(cell)
        else:
            log.warning(
                "station %s at (%.5f, %.5f) is outside the tessellated area; ignored",
                st.station_id,
                st.lat,
                st.lon,
            )
    return [
        LabeledRegion(cell, matrix.rows[cell], 1 if cell in positive else 0)
        for cell in sorted(matrix.rows)
    ]
