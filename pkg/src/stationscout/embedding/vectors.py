"""Per-cell base vectors: category counting and shape analysis."""

from dataclasses import dataclass

import numpy as np

from ..ingest.categories import CATEGORY_IDS, CATEGORY_INDEX

SHAPE_SPECIALS = ("water", "roads_bike", "roads_drive", "roads_walk")

# 16 categories measured as (area, point count) pairs, in canonical order
PAIRED_CATEGORIES = tuple(c for c in CATEGORY_IDS if c not in SHAPE_SPECIALS)

COUNT_COLUMNS = CATEGORY_IDS

SHAPE_COLUMNS = (
    "water_area",
    "roads_bike_length",
    "roads_drive_length",
    "roads_walk_length",
    *(name for cat in PAIRED_CATEGORIES for name in (f"{cat}_area", f"{cat}_points")),
)

_PAIR_BASE = {cat: 4 + 2 * i for i, cat in enumerate(PAIRED_CATEGORIES)}
_LENGTH_COL = {"roads_bike": 1, "roads_drive": 2, "roads_walk": 3}


@dataclass(frozen=True)
class RegionVector:
    cell: object
    method: str
    values: np.ndarray

    @property
    def dimension(self) -> int:
        return self.values.shape[0]


def embed_count(grid, cell) -> RegionVector:
    """20 category counts; a feature counts once per cell it touches."""
    values = np.zeros(len(CATEGORY_IDS))
    for entry in grid.assignment[cell]:
        category, _ = grid.feature_class[entry.ref]
        values[CATEGORY_INDEX[category]] += 1
    return RegionVector(cell, "category_counting", values)


def embed_shape(grid, cell) -> RegionVector:
    """36 shape measures: water area, three road lengths, then
    (area, point count) per remaining category.

    Linear features outside the road categories and polygonal road
    features carry no shape signal and are left out.
    """
    values = np.zeros(36)
    for entry in grid.assignment[cell]:
        category, shape_class = grid.feature_class[entry.ref]
        if category == "water":
            if shape_class == "area":
                values[0] += entry.measure
        elif category in _LENGTH_COL:
            if shape_class == "line":
                values[_LENGTH_COL[category]] += entry.measure
        else:
            base = _PAIR_BASE[category]
            if shape_class == "area":
                values[base] += entry.measure
            elif shape_class == "point":
                values[base + 1] += 1
    return RegionVector(cell, "shape_analysis", values)
