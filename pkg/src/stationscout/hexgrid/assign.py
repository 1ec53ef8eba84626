"""Feature-to-cell assignment with geodesic clip measures."""

import logging
from dataclasses import dataclass
from typing import NamedTuple

from shapely import STRtree

from .. import h3core as h3
from . import geodesy
from .cells import CellId, cell_polygon

log = logging.getLogger(__name__)


class Assignment(NamedTuple):
    ref: int  # position of the feature in the source extract
    measure: float  # 1.0 for points, meters for lines, m^2 for areas


@dataclass(frozen=True)
class AssignmentDiagnostics:
    skipped_invalid: int
    dropped_outside: int
    assigned: int


@dataclass(frozen=True)
class CityGrid:
    city_name: str
    resolution: int
    cells: frozenset
    assignment: dict  # CellId -> tuple of Assignment
    feature_class: tuple  # ref -> (category, shape_class)
    diagnostics: AssignmentDiagnostics


def _measure(shape_class: str, piece) -> float:
    if shape_class == "line":
        return geodesy.shape_length(piece)
    return geodesy.shape_area(piece)


def assign_features(extract, cells) -> CityGrid:
    """Assign every extract feature to the cells it touches.

    Points land in their containing cell; lines and areas are clipped
    per cell and carry the geodesic measure of each clipped piece.
    Invalid geometries are skipped, features outside every cell are
    dropped; both show up in the diagnostics. Inputs are immutable and
    the per-feature work is independent, so callers may shard the
    feature list and merge per-cell results.
    """
    if not cells:
        raise ValueError("cells must be non-empty")
    resolutions = {c.resolution for c in cells}
    if len(resolutions) != 1:
        raise ValueError(f"mixed resolutions in cell set: {sorted(resolutions)}")
    resolution = resolutions.pop()

    cell_list = sorted(cells)
    polys = [cell_polygon(c.index) for c in cell_list]
    tree = STRtree(polys)
    assignment = {c: [] for c in cell_list}

    skipped = 0
    outside = 0
    for ref, feat in enumerate(extract.features):
        geom = feat.geometry
        if not geom.is_valid:
            skipped += 1
            log.warning("feature ref %d: invalid geometry, skipped", ref)
            continue
        if feat.shape_class == "point":
            cell = CellId(h3.latlng_to_cell(geom.y, geom.x, resolution), resolution)
            if cell in assignment:
                assignment[cell].append(Assignment(ref, 1.0))
            else:
                outside += 1
            continue
        touched = False
        for i in sorted(tree.query(geom)):
            piece = geom.intersection(polys[i])
            if piece.is_empty:
                continue
            touched = True
            assignment[cell_list[i]].append(Assignment(ref, _measure(feat.shape_class, piece)))
        if not touched:
            outside += 1

    total = len(extract.features)
    return CityGrid(
        city_name=extract.city_name,
        resolution=resolution,
        cells=frozenset(cells),
        assignment={c: tuple(v) for c, v in assignment.items()},
        feature_class=tuple((f.category, f.shape_class) for f in extract.features),
        diagnostics=AssignmentDiagnostics(skipped, outside, total - skipped - outside),
    )
