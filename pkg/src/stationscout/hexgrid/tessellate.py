"""Boundary tessellation: center-in-polygon fill over the hex grid."""

from collections import deque

from shapely.prepared import prep

from .. import h3core as h3
from .cells import SUPPORTED_RESOLUTIONS, CellId, cell_center, cell_polygon


class ConfigError(ValueError):
    pass


class GeometryError(ValueError):
    pass


def _components(boundary):
    if boundary.is_empty:
        return []
    if boundary.geom_type == "Polygon":
        return [boundary]
    if boundary.geom_type == "MultiPolygon":
        return list(boundary.geoms)
    raise GeometryError(f"boundary must be polygonal, got {boundary.geom_type}")


def _seed_cells(poly, resolution):
    pts = [poly.representative_point()]
    rings = [poly.exterior, *poly.interiors]
    seeds = set()
    for pt in pts:
        seeds.add(h3.latlng_to_cell(pt.y, pt.x, resolution))
    for ring in rings:
        for lon, lat in ring.coords:
            seeds.add(h3.latlng_to_cell(lat, lon, resolution))
    return seeds


def tessellate(boundary, resolution: int) -> frozenset:
    """Cells whose center lies inside the boundary (closed test).

    The fill walks the grid outward from seed cells, traversing every
    cell whose hexagon overlaps the boundary, so narrow corridors and
    cells reachable only through edge-overlap are found. Deterministic:
    the result depends only on (boundary, resolution).
    """
    if resolution not in SUPPORTED_RESOLUTIONS:
        raise ConfigError(
            f"resolution {resolution} unsupported, expected one of {SUPPORTED_RESOLUTIONS}"
        )
    out = set()
    for poly in _components(boundary):
        if not poly.is_valid:
            raise GeometryError("boundary polygon is invalid (self-intersection?)")
        prepared = prep(poly)
        queue = deque(_seed_cells(poly, resolution))
        visited = set(queue)
        while queue:
            cur = queue.popleft()
            overlaps = prepared.intersects(cell_polygon(cur))
            if not overlaps:
                continue
            if prepared.intersects(cell_center(cur)):
                out.add(cur)
            for n in h3.grid_disk(cur, 1):
                if n not in visited:
                    visited.add(n)
                    queue.append(n)
    return frozenset(CellId(c, resolution) for c in out)
