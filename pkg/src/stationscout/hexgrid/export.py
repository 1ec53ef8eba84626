"""CityGrid serialization: GeoJSON view and binary snapshot."""

from .. import h3core as h3
from ..snapshot import load_snapshot, save_snapshot
from .assign import CityGrid

GRID_SNAPSHOT_KIND = "city-grid"


def cell_ring(index: int):
    """Closed (lon, lat) ring of one cell."""
    ring = [[lng, lat] for lat, lng in h3.cell_to_boundary(index)]
    ring.append(list(ring[0]))
    return ring


def grid_to_geojson(grid: CityGrid) -> dict:
    features = []
    for cell in sorted(grid.cells):
        features.append(
            {
                "type": "Feature",
                "geometry": {"type": "Polygon", "coordinates": [cell_ring(cell.index)]},
                "properties": {
                    "cell": h3.cell_to_string(cell.index),
                    "resolution": cell.resolution,
                    "feature_count": len(grid.assignment.get(cell, ())),
                },
            }
        )
    return {"type": "FeatureCollection", "features": features}


def save_grid(grid: CityGrid, path):
    save_snapshot(grid, path, GRID_SNAPSHOT_KIND)


def load_grid(path) -> CityGrid:
    return load_snapshot(path, GRID_SNAPSHOT_KIND)
