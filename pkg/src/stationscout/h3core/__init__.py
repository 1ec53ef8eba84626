"""Hierarchical hexagonal grid on a sphere.

Cells are 64-bit integers addressing one hexagon (or one of twelve
pentagons) at a resolution from 0 to 15. Every function here speaks
degrees; the submodules work in radians and face coordinates.
"""

import math

from . import _cell, _index, _tables
from ._traversal import (
    PentagonDistortion,
    grid_disk,
    grid_disk_distances,
    grid_ring,
)

RESOLUTION_COUNT = 16

__all__ = [
    "PentagonDistortion",
    "RESOLUTION_COUNT",
    "cell_to_boundary",
    "cell_to_latlng",
    "cell_to_string",
    "get_base_cell",
    "get_resolution",
    "grid_disk",
    "grid_disk_distances",
    "grid_ring",
    "is_pentagon",
    "is_valid_cell",
    "latlng_to_cell",
    "string_to_cell",
]


def latlng_to_cell(lat: float, lng: float, res: int) -> int:
    """Index the cell containing the point, at resolution 0..15."""
    if not 0 <= res < RESOLUTION_COUNT:
        raise ValueError(f"resolution out of range: {res}")
    return _cell.geo_to_cell(math.radians(lat), math.radians(lng), res)


def cell_to_latlng(h: int) -> tuple[float, float]:
    """Center of the cell as (lat, lng) in degrees."""
    lat, lng = _cell.cell_to_geo(h)
    return math.degrees(lat), math.degrees(lng)


def cell_to_boundary(h: int) -> tuple[tuple[float, float], ...]:
    """Cell vertices as (lat, lng) degrees in counterclockwise order.

    Hexagons crossing an icosahedron edge gain extra distortion
    vertices, so the tuple holds 6 to 10 points (5 to 10 for
    pentagons).
    """
    return tuple(
        (math.degrees(lat), math.degrees(lng))
        for lat, lng in _cell.cell_to_boundary(h)
    )


def is_valid_cell(h: int) -> bool:
    return _cell.is_valid_cell(h)


def is_pentagon(h: int) -> bool:
    return _cell.is_pentagon_cell(h)


def get_resolution(h: int) -> int:
    return _index.get_resolution(h)


def get_base_cell(h: int) -> int:
    return _index.get_base_cell(h)


def cell_to_string(h: int) -> str:
    """Canonical lowercase-hex form of a cell index."""
    return _index.cell_index_to_string(h)


def string_to_cell(s: str) -> int:
    return _index.string_to_cell_index(s)
