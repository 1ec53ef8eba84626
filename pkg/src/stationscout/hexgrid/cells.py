"""Cell identity and geometry for the supported resolutions."""

from dataclasses import dataclass

from shapely.geometry import Point, Polygon

from .. import h3core as h3

SUPPORTED_RESOLUTIONS = (9, 10, 11)


@dataclass(frozen=True, order=True)
class CellId:
    index: int
    resolution: int

    def __post_init__(self):
        if self.resolution not in SUPPORTED_RESOLUTIONS:
            raise ValueError(f"unsupported resolution {self.resolution}")
        if not h3.is_valid_cell(self.index):
            raise ValueError(f"invalid cell index {self.index:#x}")
        if h3.get_resolution(self.index) != self.resolution:
            raise ValueError(
                f"cell {self.index:#x} is resolution {h3.get_resolution(self.index)},"
                f" not {self.resolution}"
            )

    def __str__(self) -> str:
        return h3.cell_to_string(self.index)


def cell_polygon(index: int) -> Polygon:
    """Cell outline as a shapely polygon in (lon, lat) order."""
    return Polygon([(lng, lat) for lat, lng in h3.cell_to_boundary(index)])


def cell_center(index: int) -> Point:
    lat, lng = h3.cell_to_latlng(index)
    return Point(lng, lat)
