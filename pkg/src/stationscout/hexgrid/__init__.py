"""City tessellation into hex cells, feature assignment, ring lookup."""

from . import geodesy
from .assign import Assignment, AssignmentDiagnostics, CityGrid, assign_features
from .cells import SUPPORTED_RESOLUTIONS, CellId, cell_center, cell_polygon
from .export import cell_ring, grid_to_geojson, load_grid, save_grid
from .rings import RingNeighborhood, k_rings
from .tessellate import ConfigError, GeometryError, tessellate

__all__ = [
    "Assignment",
    "AssignmentDiagnostics",
    "CellId",
    "CityGrid",
    "ConfigError",
    "GeometryError",
    "RingNeighborhood",
    "SUPPORTED_RESOLUTIONS",
    "assign_features",
    "cell_center",
    "cell_polygon",
    "cell_ring",
    "geodesy",
    "grid_to_geojson",
    "k_rings",
    "load_grid",
    "save_grid",
    "tessellate",
]
