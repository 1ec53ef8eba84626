"""Raw OSM element model and response parsing."""

import datetime
from dataclasses import dataclass

from shapely.geometry import LineString, Point, Polygon

from . import assemble

# closed ways with these keys stay linear unless tagged area=yes
_LINEAR_KEYS = ("highway", "barrier")


class ElementError(ValueError):
    pass


@dataclass(frozen=True)
class RawOsmElement:
    element_id: int
    kind: str  # node | way | relation
    tags: dict
    geometry: object  # shapely Point, LineString, Polygon or MultiPolygon
    fetched_at: datetime.datetime


@dataclass(frozen=True)
class CategorizedFeature:
    element_id: int
    category: str
    shape_class: str  # point | line | area
    geometry: object


def _check_coords(coords):
    for lon, lat in coords:
        if not (-90.0 <= lat <= 90.0 and -180.0 <= lon <= 180.0):
            raise ElementError(f"coordinate out of range: ({lat}, {lon})")


def _way_is_area(tags: dict, closed: bool) -> bool:
    if not closed:
        return False
    area = tags.get("area")
    if area == "yes":
        return True
    if area == "no":
        return False
    return not any(k in tags for k in _LINEAR_KEYS)


def way_geometry(coords, tags: dict):
    """LineString or Polygon for a way's coordinate run."""
    if len(coords) < 2:
        raise ElementError("way with fewer than 2 points")
    _check_coords(coords)
    closed = coords[0] == coords[-1]
    if _way_is_area(tags, closed):
        if len(coords) < 4:
            raise ElementError("degenerate ring")
        return Polygon(coords)
    return LineString(coords)


def shape_class_of(geometry) -> str:
    gt = geometry.geom_type
    if gt == "Point":
        return "point"
    if gt in ("LineString", "MultiLineString"):
        return "line"
    if gt in ("Polygon", "MultiPolygon"):
        return "area"
    raise ElementError(f"unsupported geometry type {gt}")


def parse_overpass_elements(doc: dict):
    """Parse an Overpass `out tags geom` payload.

    Returns (elements, dropped) where dropped counts members that
    could not be materialized (unassemblable relations, degenerate
    ways).
    """
    now = datetime.datetime.now(datetime.timezone.utc)
    elements = []
    dropped = 0
    for el in doc.get("elements", []):
        tags = el.get("tags") or {}
        try:
            if el["type"] == "node":
                _check_coords([(el["lon"], el["lat"])])
                geom = Point(el["lon"], el["lat"])
            elif el["type"] == "way":
                coords = [(g["lon"], g["lat"]) for g in el.get("geometry") or []]
                geom = way_geometry(coords, tags)
            elif el["type"] == "relation":
                if tags.get("type") not in ("multipolygon", "boundary"):
                    continue
                rings = [
                    (m.get("role", ""), [(g["lon"], g["lat"]) for g in m["geometry"]])
                    for m in el.get("members", [])
                    if m.get("type") == "way" and m.get("geometry")
                ]
                geom = assemble.multipolygon_from_members(rings)
            else:
                continue
        except (ElementError, assemble.AssemblyError, KeyError):
            dropped += 1
            continue
        elements.append(RawOsmElement(el["id"], el["type"], tags, geom, now))
    return elements, dropped


def feature_from_element(element: RawOsmElement, category: str) -> CategorizedFeature:
    return CategorizedFeature(
        element.element_id, category, shape_class_of(element.geometry), element.geometry
    )
