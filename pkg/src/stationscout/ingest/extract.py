"""City extracts: fetch, categorize, validate, snapshot."""

import hashlib
import importlib.resources
import json
import logging
import os
from dataclasses import dataclass

from shapely.geometry import box, shape
from shapely.ops import nearest_points
from shapely.prepared import prep

from ..hexgrid import geodesy
from ..snapshot import load_snapshot, save_snapshot
from . import assemble, elements, rules as rules_mod, stations as stations_mod
from .overpass import OverpassClient, city_slug

log = logging.getLogger(__name__)

STATION_BOUNDARY_SLACK_M = 1000.0

EXTRACT_SNAPSHOT_KIND = "city-extract"


@dataclass(frozen=True)
class CityExtract:
    city_name: str
    boundary: object  # shapely Polygon or MultiPolygon, WGS84
    features: list
    stations: list
    snapshot_id: str


def snapshot_id_of(raw_payloads) -> str:
    """Content hash over the raw inputs, order-independent."""
    digest = hashlib.sha256()
    for chunk in sorted(hashlib.sha256(p).digest() for p in raw_payloads):
        digest.update(chunk)
    return digest.hexdigest()


def _station_in_or_near(boundary, prepared, record) -> bool:
    from shapely.geometry import Point

    pt = Point(record.lon, record.lat)
    if prepared.intersects(pt):
        return True
    on_boundary, _ = nearest_points(boundary, pt)
    d = geodesy.inverse_distance(record.lat, record.lon, on_boundary.y, on_boundary.x)
    return d <= STATION_BOUNDARY_SLACK_M


def build_extract(
    city_name: str,
    boundary,
    raw_elements,
    rules: rules_mod.CategoryRules,
    stations,
    raw_payloads,
) -> CityExtract:
    """Categorize elements and validate stations against the boundary."""
    prepared = prep(boundary)
    features = []
    for el in raw_elements:
        category = rules_mod.categorize(el.tags, rules)
        if category is None:
            continue
        if any(el.tags.get(k) == v for k, v in rules.station_exclusion):
            continue
        if not prepared.intersects(el.geometry):
            continue
        features.append(elements.feature_from_element(el, category))

    kept_stations = []
    for rec in stations:
        if _station_in_or_near(boundary, prepared, rec):
            kept_stations.append(rec)
        else:
            log.warning(
                "station %s at (%s, %s) is beyond %.0f m of the %s boundary; rejected",
                rec.station_id, rec.lat, rec.lon, STATION_BOUNDARY_SLACK_M, city_name,
            )
    return CityExtract(
        city_name, boundary, features, kept_stations, snapshot_id_of(raw_payloads)
    )


def _poly_filter(ring_coords) -> str:
    return " ".join(f"{lat:.7f} {lon:.7f}" for lon, lat in ring_coords)


def _boundary_rings(boundary):
    if boundary.geom_type == "Polygon":
        return [list(boundary.exterior.coords)]
    return [list(p.exterior.coords) for p in boundary.geoms]


def build_city_query(rules: rules_mod.CategoryRules, ring_coords) -> str:
    template = (
        importlib.resources.files("stationscout") / "data" / "overpass_city.ql"
    ).read_text()
    poly = _poly_filter(ring_coords)
    clauses = "\n".join(f'  nwr["{key}"](poly:"{poly}");' for key in rules.keys())
    return template.format(clauses=clauses)


def resolve_boundary(client: OverpassClient, city_name: str, boundary_source):
    """boundary_source is (kind, value): osm_relation_id, bbox or polygon_file."""
    kind, value = boundary_source
    if kind == "bbox":
        south, west, north, east = value
        return box(west, south, east, north)
    if kind == "polygon_file":
        with open(value) as f:
            doc = json.load(f)
        if doc.get("type") == "FeatureCollection":
            doc = doc["features"][0]["geometry"]
        elif doc.get("type") == "Feature":
            doc = doc["geometry"]
        return shape(doc)
    if kind == "osm_relation_id":
        ql = f"[out:json];rel({int(value)});out geom;"
        doc = client.query(city_name, ql)
        rels = [e for e in doc.get("elements", []) if e.get("type") == "relation"]
        if not rels:
            raise LookupError(
                f"boundary relation {value} for city {city_name!r} not found"
            )
        members = [
            (m.get("role", ""), [(g["lon"], g["lat"]) for g in m["geometry"]])
            for m in rels[0].get("members", [])
            if m.get("type") == "way" and m.get("geometry") and m.get("role") != "inner"
        ]
        return assemble.multipolygon_from_members(members)
    raise ValueError(f"unknown boundary source {kind!r}")


def fetch_city_extract(
    city_name: str,
    boundary_source,
    cache_root,
    rules: rules_mod.CategoryRules | None = None,
    station_source=None,
    client: OverpassClient | None = None,
    allow_empty_stations: bool = True,
) -> CityExtract:
    """End-to-end ingest for one city, cache-first.

    station_source is (kind, target) per load_stations, or None for a
    city without a rental system.
    """
    rules = rules or rules_mod.load_default_rules()
    client = client or OverpassClient(cache_root)
    boundary = resolve_boundary(client, city_name, boundary_source)

    raw_payloads = []
    raw_elements = []
    dropped = 0
    for ring in _boundary_rings(boundary):
        ql = build_city_query(rules, ring)
        doc = client.query(city_name, ql)
        raw_payloads.append(client.raw_cached(city_name, ql))
        parsed, bad = elements.parse_overpass_elements(doc)
        raw_elements.extend(parsed)
        dropped += bad
    if dropped:
        log.info("%s: dropped %d unassemblable elements", city_name, dropped)

    # one element can arrive via several ring queries; keep the first
    seen = set()
    unique = []
    for el in raw_elements:
        key = (el.kind, el.element_id)
        if key not in seen:
            seen.add(key)
            unique.append(el)

    station_records = []
    if station_source is not None:
        kind, target = station_source
        station_records = stations_mod.load_stations(
            kind, target, city_name, allow_empty=allow_empty_stations
        )

    extract = build_extract(
        city_name, boundary, unique, rules, station_records, raw_payloads
    )
    path = os.path.join(cache_root, city_slug(city_name), "extract.bin")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    save_snapshot(extract, path, EXTRACT_SNAPSHOT_KIND)
    return extract


def load_extract(cache_root, city_name: str) -> CityExtract:
    path = os.path.join(cache_root, city_slug(city_name), "extract.bin")
    return load_snapshot(path, EXTRACT_SNAPSHOT_KIND)
