"""Station registry loaders: CSV, GeoJSON, and the live rental API."""

import csv
import json
import logging
from dataclasses import dataclass

import requests

log = logging.getLogger(__name__)

CSV_HEADER = ["station_id", "lat", "lon"]

LIVE_API_URL = "https://api.nextbike.net/maps/nextbike-live.json"


class StationSourceError(ValueError):
    pass


@dataclass(frozen=True)
class StationRecord:
    station_id: str
    lat: float
    lon: float
    system_name: str
    source: str  # api | file


def _check_range(lat: float, lon: float, station_id: str):
    if not (-90.0 <= lat <= 90.0 and -180.0 <= lon <= 180.0):
        raise StationSourceError(
            f"station {station_id}: coordinate out of range ({lat}, {lon})"
        )


def _dedupe(records):
    seen = set()
    out = []
    for rec in records:
        if rec.station_id in seen:
            continue
        seen.add(rec.station_id)
        out.append(rec)
    return out


def load_stations_csv(path, system_name: str = "", allow_empty: bool = False):
    """Rows under the exact header station_id,lat,lon."""
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != CSV_HEADER:
            raise StationSourceError(
                f"{path}: expected header {','.join(CSV_HEADER)}, got {header}"
            )
        records = []
        for row in reader:
            if not row or not any(cell.strip() for cell in row):
                continue
            if len(row) != 3:
                raise StationSourceError(f"{path}: malformed row {row}")
            sid, lat_s, lon_s = (cell.strip() for cell in row)
            try:
                lat, lon = float(lat_s), float(lon_s)
            except ValueError as e:
                raise StationSourceError(f"{path}: non-numeric coordinate in {row}") from e
            _check_range(lat, lon, sid)
            records.append(StationRecord(sid, lat, lon, system_name, "file"))
    records = _dedupe(records)
    if not records and not allow_empty:
        raise StationSourceError(f"{path}: no stations parsed")
    return records


def load_stations_geojson(path, system_name: str = "", allow_empty: bool = False):
    with open(path) as f:
        doc = json.load(f)
    if doc.get("type") != "FeatureCollection":
        raise StationSourceError(f"{path}: not a FeatureCollection")
    records = []
    for feat in doc.get("features", []):
        geom = feat.get("geometry") or {}
        if geom.get("type") != "Point":
            continue
        lon, lat = geom["coordinates"][:2]
        props = feat.get("properties") or {}
        sid = str(props.get("station_id") or feat.get("id") or "")
        if not sid:
            raise StationSourceError(f"{path}: point feature without station_id")
        _check_range(lat, lon, sid)
        records.append(StationRecord(sid, lat, lon, system_name, "file"))
    records = _dedupe(records)
    if not records and not allow_empty:
        raise StationSourceError(f"{path}: no stations parsed")
    return records


def fetch_live_stations(city_name: str, http_get=None, allow_empty: bool = False):
    """Stations of one city from the public rental-network feed."""
    get = http_get or requests.get
    resp = get(LIVE_API_URL, timeout=60)
    resp.raise_for_status()
    doc = resp.json()
    wanted = city_name.strip().lower()
    records = []
    for country in doc.get("countries", []):
        system = country.get("name", "")
        for city in country.get("cities", []):
            if city.get("name", "").strip().lower() != wanted:
                continue
            for place in city.get("places", []):
                if not place.get("spot"):
                    continue  # free-floating bikes, not a station
                sid = str(place.get("uid"))
                lat, lon = float(place["lat"]), float(place["lng"])
                _check_range(lat, lon, sid)
                records.append(StationRecord(sid, lat, lon, system, "api"))
    records = _dedupe(records)
    if not records and not allow_empty:
        raise StationSourceError(f"no stations found for city {city_name!r}")
    return records


def load_stations(source: str, target, city_name: str = "", allow_empty: bool = False):
    """Dispatch by source kind: csv_file, geojson_file or nextbike_api."""
    if source == "csv_file":
        return load_stations_csv(target, city_name, allow_empty)
    if source == "geojson_file":
        return load_stations_geojson(target, city_name, allow_empty)
    if source == "nextbike_api":
        return fetch_live_stations(target or city_name, allow_empty=allow_empty)
    raise StationSourceError(f"unknown station source {source!r}")
