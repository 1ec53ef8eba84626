"""Ingest plumbing: station loaders, response cache, element parsing."""

import json

import pytest
from shapely.geometry import box

from stationscout.ingest import (
    CityExtract,
    OverpassClient,
    StationRecord,
    assemble,
    build_extract,
    elements,
    load_default_rules,
    parse_overpass_elements,
)
from stationscout.ingest.extract import fetch_city_extract, load_extract, snapshot_id_of
from stationscout.ingest.stations import (
    StationSourceError,
    fetch_live_stations,
    load_stations_csv,
    load_stations_geojson,
)

# ten data rows, station s3 and s7 appear twice -> 8 unique records
STATION_CSV = """station_id,lat,lon
s1,52.2297,21.0122
s2,52.2310,21.0150
s3,52.2320,21.0160
s3,52.2320,21.0160
s4,52.2330,21.0170
s5,52.2340,21.0180
s6,52.2350,21.0190
s7,52.2360,21.0200
s7,52.2361,21.0201
s8,52.2370,21.0210
"""


def test_csv_loader_dedupes(tmp_path):
    p = tmp_path / "stations.csv"
    p.write_text(STATION_CSV)
    records = load_stations_csv(p, "demo")
    assert len(records) == 8
    assert [r.station_id for r in records] == [f"s{i}" for i in range(1, 9)]
    assert all(r.source == "file" for r in records)


def test_csv_loader_rejects_wrong_header(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("id,latitude,longitude\n1,52.0,21.0\n")
    with pytest.raises(StationSourceError, match="header"):
        load_stations_csv(p)


def test_csv_loader_rejects_out_of_range(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("station_id,lat,lon\nx,91.0,0.0\n")
    with pytest.raises(StationSourceError, match="out of range"):
        load_stations_csv(p)


def test_csv_loader_empty_needs_flag(tmp_path):
    p = tmp_path / "empty.csv"
    p.write_text("station_id,lat,lon\n")
    with pytest.raises(StationSourceError, match="no stations"):
        load_stations_csv(p)
    assert load_stations_csv(p, allow_empty=True) == []


def test_geojson_loader(tmp_path):
    doc = {
        "type": "FeatureCollection",
        "features": [
            {
                "type": "Feature",
                "geometry": {"type": "Point", "coordinates": [21.0, 52.0]},
                "properties": {"station_id": "a"},
            },
            {
                "type": "Feature",
                "geometry": {"type": "Point", "coordinates": [21.1, 52.1]},
                "properties": {"station_id": "a"},
            },
        ],
    }
    p = tmp_path / "stations.geojson"
    p.write_text(json.dumps(doc))
    records = load_stations_geojson(p)
    assert len(records) == 1
    assert records[0].lon == 21.0


def test_live_api_loader_filters_city():
    payload = {
        "countries": [
            {
                "name": "Demo Bikes",
                "cities": [
                    {
                        "name": "Gridville",
                        "places": [
                            {"uid": 1, "lat": 52.0, "lng": 21.0, "spot": True},
                            {"uid": 2, "lat": 52.1, "lng": 21.1, "spot": False},
                        ],
                    },
                    {
                        "name": "Elsewhere",
                        "places": [{"uid": 3, "lat": 50.0, "lng": 19.0, "spot": True}],
                    },
                ],
            }
        ]
    }

    class FakeResp:
        status_code = 200

        def raise_for_status(self):
            pass

        def json(self):
            return payload

    records = fetch_live_stations("gridville", http_get=lambda url, timeout: FakeResp())
    assert [r.station_id for r in records] == ["1"]
    assert records[0].source == "api"


class FakeSession:
    """Counts posts and replays a canned body."""

    def __init__(self, body: bytes, status: int = 200):
        self.body = body
        self.status = status
        self.posts = 0

    def post(self, url, data=None, timeout=None):
        self.posts += 1

        class R:
            status_code = self.status
            content = self.body

        return R()


OVERPASS_BODY = json.dumps(
    {
        "elements": [
            {"type": "node", "id": 1, "lat": 52.0001, "lon": 21.0001,
             "tags": {"amenity": "cafe"}},
            {"type": "node", "id": 2, "lat": 52.0002, "lon": 21.0002,
             "tags": {"amenity": "bicycle_rental"}},
            {"type": "way", "id": 3,
             "geometry": [{"lat": 52.0, "lon": 21.0}, {"lat": 52.001, "lon": 21.0}],
             "tags": {"highway": "residential"}},
            {"type": "way", "id": 4,
             "geometry": [
                 {"lat": 52.0, "lon": 21.0}, {"lat": 52.0, "lon": 21.0005},
                 {"lat": 52.0005, "lon": 21.0005}, {"lat": 52.0, "lon": 21.0}],
             "tags": {"building": "yes"}},
        ]
    }
).encode()


def test_cache_written_before_parse_and_replayed(tmp_path):
    session = FakeSession(OVERPASS_BODY)
    client = OverpassClient(tmp_path, endpoint="http://test", session=session)
    ql = "[out:json];node(1);out;"
    doc1 = client.query("Gridville", ql)
    doc2 = client.query("Gridville", ql)
    assert session.posts == 1
    assert doc1 == doc2
    cached = client.raw_cached("Gridville", ql)
    assert cached == OVERPASS_BODY
    assert (tmp_path / "gridville").is_dir()


def test_malformed_response_reports_offset(tmp_path):
    session = FakeSession(b'{"elements": [}')
    client = OverpassClient(tmp_path, endpoint="http://test", session=session)
    with pytest.raises(Exception, match="byte 14"):
        client.query("Gridville", "[out:json];")


def test_retry_then_fail(tmp_path):
    session = FakeSession(b"", status=503)
    naps = []
    client = OverpassClient(
        tmp_path, endpoint="http://test", session=session,
        max_attempts=3, sleep=naps.append,
    )
    with pytest.raises(Exception, match="after 3 attempts"):
        client.query("Gridville", "[out:json];x")
    assert session.posts == 3
    assert naps == [2.0, 4.0]


def test_parse_elements_shapes():
    parsed, dropped = parse_overpass_elements(json.loads(OVERPASS_BODY))
    assert dropped == 0
    by_id = {e.element_id: e for e in parsed}
    assert by_id[1].geometry.geom_type == "Point"
    assert by_id[3].geometry.geom_type == "LineString"
    assert by_id[4].geometry.geom_type == "Polygon"


def test_closed_highway_stays_linear():
    # a roundabout is a closed way but not an area
    coords = [(21.0, 52.0), (21.001, 52.0), (21.001, 52.001), (21.0, 52.0)]
    geom = elements.way_geometry(coords, {"highway": "residential"})
    assert geom.geom_type == "LineString"
    geom = elements.way_geometry(coords, {"highway": "residential", "area": "yes"})
    assert geom.geom_type == "Polygon"


def test_multipolygon_assembly_with_hole():
    outer_a = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]
    outer_b = [(1.0, 1.0), (0.0, 1.0), (0.0, 0.0)]
    inner = [(0.4, 0.4), (0.6, 0.4), (0.6, 0.6), (0.4, 0.6), (0.4, 0.4)]
    geom = assemble.multipolygon_from_members(
        [("outer", outer_a), ("outer", list(reversed(outer_b))), ("inner", inner)]
    )
    assert geom.geom_type == "MultiPolygon"
    assert len(geom.geoms[0].interiors) == 1


def test_open_ring_rejected():
    with pytest.raises(assemble.AssemblyError, match="open ring"):
        assemble.multipolygon_from_members([("outer", [(0, 0), (1, 0), (1, 1)])])


def test_build_extract_filters_and_hashes():
    boundary = box(20.99, 51.99, 21.01, 52.01)
    parsed, _ = parse_overpass_elements(json.loads(OVERPASS_BODY))
    rules = load_default_rules()
    far = StationRecord("far", 53.5, 22.5, "demo", "file")
    near = StationRecord("near", 52.0005, 21.0005, "demo", "file")
    extract = build_extract(
        "Gridville", boundary, parsed, rules, [near, far], [OVERPASS_BODY]
    )
    cats = {f.element_id: f.category for f in extract.features}
    # the bicycle_rental node must not survive, everything else categorizes
    assert set(cats) == {1, 3, 4}
    assert cats[1] == "sustenance"
    assert cats[3] == "roads_drive"
    assert cats[4] == "buildings"
    assert [s.station_id for s in extract.stations] == ["near"]

    again = build_extract(
        "Gridville", boundary, parsed, rules, [near], [OVERPASS_BODY]
    )
    assert extract.snapshot_id == again.snapshot_id


def test_snapshot_id_order_independent():
    a, b = b"payload-a", b"payload-b"
    assert snapshot_id_of([a, b]) == snapshot_id_of([b, a])
    assert snapshot_id_of([a]) != snapshot_id_of([b])


def test_fetch_city_extract_offline_roundtrip(tmp_path):
    session = FakeSession(OVERPASS_BODY)
    client = OverpassClient(tmp_path, endpoint="http://test", session=session)
    csv_path = tmp_path / "st.csv"
    csv_path.write_text("station_id,lat,lon\nn1,52.0005,21.0005\n")
    first = fetch_city_extract(
        "Gridville",
        ("bbox", (51.99, 20.99, 52.01, 21.01)),
        cache_root=tmp_path,
        station_source=("csv_file", csv_path),
        client=client,
    )
    second = fetch_city_extract(
        "Gridville",
        ("bbox", (51.99, 20.99, 52.01, 21.01)),
        cache_root=tmp_path,
        station_source=("csv_file", csv_path),
        client=client,
    )
    assert session.posts == 1  # cache replay
    assert first.snapshot_id == second.snapshot_id
    assert len(first.features) == 3
    assert isinstance(load_extract(tmp_path, "Gridville"), CityExtract)


def test_feature_roundtrip_determinism():
    parsed, _ = parse_overpass_elements(json.loads(OVERPASS_BODY))
    rules = load_default_rules()
    boundary = box(20.99, 51.99, 21.01, 52.01)
    runs = [
        [f.category for f in build_extract("G", boundary, parsed, rules, [], [b"x"]).features]
        for _ in range(3)
    ]
    assert runs[0] == runs[1] == runs[2]
