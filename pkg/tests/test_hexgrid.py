"""Tessellation, feature assignment and ring tests.

Oracles: a dense point-lattice enumeration for tessellation, layered
single-step BFS for rings, and direct geodesic measures for clipping
conservation.
"""

import json
import math

import pytest
from shapely.geometry import LineString, MultiPolygon, Point, Polygon, box

from stationscout import h3core as h3
from stationscout.hexgrid import (
    CellId,
    CityGrid,
    ConfigError,
    GeometryError,
    assign_features,
    cell_polygon,
    geodesy,
    grid_to_geojson,
    k_rings,
    tessellate,
)
from stationscout.ingest import CategorizedFeature
from stationscout.ingest.extract import CityExtract

# awkward, grid-unaligned box near Warsaw, ~0.5 x 0.4 km
BOX = box(21.00137, 52.20119, 21.00841, 52.20483)


def lattice_oracle(boundary, resolution, step_deg):
    """Every cell whose center falls inside, found by dense sampling."""
    minx, miny, maxx, maxy = boundary.bounds
    pad = step_deg * 3
    seen = set()
    y = miny - pad
    while y <= maxy + pad:
        x = minx - pad
        while x <= maxx + pad:
            seen.add(h3.latlng_to_cell(y, x, resolution))
            x += step_deg
        y += step_deg
    out = set()
    for c in seen:
        lat, lng = h3.cell_to_latlng(c)
        if boundary.intersects(Point(lng, lat)):
            out.add(c)
    return out


@pytest.mark.parametrize("resolution,step", [(9, 0.0008), (10, 0.0003), (11, 0.0001)])
def test_tessellate_matches_lattice_oracle(resolution, step):
    cells = tessellate(BOX, resolution)
    assert {c.index for c in cells} == lattice_oracle(BOX, resolution, step)
    assert all(c.resolution == resolution for c in cells)


def test_tessellate_deterministic():
    assert tessellate(BOX, 11) == tessellate(BOX, 11)


def test_tessellate_empty_polygon():
    assert tessellate(Polygon(), 11) == frozenset()


def test_tessellate_rejects_bad_inputs():
    with pytest.raises(ConfigError):
        tessellate(BOX, 12)
    bowtie = Polygon([(0, 0), (1, 1), (1, 0), (0, 1), (0, 0)])
    with pytest.raises(GeometryError):
        tessellate(bowtie, 11)


def test_resolution_monotonicity():
    n9 = len(tessellate(BOX, 9))
    n10 = len(tessellate(BOX, 10))
    n11 = len(tessellate(BOX, 11))
    assert n11 >= n10 >= n9


def test_tessellate_multipolygon_components():
    other = box(21.02137, 52.20119, 21.02641, 52.20383)
    both = MultiPolygon([BOX, other])
    assert tessellate(both, 11) == tessellate(BOX, 11) | tessellate(other, 11)


def test_tessellate_respects_holes():
    outer = box(21.001, 52.201, 21.009, 52.205)
    hole = box(21.004, 52.202, 21.006, 52.204)
    holed = Polygon(outer.exterior.coords, [hole.exterior.coords])
    cells = {c.index for c in tessellate(holed, 11)}
    for c in tessellate(hole, 11):
        lat, lng = h3.cell_to_latlng(c.index)
        if hole.contains(Point(lng, lat)) and not hole.exterior.distance(Point(lng, lat)) < 1e-5:
            assert c.index not in cells


def bfs_rings(center: int, depth: int):
    """Layered BFS over single-step disks, the ring oracle."""
    dist = {center: 0}
    frontier = [center]
    for d in range(1, depth + 1):
        nxt = []
        for c in frontier:
            for n in h3.grid_disk(c, 1):
                if n not in dist:
                    dist[n] = d
                    nxt.append(n)
        frontier = nxt
    rings = [set() for _ in range(depth)]
    for c, d in dist.items():
        if d:
            rings[d - 1].add(c)
    return rings


def test_k_rings_zero():
    cell = CellId(h3.latlng_to_cell(52.2, 21.0, 10), 10)
    hood = k_rings(cell, 0)
    assert hood.rings == []
    assert hood.center == cell


def test_k_rings_generic_sizes():
    cell = CellId(h3.latlng_to_cell(52.2, 21.0, 11), 11)
    hood = k_rings(cell, 2)
    assert [len(r) for r in hood.rings] == [6, 12]


@pytest.mark.parametrize("resolution", [9, 10, 11])
def test_k_rings_match_bfs(resolution):
    cell = CellId(h3.latlng_to_cell(50.06, 19.94, resolution), resolution)
    hood = k_rings(cell, 5)
    oracle = bfs_rings(cell.index, 5)
    assert [{c.index for c in r} for r in hood.rings] == oracle


def test_k_rings_near_pentagon():
    with open("tests/data/h3_goldens.json") as f:
        pent9 = json.loads(f.read())["pentagons"]["9"][0]
    pent = h3.string_to_cell(pent9)
    neighbor = [c for c in h3.grid_disk(pent, 1) if c != pent][0]
    cell = CellId(neighbor, 9)
    hood = k_rings(cell, 4)
    assert [{c.index for c in r} for r in hood.rings] == bfs_rings(neighbor, 4)
    # rings stay disjoint and exclude the center
    seen = {cell}
    for ring in hood.rings:
        assert not (ring & seen)
        seen |= ring


def mk_extract(features, boundary):
    return CityExtract("testtown", boundary, features, [], "snap")


def offset_point(lat, lon, north_m, east_m):
    dlat = north_m / 111320.0
    dlon = east_m / (111320.0 * math.cos(math.radians(lat)))
    return lat + dlat, lon + dlon


def test_point_assigned_to_exactly_one_cell():
    cells = tessellate(BOX, 11)
    pt = Point(21.005, 52.203)
    extract = mk_extract([CategorizedFeature(1, "shops", "point", pt)], BOX)
    grid = assign_features(extract, cells)
    hits = [cell for cell, entries in grid.assignment.items() if entries]
    assert len(hits) == 1
    assert grid.assignment[hits[0]][0].measure == 1.0


def test_road_split_conserves_length():
    lat0, lon0 = 52.2029, 21.0042
    lat1, lon1 = offset_point(lat0, lon0, 120.0, 275.0)
    road = LineString([(lon0, lat0), (lon1, lat1)])
    true_len = geodesy.inverse_distance(lat0, lon0, lat1, lon1)
    assert 295 < true_len < 305  # sanity: a ~300 m segment

    cells = tessellate(BOX, 11)
    extract = mk_extract([CategorizedFeature(7, "roads_drive", "line", road)], BOX)
    grid = assign_features(extract, cells)
    parts = [e.measure for entries in grid.assignment.values() for e in entries]
    assert len(parts) >= 2  # crosses at least one cell border
    assert sum(parts) == pytest.approx(true_len, abs=0.1)


def test_lake_inside_one_cell_keeps_area():
    cells = tessellate(BOX, 11)
    some = sorted(cells, key=lambda c: c.index)[len(cells) // 2]
    clat, clon = h3.cell_to_latlng(some.index)
    lake = Point(clon, clat).buffer(0.0001, quad_segs=8)
    extract = mk_extract([CategorizedFeature(9, "water", "area", lake)], BOX)
    grid = assign_features(extract, cells)
    total = sum(e.measure for entries in grid.assignment.values() for e in entries)
    assert total == pytest.approx(geodesy.shape_area(lake), rel=1e-3)


def test_area_split_conserves():
    cells = tessellate(BOX, 11)
    cell_union = None
    blob = Point(21.005, 52.203).buffer(0.0012, quad_segs=8)
    extract = mk_extract([CategorizedFeature(3, "leisure", "area", blob)], BOX)
    grid = assign_features(extract, cells)
    total = sum(e.measure for entries in grid.assignment.values() for e in entries)
    from shapely.ops import unary_union

    cell_union = unary_union([cell_polygon(c.index) for c in cells])
    expected = geodesy.shape_area(blob.intersection(cell_union))
    assert total == pytest.approx(expected, rel=1e-3)


def test_invalid_feature_skipped_and_counted():
    cells = tessellate(BOX, 11)
    bowtie = Polygon([(21.004, 52.202), (21.006, 52.204), (21.006, 52.202),
                      (21.004, 52.204), (21.004, 52.202)])
    extract = mk_extract([CategorizedFeature(5, "leisure", "area", bowtie)], BOX)
    grid = assign_features(extract, cells)
    assert grid.diagnostics.skipped_invalid == 1
    assert all(not entries for entries in grid.assignment.values())


def test_outside_feature_dropped_and_counted():
    cells = tessellate(BOX, 11)
    far = Point(22.5, 53.5)
    extract = mk_extract([CategorizedFeature(6, "shops", "point", far)], BOX)
    grid = assign_features(extract, cells)
    assert grid.diagnostics.dropped_outside == 1


def test_assignment_refs_resolve():
    cells = tessellate(BOX, 11)
    feats = [
        CategorizedFeature(1, "shops", "point", Point(21.005, 52.203)),
        CategorizedFeature(2, "sustenance", "point", Point(21.0052, 52.2032)),
    ]
    extract = mk_extract(feats, BOX)
    grid = assign_features(extract, cells)
    for entries in grid.assignment.values():
        for e in entries:
            assert 0 <= e.ref < len(feats)
            assert grid.feature_class[e.ref] == (feats[e.ref].category, feats[e.ref].shape_class)


def test_geojson_export_shape():
    cells = tessellate(BOX, 11)
    extract = mk_extract([], BOX)
    grid = assign_features(extract, cells)
    doc = grid_to_geojson(grid)
    assert doc["type"] == "FeatureCollection"
    assert len(doc["features"]) == len(cells)
    feat = doc["features"][0]
    assert feat["geometry"]["type"] == "Polygon"
    ring = feat["geometry"]["coordinates"][0]
    assert ring[0] == ring[-1]
    assert h3.is_valid_cell(h3.string_to_cell(feat["properties"]["cell"]))


def test_grid_snapshot_roundtrip(tmp_path):
    from stationscout.hexgrid import load_grid, save_grid

    cells = tessellate(BOX, 11)
    extract = mk_extract([CategorizedFeature(1, "shops", "point", Point(21.005, 52.203))], BOX)
    grid = assign_features(extract, cells)
    path = tmp_path / "grid.bin"
    save_grid(grid, path)
    back = load_grid(path)
    assert isinstance(back, CityGrid)
    assert back.cells == grid.cells
    assert back.assignment == grid.assignment
