"""Geodesic measure tests against frozen surveying baselines.

The named distances below are classical published test lines, frozen
here before the implementation was written.
"""

import math
import random

import pytest
from shapely.geometry import LineString, Polygon

from stationscout.hexgrid import geodesy

# WGS84 a * pi / 180: one degree of longitude on the equator
EQUATOR_DEGREE_M = 111319.49079327358

# WGS84 meridian arc from the equator to 1 degree N
MERIDIAN_DEGREE_M = 110574.38855796

# Vincenty's own test line: Flinders Peak to Buninyong (Australia)
FLINDERS = (-37.95103341666667, 144.42486788888888)
BUNINYONG = (-37.65282113888889, 143.92649552777777)
FLINDERS_BUNINYONG_M = 54972.271

# Surface area of the WGS84 ellipsoid, m^2
WGS84_SURFACE_M2 = 5.100656217240886e14


def test_equator_degree():
    d = geodesy.inverse_distance(0.0, 0.0, 0.0, 1.0)
    assert d == pytest.approx(EQUATOR_DEGREE_M, abs=1e-3)


def test_meridian_degree():
    d = geodesy.inverse_distance(0.0, 0.0, 1.0, 0.0)
    assert d == pytest.approx(MERIDIAN_DEGREE_M, abs=1e-2)


def test_flinders_buninyong():
    d = geodesy.inverse_distance(*FLINDERS, *BUNINYONG)
    assert d == pytest.approx(FLINDERS_BUNINYONG_M, abs=1e-3)


def test_coincident_points():
    assert geodesy.inverse_distance(52.1, 21.0, 52.1, 21.0) == 0.0


def test_symmetry():
    d1 = geodesy.inverse_distance(50.06, 19.94, 52.23, 21.01)
    d2 = geodesy.inverse_distance(52.23, 21.01, 50.06, 19.94)
    assert d1 == pytest.approx(d2, rel=1e-12)


def enu_project(coords, lat0, lon0):
    """Local tangent-plane projection, the small-extent oracle."""
    r = 6371008.8
    k = math.cos(math.radians(lat0))
    return [
        (
            math.radians(lon - lon0) * r * k,
            math.radians(lat - lat0) * r,
        )
        for lon, lat in coords
    ]


@pytest.mark.parametrize("lat0", [0.0, 36.0, 52.0, 60.0])
def test_short_distances_match_tangent_plane(lat0):
    rng = random.Random(7 + int(lat0))
    for _ in range(40):
        dlat = rng.uniform(-0.01, 0.01)
        dlon = rng.uniform(-0.01, 0.01)
        d = geodesy.inverse_distance(lat0, 30.0, lat0 + dlat, 30.0 + dlon)
        (x1, y1), (x2, y2) = enu_project(
            [(30.0, lat0), (30.0 + dlon, lat0 + dlat)], lat0, 30.0
        )
        flat = math.hypot(x2 - x1, y2 - y1)
        if flat > 1.0:
            assert d == pytest.approx(flat, rel=7e-3)


def test_polyline_length_sums_segments():
    coords = [(21.0, 52.0), (21.01, 52.0), (21.01, 52.01)]
    total = geodesy.polyline_length(coords)
    parts = geodesy.inverse_distance(52.0, 21.0, 52.0, 21.01) + geodesy.inverse_distance(
        52.0, 21.01, 52.01, 21.01
    )
    assert total == pytest.approx(parts, rel=1e-12)


def test_octant_area():
    # equator/meridian octant covers one eighth of the ellipsoid surface
    ring = [(0.0, 0.0), (90.0, 0.0), (0.0, 90.0), (0.0, 0.0)]
    area = abs(geodesy.ring_area(ring))
    assert area == pytest.approx(WGS84_SURFACE_M2 / 8.0, rel=1e-9)


def test_ring_orientation_sign():
    ccw = [(21.0, 52.0), (21.01, 52.0), (21.01, 52.01), (21.0, 52.01), (21.0, 52.0)]
    assert geodesy.ring_area(ccw) > 0
    assert geodesy.ring_area(ccw[::-1]) == pytest.approx(-geodesy.ring_area(ccw))


@pytest.mark.parametrize("lat0", [0.0, 36.0, 52.0, 60.0])
def test_small_polygon_area_matches_tangent_plane(lat0):
    rng = random.Random(31 + int(lat0))
    for _ in range(25):
        w = rng.uniform(0.001, 0.01)
        h = rng.uniform(0.001, 0.01)
        ring = [
            (30.0, lat0),
            (30.0 + w, lat0),
            (30.0 + w, lat0 + h),
            (30.0, lat0 + h),
            (30.0, lat0),
        ]
        mine = abs(geodesy.ring_area(ring))
        flat = Polygon(enu_project(ring, lat0, 30.0)).area
        assert mine == pytest.approx(flat, rel=7e-3)


def test_polygon_area_subtracts_holes():
    outer = [(21.0, 52.0), (21.02, 52.0), (21.02, 52.02), (21.0, 52.02), (21.0, 52.0)]
    hole = [(21.005, 52.005), (21.01, 52.005), (21.01, 52.01), (21.005, 52.01), (21.005, 52.005)]
    full = geodesy.polygon_area(Polygon(outer))
    holed = geodesy.polygon_area(Polygon(outer, [hole]))
    hole_area = abs(geodesy.ring_area(hole))
    assert holed == pytest.approx(full - hole_area, rel=1e-9)


def test_split_polygon_conserves_area():
    outer = [(21.0, 52.0), (21.02, 52.0), (21.02, 52.015), (21.0, 52.015), (21.0, 52.0)]
    left = [(21.0, 52.0), (21.013, 52.0), (21.013, 52.015), (21.0, 52.015), (21.0, 52.0)]
    right = [(21.013, 52.0), (21.02, 52.0), (21.02, 52.015), (21.013, 52.015), (21.013, 52.0)]
    whole = geodesy.polygon_area(Polygon(outer))
    parts = geodesy.polygon_area(Polygon(left)) + geodesy.polygon_area(Polygon(right))
    assert parts == pytest.approx(whole, rel=1e-6)


def test_shape_measure_routes_geometry_types():
    line = LineString([(21.0, 52.0), (21.01, 52.0)])
    assert geodesy.shape_length(line) == pytest.approx(
        geodesy.inverse_distance(52.0, 21.0, 52.0, 21.01), rel=1e-12
    )
    poly = Polygon([(21.0, 52.0), (21.01, 52.0), (21.01, 52.01), (21.0, 52.0)])
    assert geodesy.shape_area(poly) == pytest.approx(
        abs(geodesy.ring_area(list(poly.exterior.coords))), rel=1e-12
    )
    assert geodesy.shape_length(poly) == 0.0
    assert geodesy.shape_area(line) == 0.0
