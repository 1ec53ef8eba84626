"""Geodesic lengths and areas on the WGS84 spheroid.

Lengths use the Vincenty inverse solution. Areas map geodetic to
authalic latitude and take the spherical excess on the authalic
sphere, which preserves the ellipsoid's total surface area; for
city-scale polygons the difference from the exact ellipsoidal area is
far below the tolerances used anywhere in this package.

Coordinate conventions: scalar point arguments are (lat, lon) in
degrees; coordinate sequences are (lon, lat) pairs, matching shapely.
"""

import math

WGS84_A = 6378137.0
WGS84_F = 1.0 / 298.257223563
WGS84_B = WGS84_A * (1.0 - WGS84_F)

_E2 = WGS84_F * (2.0 - WGS84_F)
_E = math.sqrt(_E2)


def _q(sin_lat: float) -> float:
    return (1.0 - _E2) * (
        sin_lat / (1.0 - _E2 * sin_lat * sin_lat)
        - (1.0 / (2.0 * _E)) * math.log((1.0 - _E * sin_lat) / (1.0 + _E * sin_lat))
    )


_QP = _q(1.0)

# radius of the sphere with the same surface area as the ellipsoid
AUTHALIC_RADIUS = WGS84_A * math.sqrt(_QP / 2.0)


def inverse_distance(lat1: float, lon1: float, lat2: float, lon2: float) -> float:
    """Geodesic distance in meters between two points, degrees in."""
    if lat1 == lat2 and lon1 == lon2:
        return 0.0
    u1 = math.atan((1.0 - WGS84_F) * math.tan(math.radians(lat1)))
    u2 = math.atan((1.0 - WGS84_F) * math.tan(math.radians(lat2)))
    ell = math.radians(lon2 - lon1)
    sin_u1, cos_u1 = math.sin(u1), math.cos(u1)
    sin_u2, cos_u2 = math.sin(u2), math.cos(u2)

    lam = ell
    for _ in range(200):
        sin_lam, cos_lam = math.sin(lam), math.cos(lam)
        sin_sigma = math.hypot(
            cos_u2 * sin_lam, cos_u1 * sin_u2 - sin_u1 * cos_u2 * cos_lam
        )
        if sin_sigma == 0.0:
            return 0.0
        cos_sigma = sin_u1 * sin_u2 + cos_u1 * cos_u2 * cos_lam
        sigma = math.atan2(sin_sigma, cos_sigma)
        sin_alpha = cos_u1 * cos_u2 * sin_lam / sin_sigma
        cos2_alpha = 1.0 - sin_alpha * sin_alpha
        if cos2_alpha == 0.0:
            cos_2sm = 0.0  # equatorial line
        else:
            cos_2sm = cos_sigma - 2.0 * sin_u1 * sin_u2 / cos2_alpha
        c = WGS84_F / 16.0 * cos2_alpha * (4.0 + WGS84_F * (4.0 - 3.0 * cos2_alpha))
        lam_prev = lam
        lam = ell + (1.0 - c) * WGS84_F * sin_alpha * (
            sigma
            + c
            * sin_sigma
            * (cos_2sm + c * cos_sigma * (-1.0 + 2.0 * cos_2sm * cos_2sm))
        )
        if abs(lam - lam_prev) < 1e-12:
            break
    else:
        raise ValueError("geodesic iteration did not converge (near-antipodal points)")

    u_sq = cos2_alpha * (WGS84_A * WGS84_A - WGS84_B * WGS84_B) / (WGS84_B * WGS84_B)
    big_a = 1.0 + u_sq / 16384.0 * (
        4096.0 + u_sq * (-768.0 + u_sq * (320.0 - 175.0 * u_sq))
    )
    big_b = u_sq / 1024.0 * (256.0 + u_sq * (-128.0 + u_sq * (74.0 - 47.0 * u_sq)))
    delta_sigma = (
        big_b
        * sin_sigma
        * (
            cos_2sm
            + big_b
            / 4.0
            * (
                cos_sigma * (-1.0 + 2.0 * cos_2sm * cos_2sm)
                - big_b
                / 6.0
                * cos_2sm
                * (-3.0 + 4.0 * sin_sigma * sin_sigma)
                * (-3.0 + 4.0 * cos_2sm * cos_2sm)
            )
        )
    )
    return WGS84_B * big_a * (sigma - delta_sigma)


def polyline_length(coords) -> float:
    """Length in meters of a (lon, lat) vertex sequence."""
    total = 0.0
    for (lon1, lat1), (lon2, lat2) in zip(coords, coords[1:]):
        total += inverse_distance(lat1, lon1, lat2, lon2)
    return total


def _authalic_unit_vector(lon: float, lat: float):
    sin_lat = math.sin(math.radians(lat))
    phi = math.asin(max(-1.0, min(1.0, _q(sin_lat) / _QP)))
    lam = math.radians(lon)
    return (
        math.cos(phi) * math.cos(lam),
        math.cos(phi) * math.sin(lam),
        math.sin(phi),
    )


def ring_area(coords) -> float:
    """Signed area in m^2 of a closed (lon, lat) ring.

    Positive for counterclockwise rings. The ring is fanned into
    spherical triangles from its first vertex; each signed excess
    comes from the solid-angle tangent formula, so concave rings are
    handled exactly.
    """
    pts = list(coords)
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts = pts[:-1]
    if len(pts) < 3:
        return 0.0
    anchor = _authalic_unit_vector(*pts[0])
    total = 0.0
    prev = _authalic_unit_vector(*pts[1])
    for lon, lat in pts[2:]:
        cur = _authalic_unit_vector(lon, lat)
        ax, ay, az = anchor
        bx, by, bz = prev
        cx, cy, cz = cur
        triple = (
            ax * (by * cz - bz * cy)
            + ay * (bz * cx - bx * cz)
            + az * (bx * cy - by * cx)
        )
        dot_ab = ax * bx + ay * by + az * bz
        dot_bc = bx * cx + by * cy + bz * cz
        dot_ca = cx * ax + cy * ay + cz * az
        total += 2.0 * math.atan2(triple, 1.0 + dot_ab + dot_bc + dot_ca)
        prev = cur
    return total * AUTHALIC_RADIUS * AUTHALIC_RADIUS


def polygon_area(polygon) -> float:
    """Unsigned area in m^2 of a shapely Polygon, holes subtracted."""
    area = abs(ring_area(list(polygon.exterior.coords)))
    for interior in polygon.interiors:
        area -= abs(ring_area(list(interior.coords)))
    return area


def shape_area(geom) -> float:
    """Total polygonal area of any shapely geometry, m^2."""
    gt = geom.geom_type
    if gt == "Polygon":
        return polygon_area(geom)
    if gt in ("MultiPolygon", "GeometryCollection"):
        return sum(shape_area(g) for g in geom.geoms)
    return 0.0


def shape_length(geom) -> float:
    """Total linear length of any shapely geometry, meters."""
    gt = geom.geom_type
    if gt == "LineString":
        return polyline_length(list(geom.coords))
    if gt in ("MultiLineString", "GeometryCollection"):
        return sum(shape_length(g) for g in geom.geoms)
    return 0.0
