"""Projection between geographic coordinates and face-local hex lattices.

The grid lives on 20 icosahedron faces, each carrying a planar hexagonal
lattice under gnomonic projection.  A cell is addressed by a face plus ijk
coordinates at some resolution.  Near face edges the walk from a base cell
can leave the face; the overage adjustment rewrites such coordinates into
the neighbouring face's lattice.
"""

import math

from ._constants import (
    EPSILON,
    FACE_AXES_AZ_RADS_CII,
    FACE_CENTER_GEO,
    FACE_CENTER_POINT,
    FACE_EDGE,
    IJ_QUADRANT,
    JK_QUADRANT,
    KI_QUADRANT,
    M_2PI,
    M_AP7_ROT_RADS,
    M_PI,
    M_PI_2,
    M_SQRT3_2,
    M_SQRT7,
    MAX_DIM_BY_CII_RES,
    NEW_FACE,
    NO_OVERAGE,
    NUM_HEX_VERTS,
    NUM_ICOSA_FACES,
    NUM_PENT_VERTS,
    RES0_U_GNOMONIC,
    UNIT_SCALE_BY_CII_RES,
    is_resolution_class_iii,
)
from ._coordijk import (
    hex2d_to_coord_ijk,
    ijk_add,
    ijk_normalize,
    ijk_rotate60_ccw,
    ijk_rotate60_cw,
    ijk_scale,
    ijk_sub,
    ijk_to_hex2d,
    down_ap3,
    down_ap3r,
    down_ap7r,
)

# Face lattice orientation when crossing into a neighbouring face, indexed
# by [face][quadrant] with quadrants 0 (no crossing), IJ, KI, JK.  Each
# entry is (new face, translation in res-0 units, ccw 60 degree rotations).
# Fixed by the grid's icosahedron unfolding; validated against the
# reference grid in the test suite.
FACE_NEIGHBORS = (
    ((0, (0, 0, 0), 0), (4, (2, 0, 2), 1), (1, (2, 2, 0), 5), (5, (0, 2, 2), 3)),
    ((1, (0, 0, 0), 0), (0, (2, 0, 2), 1), (2, (2, 2, 0), 5), (6, (0, 2, 2), 3)),
    ((2, (0, 0, 0), 0), (1, (2, 0, 2), 1), (3, (2, 2, 0), 5), (7, (0, 2, 2), 3)),
    ((3, (0, 0, 0), 0), (2, (2, 0, 2), 1), (4, (2, 2, 0), 5), (8, (0, 2, 2), 3)),
    ((4, (0, 0, 0), 0), (3, (2, 0, 2), 1), (0, (2, 2, 0), 5), (9, (0, 2, 2), 3)),
    ((5, (0, 0, 0), 0), (10, (2, 2, 0), 3), (14, (2, 0, 2), 3), (0, (0, 2, 2), 3)),
    ((6, (0, 0, 0), 0), (11, (2, 2, 0), 3), (10, (2, 0, 2), 3), (1, (0, 2, 2), 3)),
    ((7, (0, 0, 0), 0), (12, (2, 2, 0), 3), (11, (2, 0, 2), 3), (2, (0, 2, 2), 3)),
    ((8, (0, 0, 0), 0), (13, (2, 2, 0), 3), (12, (2, 0, 2), 3), (3, (0, 2, 2), 3)),
    ((9, (0, 0, 0), 0), (14, (2, 2, 0), 3), (13, (2, 0, 2), 3), (4, (0, 2, 2), 3)),
    ((10, (0, 0, 0), 0), (5, (2, 2, 0), 3), (6, (2, 0, 2), 3), (15, (0, 2, 2), 3)),
    ((11, (0, 0, 0), 0), (6, (2, 2, 0), 3), (7, (2, 0, 2), 3), (16, (0, 2, 2), 3)),
    ((12, (0, 0, 0), 0), (7, (2, 2, 0), 3), (8, (2, 0, 2), 3), (17, (0, 2, 2), 3)),
    ((13, (0, 0, 0), 0), (8, (2, 2, 0), 3), (9, (2, 0, 2), 3), (18, (0, 2, 2), 3)),
    ((14, (0, 0, 0), 0), (9, (2, 2, 0), 3), (5, (2, 0, 2), 3), (19, (0, 2, 2), 3)),
    ((15, (0, 0, 0), 0), (16, (2, 0, 2), 1), (19, (2, 2, 0), 5), (10, (0, 2, 2), 3)),
    ((16, (0, 0, 0), 0), (17, (2, 0, 2), 1), (15, (2, 2, 0), 5), (11, (0, 2, 2), 3)),
    ((17, (0, 0, 0), 0), (18, (2, 0, 2), 1), (16, (2, 2, 0), 5), (12, (0, 2, 2), 3)),
    ((18, (0, 0, 0), 0), (19, (2, 0, 2), 1), (17, (2, 2, 0), 5), (13, (0, 2, 2), 3)),
    ((19, (0, 0, 0), 0), (15, (2, 0, 2), 1), (18, (2, 2, 0), 5), (14, (0, 2, 2), 3)),
)


def _build_adjacent_face_dir():
    table = [[-1] * NUM_ICOSA_FACES for _ in range(NUM_ICOSA_FACES)]
    for f in range(NUM_ICOSA_FACES):
        table[f][f] = 0
        for quadrant in (IJ_QUADRANT, KI_QUADRANT, JK_QUADRANT):
            table[f][FACE_NEIGHBORS[f][quadrant][0]] = quadrant
    return tuple(tuple(row) for row in table)


ADJACENT_FACE_DIR = _build_adjacent_face_dir()


def pos_angle_rads(rads: float) -> float:
    tmp = rads + M_2PI if rads < 0.0 else rads
    if rads >= M_2PI:
        tmp -= M_2PI
    return tmp


def constrain_lng(lng: float) -> float:
    while lng > M_PI:
        lng -= 2.0 * M_PI
    while lng < -M_PI:
        lng += 2.0 * M_PI
    return lng


def geo_azimuth_rads(lat1: float, lng1: float, lat2: float, lng2: float) -> float:
    """Azimuth from point 1 to point 2 on the unit sphere, radians."""
    return math.atan2(
        math.cos(lat2) * math.sin(lng2 - lng1),
        math.cos(lat1) * math.sin(lat2)
        - math.sin(lat1) * math.cos(lat2) * math.cos(lng2 - lng1),
    )


def geo_az_distance_rads(lat: float, lng: float, az: float, distance: float):
    """Point at the given azimuth and angular distance from a start point."""
    if distance < EPSILON:
        return lat, lng

    az = pos_angle_rads(az)

    if az < EPSILON or abs(az - M_PI) < EPSILON:
        # due north or south
        lat2 = lat + distance if az < EPSILON else lat - distance
        if abs(lat2 - M_PI_2) < EPSILON:
            return M_PI_2, 0.0
        if abs(lat2 + M_PI_2) < EPSILON:
            return -M_PI_2, 0.0
        return lat2, constrain_lng(lng)

    sinlat = math.sin(lat) * math.cos(distance) + math.cos(lat) * math.sin(
        distance
    ) * math.cos(az)
    sinlat = min(1.0, max(-1.0, sinlat))
    lat2 = math.asin(sinlat)
    if abs(lat2 - M_PI_2) < EPSILON:
        return M_PI_2, 0.0
    if abs(lat2 + M_PI_2) < EPSILON:
        return -M_PI_2, 0.0

    sinlng = math.sin(az) * math.sin(distance) / math.cos(lat2)
    coslng = (math.cos(distance) - math.sin(lat) * math.sin(lat2)) / (
        math.cos(lat) * math.cos(lat2)
    )
    sinlng = min(1.0, max(-1.0, sinlng))
    coslng = min(1.0, max(-1.0, coslng))
    return lat2, constrain_lng(lng + math.atan2(sinlng, coslng))


def geo_to_closest_face(lat: float, lng: float) -> tuple[int, float]:
    """Icosahedron face whose center is nearest, with squared chord distance."""
    r = math.cos(lat)
    x = math.cos(lng) * r
    y = math.sin(lng) * r
    z = math.sin(lat)

    face = 0
    sqd = 5.0
    for f in range(NUM_ICOSA_FACES):
        fx, fy, fz = FACE_CENTER_POINT[f]
        d = (fx - x) ** 2 + (fy - y) ** 2 + (fz - z) ** 2
        if d < sqd:
            face = f
            sqd = d
    return face, sqd


def geo_to_hex2d(lat: float, lng: float, res: int) -> tuple[int, float, float]:
    """Project a point onto its nearest face's hex lattice plane."""
    face, sqd = geo_to_closest_face(lat, lng)

    r = math.acos(1.0 - sqd / 2.0)
    if r < EPSILON:
        return face, 0.0, 0.0

    flat, flng = FACE_CENTER_GEO[face]
    theta = pos_angle_rads(
        FACE_AXES_AZ_RADS_CII[face][0]
        - pos_angle_rads(geo_azimuth_rads(flat, flng, lat, lng))
    )
    if is_resolution_class_iii(res):
        theta = pos_angle_rads(theta - M_AP7_ROT_RADS)

    r = math.tan(r) / RES0_U_GNOMONIC
    for _ in range(res):
        r *= M_SQRT7

    return face, r * math.cos(theta), r * math.sin(theta)


def hex2d_to_geo(
    x: float, y: float, face: int, res: int, substrate: bool
) -> tuple[float, float]:
    """Inverse gnomonic projection of a face-plane point back to lat/lng."""
    r = math.hypot(x, y)
    if r < EPSILON:
        return FACE_CENTER_GEO[face]

    theta = math.atan2(y, x)

    for _ in range(res):
        r /= M_SQRT7
    if substrate:
        r /= 3.0
        if is_resolution_class_iii(res):
            r /= M_SQRT7
    r *= RES0_U_GNOMONIC
    r = math.atan(r)

    if not substrate and is_resolution_class_iii(res):
        theta = pos_angle_rads(theta + M_AP7_ROT_RADS)

    theta = pos_angle_rads(FACE_AXES_AZ_RADS_CII[face][0] - theta)

    flat, flng = FACE_CENTER_GEO[face]
    return geo_az_distance_rads(flat, flng, theta, r)


def geo_to_face_ijk(lat: float, lng: float, res: int):
    face, x, y = geo_to_hex2d(lat, lng, res)
    return face, hex2d_to_coord_ijk(x, y)


def face_ijk_to_geo(face: int, ijk, res: int) -> tuple[float, float]:
    x, y = ijk_to_hex2d(*ijk)
    return hex2d_to_geo(x, y, face, res, False)


def adjust_overage_class_ii(face: int, ijk, res: int, pent_leading_4: bool, substrate: bool):
    """Rewrite coordinates that left the face into the neighbouring face's frame.

    Returns (overage code, face, ijk).  Class II resolutions only; Class III
    callers drop to the next finer Class II grid first.
    """
    max_dim = MAX_DIM_BY_CII_RES[res]
    if substrate:
        max_dim *= 3

    i, j, k = ijk
    total = i + j + k
    if substrate and total == max_dim:
        return FACE_EDGE, face, ijk
    if total <= max_dim:
        return NO_OVERAGE, face, ijk

    if k > 0:
        if j > 0:
            orient = FACE_NEIGHBORS[face][JK_QUADRANT]
        else:
            orient = FACE_NEIGHBORS[face][KI_QUADRANT]
            if pent_leading_4:
                # rotate out of the deleted k subsequence around the pentagon
                origin = (max_dim, 0, 0)
                tmp = ijk_sub(ijk, origin)
                ijk = ijk_add(ijk_rotate60_cw(*tmp), origin)
                i, j, k = ijk
    else:
        orient = FACE_NEIGHBORS[face][IJ_QUADRANT]

    new_face, translate, ccw_rot60 = orient
    for _ in range(ccw_rot60):
        i, j, k = ijk_rotate60_ccw(i, j, k)

    unit_scale = UNIT_SCALE_BY_CII_RES[res]
    if substrate:
        unit_scale *= 3
    i, j, k = ijk_normalize(*ijk_add((i, j, k), ijk_scale(translate, unit_scale)))

    overage = NEW_FACE
    if substrate and i + j + k == max_dim:
        overage = FACE_EDGE
    return overage, new_face, (i, j, k)


def adjust_pent_vert_overage(face: int, ijk, res: int):
    """Pentagon vertices may overage across several faces in sequence."""
    overage = NEW_FACE
    while overage == NEW_FACE:
        overage, face, ijk = adjust_overage_class_ii(face, ijk, res, False, True)
    return overage, face, ijk


# vertices of an origin-centered cell in a Class II resolution on a substrate
# grid with aperture sequence 33r, ccw from the i-axis
_VERTS_CII = ((2, 1, 0), (1, 2, 0), (0, 2, 1), (0, 1, 2), (1, 0, 2), (2, 0, 1))
# same for a Class III resolution, aperture sequence 33r7r
_VERTS_CIII = ((5, 4, 0), (1, 5, 0), (0, 5, 4), (0, 1, 5), (4, 0, 5), (5, 0, 1))


def _face_ijk_to_verts(face: int, ijk, res: int, num_verts: int):
    """Substrate-grid vertex coordinates of a cell; returns (adj_res, verts)."""
    verts = _VERTS_CIII if is_resolution_class_iii(res) else _VERTS_CII

    coord = down_ap3r(*down_ap3(*ijk))
    adj_res = res
    if is_resolution_class_iii(res):
        coord = down_ap7r(*coord)
        adj_res += 1

    return adj_res, [
        (face, ijk_normalize(*ijk_add(coord, verts[v]))) for v in range(num_verts)
    ]


def _v2d_intersect(p0, p1, p2, p3):
    s1x, s1y = p1[0] - p0[0], p1[1] - p0[1]
    s2x, s2y = p3[0] - p2[0], p3[1] - p2[1]
    t = (s2x * (p0[1] - p2[1]) - s2y * (p0[0] - p2[0])) / (-s2x * s1y + s1x * s2y)
    return p0[0] + t * s1x, p0[1] + t * s1y


def _icosa_edge(center_face: int, other_face: int, max_dim: int):
    """Substrate 2D endpoints of the face edge toward the given neighbour."""
    v0 = (3.0 * max_dim, 0.0)
    v1 = (-1.5 * max_dim, 3.0 * M_SQRT3_2 * max_dim)
    v2 = (-1.5 * max_dim, -3.0 * M_SQRT3_2 * max_dim)
    direction = ADJACENT_FACE_DIR[center_face][other_face]
    if direction == IJ_QUADRANT:
        return v0, v1
    if direction == JK_QUADRANT:
        return v1, v2
    return v2, v0


def face_ijk_to_cell_boundary(face: int, ijk, res: int) -> list[tuple[float, float]]:
    """Lat/lng vertices of a hexagonal cell, including icosa edge crossings."""
    adj_res, fijk_verts = _face_ijk_to_verts(face, ijk, res, NUM_HEX_VERTS)
    center_face = face

    verts: list[tuple[float, float]] = []
    last_face = -1
    last_overage = NO_OVERAGE
    for vert in range(NUM_HEX_VERTS + 1):
        v = vert % NUM_HEX_VERTS
        v_face, v_ijk = fijk_verts[v]
        overage, v_face, v_ijk = adjust_overage_class_ii(
            v_face, v_ijk, adj_res, False, True
        )

        # Class III cell edges can cross an icosahedron edge; the crossing
        # point must become a boundary vertex because each face is its own
        # projection plane.  A vertex exactly on the face edge is the
        # crossing itself, so no extra vertex is wanted on either side of it.
        if (
            is_resolution_class_iii(res)
            and vert > 0
            and v_face != last_face
            and last_overage != FACE_EDGE
            and overage != FACE_EDGE
        ):
            last_v = (v + 5) % NUM_HEX_VERTS
            orig2d0 = ijk_to_hex2d(*fijk_verts[last_v][1])
            orig2d1 = ijk_to_hex2d(*fijk_verts[v][1])

            face2 = v_face if last_face == center_face else last_face
            edge0, edge1 = _icosa_edge(center_face, face2, MAX_DIM_BY_CII_RES[adj_res])
            inter = _v2d_intersect(orig2d0, orig2d1, edge0, edge1)
            if inter != orig2d0 and inter != orig2d1:
                verts.append(hex2d_to_geo(inter[0], inter[1], center_face, adj_res, True))

        if vert < NUM_HEX_VERTS:
            x, y = ijk_to_hex2d(*v_ijk)
            verts.append(hex2d_to_geo(x, y, v_face, adj_res, True))

        last_face = v_face
        last_overage = overage

    return verts


def face_ijk_pent_to_cell_boundary(face: int, ijk, res: int) -> list[tuple[float, float]]:
    """Lat/lng vertices of a pentagonal cell, including icosa edge crossings."""
    adj_res, fijk_verts = _face_ijk_to_verts(face, ijk, res, NUM_PENT_VERTS)

    verts: list[tuple[float, float]] = []
    last_fijk = (-1, (0, 0, 0))
    for vert in range(NUM_PENT_VERTS + 1):
        v = vert % NUM_PENT_VERTS
        v_face, v_ijk = fijk_verts[v]
        _, v_face, v_ijk = adjust_pent_vert_overage(v_face, v_ijk, adj_res)

        # all Class III pentagon edges cross icosa edges
        if is_resolution_class_iii(res) and vert > 0:
            last_face, last_ijk = last_fijk
            orig2d0 = ijk_to_hex2d(*last_ijk)

            # pull the current vertex into the last vertex's face frame
            tmp_face = v_face
            to_last = ADJACENT_FACE_DIR[tmp_face][last_face]
            new_face, translate, ccw_rot60 = FACE_NEIGHBORS[tmp_face][to_last]
            tmp_face, tmp_ijk = new_face, v_ijk
            for _ in range(ccw_rot60):
                tmp_ijk = ijk_rotate60_ccw(*tmp_ijk)
            tmp_ijk = ijk_normalize(
                *ijk_add(tmp_ijk, ijk_scale(translate, UNIT_SCALE_BY_CII_RES[adj_res] * 3))
            )
            orig2d1 = ijk_to_hex2d(*tmp_ijk)

            edge0, edge1 = _icosa_edge(tmp_face, v_face, MAX_DIM_BY_CII_RES[adj_res])
            inter = _v2d_intersect(orig2d0, orig2d1, edge0, edge1)
            verts.append(hex2d_to_geo(inter[0], inter[1], tmp_face, adj_res, True))

        if vert < NUM_PENT_VERTS:
            x, y = ijk_to_hex2d(*v_ijk)
            verts.append(hex2d_to_geo(x, y, v_face, adj_res, True))

        last_fijk = (v_face, v_ijk)

    return verts
