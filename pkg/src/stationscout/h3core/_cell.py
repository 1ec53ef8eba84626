"""Conversion between geographic coordinates and cell indexes.

The encode walks from the finest resolution up to the base cell,
collecting one digit per level; the decode replays the digits downward
from the base cell's home face and resolves any overage onto adjacent
icosahedron faces.
"""

from . import _constants as C
from . import _coordijk as CK
from . import _faceijk as F
from . import _index as IX
from . import _tables as T


def _base_cell_at(face: int, ijk) -> tuple[int, int]:
    return T.FACE_IJK_BASE_CELLS[(face, (ijk[0], ijk[1], ijk[2]))]


def face_ijk_to_cell(face: int, ijk, res: int) -> int:
    """Build a cell index from face ijk coordinates at resolution res."""
    h = IX.H3_INIT
    h = IX.set_resolution(h, res)

    if res == 0:
        if max(ijk) > C.MAX_FACE_COORD:
            raise ValueError("coordinates out of range for base cell lookup")
        bc, _ = _base_cell_at(face, ijk)
        return IX.set_base_cell(h, bc)

    # walk up to res 0, recording the hole each step leaves behind
    cur = tuple(ijk)
    for r in range(res - 1, -1, -1):
        last = cur
        if C.is_resolution_class_iii(r + 1):
            cur = CK.up_ap7(*cur)
            last_center = CK.down_ap7(*cur)
        else:
            cur = CK.up_ap7r(*cur)
            last_center = CK.down_ap7r(*cur)
        diff = CK.ijk_normalize(*CK.ijk_sub(last, last_center))
        h = IX.set_index_digit(h, r + 1, CK.unit_ijk_to_digit(diff))

    if max(cur) > C.MAX_FACE_COORD:
        raise ValueError("coordinates out of range for base cell lookup")
    bc, num_rots = _base_cell_at(face, cur)
    h = IX.set_base_cell(h, bc)

    if bc in T.PENTAGON_BASE_CELLS:
        # force rotation out of the missing k-axes subsequence
        if IX.leading_non_zero_digit(h) == CK.K_AXES_DIGIT:
            if face in T.CW_OFFSET_PENT[bc]:
                h = IX.rotate60_cw_index(h)
            else:
                h = IX.rotate60_ccw_index(h)
        for _ in range(num_rots):
            h = IX.rotate_pent60_ccw_index(h)
    else:
        for _ in range(num_rots):
            h = IX.rotate60_ccw_index(h)
    return h


def geo_to_cell(lat: float, lng: float, res: int) -> int:
    """Index the cell containing the point, angles in radians."""
    face, ijk = F.geo_to_face_ijk(lat, lng, res)
    return face_ijk_to_cell(face, ijk, res)


def _digits_to_face_ijk(h: int, face: int, ijk) -> tuple[tuple, bool]:
    """Replay index digits downward from a starting face ijk.

    Returns the coordinates and whether they may overflow the face.
    """
    res = IX.get_resolution(h)
    bc = IX.get_base_cell(h)
    cur = tuple(ijk)
    possible_overage = True
    if bc not in T.PENTAGON_BASE_CELLS and (
        res == 0 or cur == (0, 0, 0)
    ):
        possible_overage = False
    for r in range(1, res + 1):
        if C.is_resolution_class_iii(r):
            cur = CK.down_ap7(*cur)
        else:
            cur = CK.down_ap7r(*cur)
        cur = CK.neighbor(cur, IX.get_index_digit(h, r))
    return cur, possible_overage


def cell_to_face_ijk(h: int) -> tuple[int, tuple]:
    """Resolve a cell index to face ijk coordinates at its own resolution."""
    bc = IX.get_base_cell(h)
    on_pent = bc in T.PENTAGON_BASE_CELLS

    # subsequence 5 of a pentagon lies across the deleted k axes; pull it
    # back before walking
    if on_pent and IX.leading_non_zero_digit(h) == CK.IK_AXES_DIGIT:
        h = IX.rotate60_cw_index(h)

    face, home_ijk = T.BASE_CELL_HOME[bc]
    cur, possible_overage = _digits_to_face_ijk(h, face, home_ijk)
    if not possible_overage:
        return face, cur

    orig = cur
    res = IX.get_resolution(h)
    adj_res = res
    if C.is_resolution_class_iii(res):
        cur = CK.down_ap7r(*cur)
        adj_res += 1

    pent_leading_4 = on_pent and IX.leading_non_zero_digit(h) == CK.I_AXES_DIGIT
    overage, face, cur = F.adjust_overage_class_ii(
        face, cur, adj_res, pent_leading_4, False
    )
    if overage != C.NO_OVERAGE:
        if on_pent:
            while True:
                overage, face, cur = F.adjust_overage_class_ii(
                    face, cur, adj_res, False, False
                )
                if overage == C.NO_OVERAGE:
                    break
        if adj_res != res:
            cur = CK.up_ap7r(*cur)
    elif adj_res != res:
        cur = orig
    return face, cur


def cell_to_geo(h: int) -> tuple[float, float]:
    """Center of the cell in radians."""
    face, ijk = cell_to_face_ijk(h)
    return F.face_ijk_to_geo(face, ijk, IX.get_resolution(h))


def is_pentagon_cell(h: int) -> bool:
    return (
        IX.get_base_cell(h) in T.PENTAGON_BASE_CELLS
        and IX.leading_non_zero_digit(h) == CK.CENTER_DIGIT
    )


def cell_to_boundary(h: int) -> list[tuple[float, float]]:
    """Vertices of the cell in radians, counterclockwise."""
    face, ijk = cell_to_face_ijk(h)
    res = IX.get_resolution(h)
    if is_pentagon_cell(h):
        return F.face_ijk_pent_to_cell_boundary(face, ijk, res)
    return F.face_ijk_to_cell_boundary(face, ijk, res)


def is_valid_cell(h: int) -> bool:
    return IX.is_valid_cell_index(h, T.PENTAGON_BASE_CELLS)
