"""Grid traversal: neighbor steps, disks, and rings.

Traversal rewrites index digits in place of any geometric work.  Moving a
cell one step within its parent either stays inside the parent (new digit,
no carry) or crosses into a sibling parent (new digit plus a direction to
apply one level up).  The rewrite tables are small enough to derive from
the aperture-7 lattice arithmetic at import time.
"""

from . import _constants as C
from . import _coordijk as CK
from . import _index as IX
from . import _tables as T
from ._cell import is_pentagon_cell


class PentagonDistortion(Exception):
    """Raised when a traversal step runs into the deleted pentagon axis."""


def _build_rewrite_tables(class_iii: bool):
    up = CK.up_ap7 if class_iii else CK.up_ap7r
    down = CK.down_ap7 if class_iii else CK.down_ap7r
    new_digit = [[0] * 7 for _ in range(7)]
    adjustment = [[0] * 7 for _ in range(7)]
    for g in range(7):
        for d in range(7):
            s = CK.ijk_add(CK.UNIT_VECS[g], CK.UNIT_VECS[d])
            parent = up(*s)
            rest = CK.ijk_normalize(*CK.ijk_sub(s, down(*parent)))
            g2 = CK.unit_ijk_to_digit(rest)
            d2 = CK.unit_ijk_to_digit(CK.ijk_normalize(*parent))
            assert g2 != CK.INVALID_DIGIT and d2 != CK.INVALID_DIGIT, (g, d)
            new_digit[g][d] = g2
            adjustment[g][d] = d2
    return new_digit, adjustment


# index 0: tables for digits whose resolution is Class III, 1: Class II
_TABLES_III = _build_rewrite_tables(True)
_TABLES_II = _build_rewrite_tables(False)
_NEW_DIGIT = (_TABLES_III[0], _TABLES_II[0])
_ADJUSTMENT = (_TABLES_III[1], _TABLES_II[1])


def _find_polar_pentagons():
    corners = {bc: set() for bc in T.PENTAGON_BASE_CELLS}
    for (face, ijk), (bc, _) in T.FACE_IJK_BASE_CELLS.items():
        if bc in corners and sum(ijk) == 2:
            corners[bc].add(ijk)
    polar = {bc for bc, seen in corners.items() if seen == {(2, 0, 0)}}
    assert len(polar) == 2, polar
    return frozenset(polar)


# the two pentagons nearest the poles appear on the i corner of all five of
# their faces; the base cells entered from them through jk skip the extra
# rotation below
_POLAR_PENTAGONS = _find_polar_pentagons()
_POLAR_JK_NEIGHBORS = frozenset(
    T.BASE_CELL_NEIGHBORS[bc][CK.JK_AXES_DIGIT] for bc in _POLAR_PENTAGONS
)

# ring traversal: one step out, then six sides ccw
_RING_DIRECTIONS = (
    CK.J_AXES_DIGIT,
    CK.JK_AXES_DIGIT,
    CK.K_AXES_DIGIT,
    CK.IK_AXES_DIGIT,
    CK.I_AXES_DIGIT,
    CK.IJ_AXES_DIGIT,
)
_NEXT_RING_DIRECTION = CK.I_AXES_DIGIT


def neighbor_rotations(origin: int, direction: int, rotations: int):
    """Step one cell in the given direction.

    Returns the neighbor index and the updated direction-frame rotation
    count.  Raises PentagonDistortion when the step leaves the grid through
    a pentagon's deleted subsequence.
    """
    out = origin
    for _ in range(rotations % 6):
        direction = CK.rotate60_ccw(direction)

    new_rotations = 0
    old_base_cell = IX.get_base_cell(out)
    if old_base_cell >= C.NUM_BASE_CELLS:
        raise ValueError("invalid base cell")
    old_leading = IX.leading_non_zero_digit(out)

    r = IX.get_resolution(out) - 1
    while True:
        if r == -1:
            new_base_cell = T.BASE_CELL_NEIGHBORS[old_base_cell][direction]
            new_rotations = T.BASE_CELL_NEIGHBOR_60CCW_ROTS[old_base_cell][direction]
            if new_base_cell == T.INVALID_BASE_CELL:
                # deleted k vertex at the base cell level; this edge
                # actually borders a different neighbor
                new_base_cell = T.BASE_CELL_NEIGHBORS[old_base_cell][CK.IK_AXES_DIGIT]
                new_rotations = T.BASE_CELL_NEIGHBOR_60CCW_ROTS[old_base_cell][
                    CK.IK_AXES_DIGIT
                ]
                out = IX.rotate60_ccw_index(out)
                rotations += 1
            out = IX.set_base_cell(out, new_base_cell)
            break
        old_digit = IX.get_index_digit(out, r + 1)
        if old_digit == CK.INVALID_DIGIT:
            raise ValueError("invalid index digit")
        table = 0 if C.is_resolution_class_iii(r + 1) else 1
        out = IX.set_index_digit(out, r + 1, _NEW_DIGIT[table][old_digit][direction])
        next_dir = _ADJUSTMENT[table][old_digit][direction]
        if next_dir == CK.CENTER_DIGIT:
            break
        direction = next_dir
        r -= 1

    new_base_cell = IX.get_base_cell(out)
    if new_base_cell in T.PENTAGON_BASE_CELLS:
        already_adjusted_k = False
        if IX.leading_non_zero_digit(out) == CK.K_AXES_DIGIT:
            if old_base_cell != new_base_cell:
                # traversed into the deleted k subsequence of a pentagon
                # from another base cell
                if T.BASE_CELL_HOME[old_base_cell][0] in T.CW_OFFSET_PENT[new_base_cell]:
                    out = IX.rotate60_cw_index(out)
                else:
                    out = IX.rotate60_ccw_index(out)
                already_adjusted_k = True
            elif old_leading == CK.CENTER_DIGIT:
                # the k direction is deleted from here
                raise PentagonDistortion
            elif old_leading == CK.JK_AXES_DIGIT:
                out = IX.rotate60_ccw_index(out)
                rotations += 1
            elif old_leading == CK.IK_AXES_DIGIT:
                out = IX.rotate60_cw_index(out)
                rotations += 5
            else:
                raise ValueError("unexpected leading digit entering pentagon")
        for _ in range(new_rotations):
            out = IX.rotate_pent60_ccw_index(out)
        if old_base_cell != new_base_cell:
            if new_base_cell in _POLAR_PENTAGONS:
                # polar base cells have all i neighbors
                if (
                    old_base_cell not in _POLAR_JK_NEIGHBORS
                    and IX.leading_non_zero_digit(out) != CK.JK_AXES_DIGIT
                ):
                    rotations += 1
            elif (
                IX.leading_non_zero_digit(out) == CK.IK_AXES_DIGIT
                and not already_adjusted_k
            ):
                # distortion introduced to the 5 neighbor by the deleted
                # k subsequence
                rotations += 1
    else:
        for _ in range(new_rotations):
            out = IX.rotate60_ccw_index(out)

    return out, (rotations + new_rotations) % 6


def _grid_disk_spiral(origin: int, k: int):
    """Ordered spiral disk; raises PentagonDistortion near pentagons."""
    out = [(origin, 0)]
    if is_pentagon_cell(origin):
        raise PentagonDistortion
    h = origin
    ring, direction, i, rotations = 1, 0, 0, 0
    while ring <= k:
        if direction == 0 and i == 0:
            h, rotations = neighbor_rotations(h, _NEXT_RING_DIRECTION, rotations)
            if is_pentagon_cell(h):
                raise PentagonDistortion
        h, rotations = neighbor_rotations(h, _RING_DIRECTIONS[direction], rotations)
        out.append((h, ring))
        i += 1
        if i == ring:
            i = 0
            direction += 1
            if direction == 6:
                direction = 0
                ring += 1
        if is_pentagon_cell(h):
            raise PentagonDistortion
    return out


def _grid_disk_bfs(origin: int, k: int):
    """Breadth-first disk; pentagon-safe, order is discovery order."""
    dist = {origin: 0}
    out = [(origin, 0)]
    queue = [origin]
    while queue:
        nxt = []
        for h in queue:
            d = dist[h]
            if d == k:
                continue
            for direction in _RING_DIRECTIONS:
                try:
                    n, _ = neighbor_rotations(h, direction, 0)
                except PentagonDistortion:
                    continue
                if n not in dist:
                    dist[n] = d + 1
                    out.append((n, d + 1))
                    nxt.append(n)
        queue = nxt
    return out


def grid_disk_distances(origin: int, k: int) -> list[tuple[int, int]]:
    """All cells within k steps as (cell, distance), distance ascending.

    Hexagon-only neighborhoods come back in ring spiral order; when a
    pentagon is inside or adjacent to the disk the order falls back to
    breadth-first discovery.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    try:
        return _grid_disk_spiral(origin, k)
    except PentagonDistortion:
        return _grid_disk_bfs(origin, k)


def grid_disk(origin: int, k: int) -> list[int]:
    return [h for h, _ in grid_disk_distances(origin, k)]


def grid_ring(origin: int, k: int) -> list[int]:
    """Cells at exactly k steps.  Hollow-ring walk when no pentagon interferes."""
    if k == 0:
        return [origin]
    if not is_pentagon_cell(origin):
        try:
            return _grid_ring_walk(origin, k)
        except PentagonDistortion:
            pass
    return [h for h, d in _grid_disk_bfs(origin, k) if d == k]


def _grid_ring_walk(origin: int, k: int):
    rotations = 0
    h = origin
    for _ in range(k):
        h, rotations = neighbor_rotations(h, _NEXT_RING_DIRECTION, rotations)
        if is_pentagon_cell(h):
            raise PentagonDistortion
    last = h
    out = [h]
    for direction in range(6):
        for pos in range(k):
            h, rotations = neighbor_rotations(h, _RING_DIRECTIONS[direction], rotations)
            if pos != k - 1 or direction != 5:
                out.append(h)
                if is_pentagon_cell(h):
                    raise PentagonDistortion
    if last != h:
        # walk did not close; pentagon distortion somewhere inside
        raise PentagonDistortion
    return out
