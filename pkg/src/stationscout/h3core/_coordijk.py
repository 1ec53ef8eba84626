"""IJK hexagon coordinate arithmetic.

Cells on a face are addressed with three non-negative axial coordinates
(i, j, k), normalized so that at least one component is zero.  Digits 0-6
name the seven cells of an aperture-7 block: center plus the six unit
translations.
"""

from ._constants import M_SIN60

# digit names
CENTER_DIGIT = 0
K_AXES_DIGIT = 1
J_AXES_DIGIT = 2
JK_AXES_DIGIT = 3
I_AXES_DIGIT = 4
IK_AXES_DIGIT = 5
IJ_AXES_DIGIT = 6
INVALID_DIGIT = 7
NUM_DIGITS = 7

# unit ijk vector for each digit
UNIT_VECS = (
    (0, 0, 0),  # center
    (0, 0, 1),  # k
    (0, 1, 0),  # j
    (0, 1, 1),  # jk
    (1, 0, 0),  # i
    (1, 0, 1),  # ik
    (1, 1, 0),  # ij
)

_UNIT_VEC_TO_DIGIT = {v: d for d, v in enumerate(UNIT_VECS)}


def ijk_normalize(i: int, j: int, k: int) -> tuple[int, int, int]:
    """Normalize so all components are non-negative and at least one is zero."""
    m = min(i, j, k)
    return i - m, j - m, k - m


def ijk_add(a, b) -> tuple[int, int, int]:
    return a[0] + b[0], a[1] + b[1], a[2] + b[2]


def ijk_sub(a, b) -> tuple[int, int, int]:
    return a[0] - b[0], a[1] - b[1], a[2] - b[2]


def ijk_scale(a, factor: int) -> tuple[int, int, int]:
    return a[0] * factor, a[1] * factor, a[2] * factor


def unit_ijk_to_digit(ijk) -> int:
    """Digit for a normalized unit ijk vector, INVALID_DIGIT if not a unit vector."""
    return _UNIT_VEC_TO_DIGIT.get(ijk_normalize(*ijk), INVALID_DIGIT)


def ijk_to_hex2d(i: int, j: int, k: int) -> tuple[float, float]:
    """Center of an ijk cell in flat 2D coordinates on its face."""
    i -= k
    j -= k
    return i - 0.5 * j, j * M_SIN60


def hex2d_to_coord_ijk(x: float, y: float) -> tuple[int, int, int]:
    """Containing cell of a 2D point, as normalized ijk coordinates."""
    a1 = abs(x)
    a2 = abs(y)

    # first do a reverse conversion
    x2 = a2 / M_SIN60
    x1 = a1 + x2 / 2.0

    # check if we have the center of a hex
    m1 = int(x1)
    m2 = int(x2)

    # otherwise round correctly
    r1 = x1 - m1
    r2 = x2 - m2

    if r1 < 0.5:
        if r1 < 1.0 / 3.0:
            if r2 < (1.0 + r1) / 2.0:
                i, j = m1, m2
            else:
                i, j = m1, m2 + 1
        else:
            j = m2 + 1 if r2 >= 1.0 - r1 else m2
            i = m1 + 1 if (1.0 - r1) <= r2 < (2.0 * r1) else m1
    else:
        if r1 < 2.0 / 3.0:
            j = m2 if r2 < (1.0 - r1) else m2 + 1
            i = m1 if (2.0 * r1 - 1.0) < r2 < (1.0 - r1) else m1 + 1
        else:
            if r2 < r1 / 2.0:
                i, j = m1 + 1, m2
            else:
                i, j = m1 + 1, m2 + 1
    k = 0

    # fold across the axes if necessary
    if x < 0.0:
        if j % 2 == 0:  # even
            axis_i = j // 2
            diff = i - axis_i
            i = i - 2 * diff
        else:
            axis_i = (j + 1) // 2
            diff = i - axis_i
            i = i - (2 * diff + 1)
    if y < 0.0:
        i = i - (2 * j + 1) // 2
        j = -j

    return ijk_normalize(i, j, k)


def ijk_rotate60_ccw(i: int, j: int, k: int) -> tuple[int, int, int]:
    return ijk_normalize(i + k, i + j, j + k)


def ijk_rotate60_cw(i: int, j: int, k: int) -> tuple[int, int, int]:
    return ijk_normalize(i + j, j + k, i + k)


def rotate60_ccw(digit: int) -> int:
    """Rotate a digit 60 degrees counter-clockwise (cycle k->ik->i->ij->j->jk->k)."""
    return (0, 5, 3, 1, 6, 4, 2, 7)[digit]


def rotate60_cw(digit: int) -> int:
    """Rotate a digit 60 degrees clockwise (cycle k->jk->j->ij->i->ik->k)."""
    return (0, 3, 6, 2, 5, 1, 4, 7)[digit]


def up_ap7(i: int, j: int, k: int) -> tuple[int, int, int]:
    """Parent cell in the next coarser aperture-7 Class II grid."""
    di = i - k
    dj = j - k
    return ijk_normalize(round((3 * di - dj) / 7.0), round((di + 2 * dj) / 7.0), 0)


def up_ap7r(i: int, j: int, k: int) -> tuple[int, int, int]:
    """Parent cell in the next coarser aperture-7 Class III grid."""
    di = i - k
    dj = j - k
    return ijk_normalize(round((2 * di + dj) / 7.0), round((3 * dj - di) / 7.0), 0)


def down_ap7(i: int, j: int, k: int) -> tuple[int, int, int]:
    """Center child in the next finer aperture-7 Class II grid."""
    return ijk_normalize(3 * i + j, 3 * j + k, i + 3 * k)


def down_ap7r(i: int, j: int, k: int) -> tuple[int, int, int]:
    """Center child in the next finer aperture-7 Class III grid."""
    return ijk_normalize(3 * i + k, i + 3 * j, j + 3 * k)


def down_ap3(i: int, j: int, k: int) -> tuple[int, int, int]:
    """Same cell center in an aperture-3 Class III substrate grid."""
    return ijk_normalize(2 * i + j, 2 * j + k, i + 2 * k)


def down_ap3r(i: int, j: int, k: int) -> tuple[int, int, int]:
    """Same cell center in an aperture-3 Class II substrate grid."""
    return ijk_normalize(2 * i + k, i + 2 * j, j + 2 * k)


def neighbor(ijk, digit: int) -> tuple[int, int, int]:
    """Cell one step away in the given digit direction."""
    if digit == CENTER_DIGIT:
        return ijk
    return ijk_normalize(*ijk_add(ijk, UNIT_VECS[digit]))
