"""64-bit H3 cell index bit layout and digit-level operations.

Layout (high to low): 1 reserved bit, 4 mode bits, 3 reserved bits,
4 resolution bits, 7 base cell bits, then fifteen 3-bit digits for
resolutions 1-15.  Digits beyond the index resolution hold 7.
"""

from ._constants import MAX_H3_RES, NUM_BASE_CELLS
from ._coordijk import (
    CENTER_DIGIT,
    INVALID_DIGIT,
    K_AXES_DIGIT,
    rotate60_ccw,
    rotate60_cw,
)

H3_CELL_MODE = 1

_MODE_OFFSET = 59
_MODE_MASK = 0xF << _MODE_OFFSET
_RESERVED_OFFSET = 56
_RESERVED_MASK = 0x7 << _RESERVED_OFFSET
_RES_OFFSET = 52
_RES_MASK = 0xF << _RES_OFFSET
_BC_OFFSET = 45
_BC_MASK = 0x7F << _BC_OFFSET
_HIGH_BIT = 1 << 63

# all digits set to 7, mode set to cell
H3_INIT = (2**45 - 1) | (H3_CELL_MODE << _MODE_OFFSET)


def get_mode(h: int) -> int:
    return (h & _MODE_MASK) >> _MODE_OFFSET


def get_resolution(h: int) -> int:
    return (h & _RES_MASK) >> _RES_OFFSET


def set_resolution(h: int, res: int) -> int:
    return (h & ~_RES_MASK) | (res << _RES_OFFSET)


def get_base_cell(h: int) -> int:
    return (h & _BC_MASK) >> _BC_OFFSET


def set_base_cell(h: int, bc: int) -> int:
    return (h & ~_BC_MASK) | (bc << _BC_OFFSET)


def _digit_offset(res: int) -> int:
    return (MAX_H3_RES - res) * 3


def get_index_digit(h: int, res: int) -> int:
    return (h >> _digit_offset(res)) & 0x7


def set_index_digit(h: int, res: int, digit: int) -> int:
    off = _digit_offset(res)
    return (h & ~(0x7 << off)) | (digit << off)


def leading_non_zero_digit(h: int) -> int:
    """First non-center digit of the index, CENTER_DIGIT if all are center."""
    for r in range(1, get_resolution(h) + 1):
        d = get_index_digit(h, r)
        if d != CENTER_DIGIT:
            return d
    return CENTER_DIGIT


def rotate60_ccw_index(h: int) -> int:
    """Rotate all digits of an index 60 degrees counter-clockwise."""
    for r in range(1, get_resolution(h) + 1):
        h = set_index_digit(h, r, rotate60_ccw(get_index_digit(h, r)))
    return h


def rotate60_cw_index(h: int) -> int:
    """Rotate all digits of an index 60 degrees clockwise."""
    for r in range(1, get_resolution(h) + 1):
        h = set_index_digit(h, r, rotate60_cw(get_index_digit(h, r)))
    return h


def rotate_pent60_ccw_index(h: int) -> int:
    """Rotate a pentagon-rooted index 60 degrees ccw, skipping the deleted k axis."""
    found_first = False
    for r in range(1, get_resolution(h) + 1):
        h = set_index_digit(h, r, rotate60_ccw(get_index_digit(h, r)))
        if not found_first and get_index_digit(h, r) != CENTER_DIGIT:
            found_first = True
            if leading_non_zero_digit(h) == K_AXES_DIGIT:
                h = rotate60_ccw_index(h)
    return h


def rotate_pent60_cw_index(h: int) -> int:
    """Rotate a pentagon-rooted index 60 degrees cw, skipping the deleted k axis."""
    found_first = False
    for r in range(1, get_resolution(h) + 1):
        h = set_index_digit(h, r, rotate60_cw(get_index_digit(h, r)))
        if not found_first and get_index_digit(h, r) != CENTER_DIGIT:
            found_first = True
            if leading_non_zero_digit(h) == K_AXES_DIGIT:
                h = rotate60_cw_index(h)
    return h


def build_cell_index(res: int, base_cell: int, digits) -> int:
    """Assemble an index from resolution, base cell, and a digit sequence."""
    h = set_base_cell(set_resolution(H3_INIT, res), base_cell)
    for r, d in enumerate(digits, start=1):
        h = set_index_digit(h, r, d)
    return h


def is_valid_cell_index(h: int, pentagon_base_cells=frozenset()) -> bool:
    """Structural validity of a cell index per the H3 bit-layout rules."""
    if not isinstance(h, int) or h < 0 or h & _HIGH_BIT:
        return False
    if get_mode(h) != H3_CELL_MODE:
        return False
    if h & _RESERVED_MASK:
        return False
    if get_base_cell(h) >= NUM_BASE_CELLS:
        return False
    res = get_resolution(h)
    found_non_center = False
    for r in range(1, res + 1):
        d = get_index_digit(h, r)
        if d == INVALID_DIGIT:
            return False
        if not found_non_center and d != CENTER_DIGIT:
            found_non_center = True
            if d == K_AXES_DIGIT and get_base_cell(h) in pentagon_base_cells:
                return False  # leading digit in the deleted pentagon subsequence
    for r in range(res + 1, MAX_H3_RES + 1):
        if get_index_digit(h, r) != INVALID_DIGIT:
            return False
    return True


def cell_index_to_string(h: int) -> str:
    return f"{h:x}"


def string_to_cell_index(s: str) -> int:
    return int(s, 16)
