"""Geometric constants of the H3 discrete global grid.

Face center coordinates and axis azimuths define the canonical orientation
of the icosahedron used by the H3 grid system; they are fixed by the grid
specification and must not be altered, or cell indexes stop being H3 cells.
"""

import math

MAX_H3_RES = 15
NUM_ICOSA_FACES = 20
NUM_BASE_CELLS = 122
NUM_HEX_VERTS = 6
NUM_PENT_VERTS = 5

M_PI = math.pi
M_PI_2 = math.pi / 2.0
M_2PI = 2.0 * math.pi

# sin(60 deg), used by the hex2d <-> ijk conversions
M_SIN60 = math.sqrt(3.0) / 2.0
M_SQRT3_2 = M_SIN60
M_SQRT7 = math.sqrt(7.0)

# rotation angle between Class II and Class III resolution axes: asin(sqrt(3/28))
M_AP7_ROT_RADS = math.asin(math.sqrt(3.0 / 28.0))

# scaling factor from hex2d resolution-0 units to gnomonic units
RES0_U_GNOMONIC = 0.38196601125010500003

EPSILON = 1e-16
EPSILON_DEG = 1e-9
EPSILON_RAD = EPSILON_DEG * math.pi / 180.0

# icosahedron face centers in lat/lng radians
FACE_CENTER_GEO = (
    (0.803582649718989942, 1.248397419617396099),    # face  0
    (1.307747883455638156, 2.536945009877921159),    # face  1
    (1.054751253523952054, -1.347517358900396623),   # face  2
    (0.600191595538186799, -0.450603909469755746),   # face  3
    (0.491715428198773866, 0.401988202911306943),    # face  4
    (0.172745327415618701, 1.678146885280433686),    # face  5
    (0.605929321571350690, 2.953923329812411617),    # face  6
    (0.427370518328979641, -1.888876200336285401),   # face  7
    (-0.079066118549212831, -0.733429513380867741),  # face  8
    (-0.230961644455383637, 0.506495587332349035),   # face  9
    (0.079066118549212831, 2.408163140208925497),    # face 10
    (0.230961644455383637, -2.635097066257444203),   # face 11
    (-0.172745327415618701, -1.463445768309359553),  # face 12
    (-0.605929321571350690, -0.187669323777381622),  # face 13
    (-0.427370518328979641, 1.252716453253507838),   # face 14
    (-0.600191595538186799, 2.690988744120037492),   # face 15
    (-0.491715428198773866, -2.739604450678486295),  # face 16
    (-0.803582649718989942, -1.893195233972397139),  # face 17
    (-1.307747883455638156, -0.604647643711872080),  # face 18
    (-1.054751253523952054, 1.794075294689396615),   # face 19
)

# azimuth from each face center to its Class II i/j/k axes, radians
FACE_AXES_AZ_RADS_CII = (
    (5.619958268523939882, 3.525563166130744542, 1.431168063737548730),  # face  0
    (5.760339081714187279, 3.665943979320991689, 1.571548876927796127),  # face  1
    (0.780213654393430055, 4.969003859179821079, 2.874608756786625655),  # face  2
    (0.430469363979999913, 4.619259568766391033, 2.524864466373195467),  # face  3
    (6.130269123335111400, 4.035874020941915804, 1.941478918548720291),  # face  4
    (2.692877706530642877, 0.598482604137447119, 4.787272808923838195),  # face  5
    (2.982963003477243874, 0.888567901084048369, 5.077358105870439581),  # face  6
    (3.532912002790141181, 1.438516900396945656, 5.627307105183336758),  # face  7
    (3.494305004259568154, 1.399909901866372864, 5.588700106652763840),  # face  8
    (3.003214169499538391, 0.908819067106342928, 5.097609271892734017),  # face  9
    (5.930472956509811562, 3.836077854116615875, 1.741682751723420374),  # face 10
    (0.138378484090254847, 4.327168688876645809, 2.232773586483450311),  # face 11
    (0.448714947059150361, 4.637505151845541521, 2.543110049452346110),  # face 12
    (0.158629650112549365, 4.347419854898940135, 2.253024752505744737),  # face 13
    (5.891865957979238535, 3.797470855586042958, 1.703075753192847583),  # face 14
    (2.711123289609793325, 0.616728187216597771, 4.805518392002988683),  # face 15
    (3.294508837434268316, 1.200113735041072948, 5.388903939827463860),  # face 16
    (3.804819692245439833, 1.710424589852244509, 5.899214794638635421),  # face 17
    (3.664438879055192436, 1.570043776661997225, 5.758833981448388024),  # face 18
    (2.361378999196363184, 0.266983896803167583, 4.455774101589558636),  # face 19
)

# face centers as unit 3D vectors, derived from FACE_CENTER_GEO
def _geo_to_vec3d(lat: float, lng: float) -> tuple[float, float, float]:
    r = math.cos(lat)
    return (math.cos(lng) * r, math.sin(lng) * r, math.sin(lat))


FACE_CENTER_POINT = tuple(_geo_to_vec3d(lat, lng) for lat, lng in FACE_CENTER_GEO)

# max |i,j,k| coordinate and unit scale of the Class II grid at each resolution;
# only even (Class II) resolutions are meaningful
MAX_DIM_BY_CII_RES = tuple(2 * 7 ** (r // 2) if r % 2 == 0 else -1 for r in range(MAX_H3_RES + 2))
UNIT_SCALE_BY_CII_RES = tuple(7 ** (r // 2) if r % 2 == 0 else -1 for r in range(MAX_H3_RES + 2))

MAX_FACE_COORD = 2

# overage return codes for face boundary adjustment
NO_OVERAGE = 0
FACE_EDGE = 1
NEW_FACE = 2

# quadrants of faceNeighbors entries
CENTER_FACE = 0
IJ_QUADRANT = 1
KI_QUADRANT = 2
JK_QUADRANT = 3


def is_resolution_class_iii(res: int) -> bool:
    """Odd resolutions have Class III (rotated) grid orientation."""
    return res % 2 == 1
