"""Base cell data of the H3 grid.

Generated by scripts/gen_h3_tables.py against the reference grid
implementation; do not edit by hand.  The full derivation is
re-validated by scripts/validate_h3.py and the frozen vectors in
the test suite."""

INVALID_BASE_CELL = 127

PENTAGON_BASE_CELLS = frozenset([4, 14, 24, 38, 49, 58, 63, 72, 83, 97, 107, 117])

# (home face, home ijk) per base cell
BASE_CELL_HOME = (
    (1, (1, 0, 0)),
    (2, (1, 1, 0)),
    (1, (0, 0, 0)),
    (2, (1, 0, 0)),
    (0, (2, 0, 0)),
    (1, (1, 1, 0)),
    (1, (0, 0, 1)),
    (2, (0, 0, 0)),
    (0, (1, 0, 0)),
    (2, (0, 1, 0)),
    (1, (0, 1, 0)),
    (1, (0, 1, 1)),
    (3, (1, 0, 0)),
    (3, (1, 1, 0)),
    (11, (2, 0, 0)),
    (4, (1, 0, 0)),
    (0, (0, 0, 0)),
    (6, (0, 1, 0)),
    (0, (0, 0, 1)),
    (2, (0, 1, 1)),
    (7, (0, 0, 1)),
    (2, (0, 0, 1)),
    (0, (1, 1, 0)),
    (6, (0, 0, 1)),
    (10, (2, 0, 0)),
    (6, (0, 0, 0)),
    (3, (0, 0, 0)),
    (11, (1, 0, 0)),
    (4, (1, 1, 0)),
    (3, (0, 1, 0)),
    (0, (0, 1, 1)),
    (4, (0, 0, 0)),
    (5, (0, 1, 0)),
    (0, (0, 1, 0)),
    (7, (0, 1, 0)),
    (11, (1, 1, 0)),
    (7, (0, 0, 0)),
    (10, (1, 0, 0)),
    (12, (2, 0, 0)),
    (6, (1, 0, 1)),
    (7, (1, 0, 1)),
    (4, (0, 0, 1)),
    (3, (0, 0, 1)),
    (3, (0, 1, 1)),
    (4, (0, 1, 0)),
    (6, (1, 0, 0)),
    (11, (0, 0, 0)),
    (8, (0, 0, 1)),
    (5, (0, 0, 1)),
    (14, (2, 0, 0)),
    (5, (0, 0, 0)),
    (12, (1, 0, 0)),
    (10, (1, 1, 0)),
    (4, (0, 1, 1)),
    (12, (1, 1, 0)),
    (7, (1, 0, 0)),
    (11, (0, 1, 0)),
    (10, (0, 0, 0)),
    (13, (2, 0, 0)),
    (10, (0, 0, 1)),
    (11, (0, 0, 1)),
    (9, (0, 1, 0)),
    (8, (0, 1, 0)),
    (6, (2, 0, 0)),
    (8, (0, 0, 0)),
    (9, (0, 0, 1)),
    (14, (1, 0, 0)),
    (5, (1, 0, 1)),
    (16, (0, 1, 1)),
    (8, (1, 0, 1)),
    (5, (1, 0, 0)),
    (12, (0, 0, 0)),
    (7, (2, 0, 0)),
    (12, (0, 1, 0)),
    (10, (0, 1, 0)),
    (9, (0, 0, 0)),
    (13, (1, 0, 0)),
    (16, (0, 0, 1)),
    (15, (0, 1, 1)),
    (15, (0, 1, 0)),
    (16, (0, 1, 0)),
    (14, (1, 1, 0)),
    (13, (1, 1, 0)),
    (5, (2, 0, 0)),
    (8, (1, 0, 0)),
    (14, (0, 0, 0)),
    (9, (1, 0, 1)),
    (14, (0, 0, 1)),
    (17, (0, 0, 1)),
    (12, (0, 0, 1)),
    (16, (0, 0, 0)),
    (17, (0, 1, 1)),
    (15, (0, 0, 1)),
    (16, (1, 0, 1)),
    (9, (1, 0, 0)),
    (15, (0, 0, 0)),
    (13, (0, 0, 0)),
    (8, (2, 0, 0)),
    (13, (0, 1, 0)),
    (17, (1, 0, 1)),
    (19, (0, 1, 0)),
    (14, (0, 1, 0)),
    (19, (0, 1, 1)),
    (17, (0, 1, 0)),
    (13, (0, 0, 1)),
    (17, (0, 0, 0)),
    (16, (1, 0, 0)),
    (9, (2, 0, 0)),
    (15, (1, 0, 1)),
    (15, (1, 0, 0)),
    (18, (0, 1, 1)),
    (18, (0, 0, 1)),
    (19, (0, 0, 1)),
    (17, (1, 0, 0)),
    (19, (0, 0, 0)),
    (18, (0, 1, 0)),
    (18, (1, 0, 1)),
    (19, (2, 0, 0)),
    (19, (1, 0, 0)),
    (18, (0, 0, 0)),
    (19, (1, 0, 1)),
    (18, (1, 0, 0)),
)

# faces on which a pentagon's missing k subsequence is entered
# with a clockwise offset
CW_OFFSET_PENT = {
    4: (),
    14: (2, 6),
    24: (1, 5),
    38: (3, 7),
    49: (0, 9),
    58: (4, 8),
    63: (11, 15),
    72: (12, 16),
    83: (10, 19),
    97: (13, 17),
    107: (14, 18),
    117: (),
}

# (base cell, ccw 60 degree rotations) by face and normalized ijk,
# components in [0, 2]
FACE_IJK_BASE_CELLS = {
    (0, (0, 0, 0)): (16, 0),
    (0, (0, 0, 1)): (18, 0),
    (0, (0, 0, 2)): (24, 5),
    (0, (0, 1, 0)): (33, 0),
    (0, (0, 1, 1)): (30, 0),
    (0, (0, 1, 2)): (32, 3),
    (0, (0, 2, 0)): (49, 1),
    (0, (0, 2, 1)): (48, 3),
    (0, (0, 2, 2)): (50, 3),
    (0, (1, 0, 0)): (8, 0),
    (0, (1, 0, 1)): (5, 5),
    (0, (1, 0, 2)): (10, 5),
    (0, (1, 1, 0)): (22, 0),
    (0, (1, 2, 0)): (41, 1),
    (0, (2, 0, 0)): (4, 0),
    (0, (2, 0, 1)): (0, 5),
    (0, (2, 0, 2)): (2, 5),
    (0, (2, 1, 0)): (15, 1),
    (0, (2, 2, 0)): (31, 1),
    (1, (0, 0, 0)): (2, 0),
    (1, (0, 0, 1)): (6, 0),
    (1, (0, 0, 2)): (14, 5),
    (1, (0, 1, 0)): (10, 0),
    (1, (0, 1, 1)): (11, 0),
    (1, (0, 1, 2)): (17, 3),
    (1, (0, 2, 0)): (24, 1),
    (1, (0, 2, 1)): (23, 3),
    (1, (0, 2, 2)): (25, 3),
    (1, (1, 0, 0)): (0, 0),
    (1, (1, 0, 1)): (1, 5),
    (1, (1, 0, 2)): (9, 5),
    (1, (1, 1, 0)): (5, 0),
    (1, (1, 2, 0)): (18, 1),
    (1, (2, 0, 0)): (4, 1),
    (1, (2, 0, 1)): (3, 5),
    (1, (2, 0, 2)): (7, 5),
    (1, (2, 1, 0)): (8, 1),
    (1, (2, 2, 0)): (16, 1),
    (2, (0, 0, 0)): (7, 0),
    (2, (0, 0, 1)): (21, 0),
    (2, (0, 0, 2)): (38, 5),
    (2, (0, 1, 0)): (9, 0),
    (2, (0, 1, 1)): (19, 0),
    (2, (0, 1, 2)): (34, 3),
    (2, (0, 2, 0)): (14, 1),
    (2, (0, 2, 1)): (20, 3),
    (2, (0, 2, 2)): (36, 3),
    (2, (1, 0, 0)): (3, 0),
    (2, (1, 0, 1)): (13, 5),
    (2, (1, 0, 2)): (29, 5),
    (2, (1, 1, 0)): (1, 0),
    (2, (1, 2, 0)): (6, 1),
    (2, (2, 0, 0)): (4, 2),
    (2, (2, 0, 1)): (12, 5),
    (2, (2, 0, 2)): (26, 5),
    (2, (2, 1, 0)): (0, 1),
    (2, (2, 2, 0)): (2, 1),
    (3, (0, 0, 0)): (26, 0),
    (3, (0, 0, 1)): (42, 0),
    (3, (0, 0, 2)): (58, 5),
    (3, (0, 1, 0)): (29, 0),
    (3, (0, 1, 1)): (43, 0),
    (3, (0, 1, 2)): (62, 3),
    (3, (0, 2, 0)): (38, 1),
    (3, (0, 2, 1)): (47, 3),
    (3, (0, 2, 2)): (64, 3),
    (3, (1, 0, 0)): (12, 0),
    (3, (1, 0, 1)): (28, 5),
    (3, (1, 0, 2)): (44, 5),
    (3, (1, 1, 0)): (13, 0),
    (3, (1, 2, 0)): (21, 1),
    (3, (2, 0, 0)): (4, 3),
    (3, (2, 0, 1)): (15, 5),
    (3, (2, 0, 2)): (31, 5),
    (3, (2, 1, 0)): (3, 1),
    (3, (2, 2, 0)): (7, 1),
    (4, (0, 0, 0)): (31, 0),
    (4, (0, 0, 1)): (41, 0),
    (4, (0, 0, 2)): (49, 5),
    (4, (0, 1, 0)): (44, 0),
    (4, (0, 1, 1)): (53, 0),
    (4, (0, 1, 2)): (61, 3),
    (4, (0, 2, 0)): (58, 1),
    (4, (0, 2, 1)): (65, 3),
    (4, (0, 2, 2)): (75, 3),
    (4, (1, 0, 0)): (15, 0),
    (4, (1, 0, 1)): (22, 5),
    (4, (1, 0, 2)): (33, 5),
    (4, (1, 1, 0)): (28, 0),
    (4, (1, 2, 0)): (42, 1),
    (4, (2, 0, 0)): (4, 4),
    (4, (2, 0, 1)): (8, 5),
    (4, (2, 0, 2)): (16, 5),
    (4, (2, 1, 0)): (12, 1),
    (4, (2, 2, 0)): (26, 1),
    (5, (0, 0, 0)): (50, 0),
    (5, (0, 0, 1)): (48, 0),
    (5, (0, 0, 2)): (49, 3),
    (5, (0, 1, 0)): (32, 0),
    (5, (0, 1, 1)): (30, 3),
    (5, (0, 1, 2)): (33, 3),
    (5, (0, 2, 0)): (24, 3),
    (5, (0, 2, 1)): (18, 3),
    (5, (0, 2, 2)): (16, 3),
    (5, (1, 0, 0)): (70, 0),
    (5, (1, 0, 1)): (67, 0),
    (5, (1, 0, 2)): (66, 3),
    (5, (1, 1, 0)): (52, 3),
    (5, (1, 2, 0)): (37, 3),
    (5, (2, 0, 0)): (83, 0),
    (5, (2, 0, 1)): (87, 3),
    (5, (2, 0, 2)): (85, 3),
    (5, (2, 1, 0)): (74, 3),
    (5, (2, 2, 0)): (57, 3),
    (6, (0, 0, 0)): (25, 0),
    (6, (0, 0, 1)): (23, 0),
    (6, (0, 0, 2)): (24, 3),
    (6, (0, 1, 0)): (17, 0),
    (6, (0, 1, 1)): (11, 3),
    (6, (0, 1, 2)): (10, 3),
    (6, (0, 2, 0)): (14, 3),
    (6, (0, 2, 1)): (6, 3),
    (6, (0, 2, 2)): (2, 3),
    (6, (1, 0, 0)): (45, 0),
    (6, (1, 0, 1)): (39, 0),
    (6, (1, 0, 2)): (37, 3),
    (6, (1, 1, 0)): (35, 3),
    (6, (1, 2, 0)): (27, 3),
    (6, (2, 0, 0)): (63, 0),
    (6, (2, 0, 1)): (59, 3),
    (6, (2, 0, 2)): (57, 3),
    (6, (2, 1, 0)): (56, 3),
    (6, (2, 2, 0)): (46, 3),
    (7, (0, 0, 0)): (36, 0),
    (7, (0, 0, 1)): (20, 0),
    (7, (0, 0, 2)): (14, 3),
    (7, (0, 1, 0)): (34, 0),
    (7, (0, 1, 1)): (19, 3),
    (7, (0, 1, 2)): (9, 3),
    (7, (0, 2, 0)): (38, 3),
    (7, (0, 2, 1)): (21, 3),
    (7, (0, 2, 2)): (7, 3),
    (7, (1, 0, 0)): (55, 0),
    (7, (1, 0, 1)): (40, 0),
    (7, (1, 0, 2)): (27, 3),
    (7, (1, 1, 0)): (54, 3),
    (7, (1, 2, 0)): (51, 3),
    (7, (2, 0, 0)): (72, 0),
    (7, (2, 0, 1)): (60, 3),
    (7, (2, 0, 2)): (46, 3),
    (7, (2, 1, 0)): (73, 3),
    (7, (2, 2, 0)): (71, 3),
    (8, (0, 0, 0)): (64, 0),
    (8, (0, 0, 1)): (47, 0),
    (8, (0, 0, 2)): (38, 3),
    (8, (0, 1, 0)): (62, 0),
    (8, (0, 1, 1)): (43, 3),
    (8, (0, 1, 2)): (29, 3),
    (8, (0, 2, 0)): (58, 3),
    (8, (0, 2, 1)): (42, 3),
    (8, (0, 2, 2)): (26, 3),
    (8, (1, 0, 0)): (84, 0),
    (8, (1, 0, 1)): (69, 0),
    (8, (1, 0, 2)): (51, 3),
    (8, (1, 1, 0)): (82, 3),
    (8, (1, 2, 0)): (76, 3),
    (8, (2, 0, 0)): (97, 0),
    (8, (2, 0, 1)): (89, 3),
    (8, (2, 0, 2)): (71, 3),
    (8, (2, 1, 0)): (98, 3),
    (8, (2, 2, 0)): (96, 3),
    (9, (0, 0, 0)): (75, 0),
    (9, (0, 0, 1)): (65, 0),
    (9, (0, 0, 2)): (58, 3),
    (9, (0, 1, 0)): (61, 0),
    (9, (0, 1, 1)): (53, 3),
    (9, (0, 1, 2)): (44, 3),
    (9, (0, 2, 0)): (49, 3),
    (9, (0, 2, 1)): (41, 3),
    (9, (0, 2, 2)): (31, 3),
    (9, (1, 0, 0)): (94, 0),
    (9, (1, 0, 1)): (86, 0),
    (9, (1, 0, 2)): (76, 3),
    (9, (1, 1, 0)): (81, 3),
    (9, (1, 2, 0)): (66, 3),
    (9, (2, 0, 0)): (107, 0),
    (9, (2, 0, 1)): (104, 3),
    (9, (2, 0, 2)): (96, 3),
    (9, (2, 1, 0)): (101, 3),
    (9, (2, 2, 0)): (85, 3),
    (10, (0, 0, 0)): (57, 0),
    (10, (0, 0, 1)): (59, 0),
    (10, (0, 0, 2)): (63, 3),
    (10, (0, 1, 0)): (74, 0),
    (10, (0, 1, 1)): (78, 3),
    (10, (0, 1, 2)): (79, 3),
    (10, (0, 2, 0)): (83, 3),
    (10, (0, 2, 1)): (92, 3),
    (10, (0, 2, 2)): (95, 3),
    (10, (1, 0, 0)): (37, 0),
    (10, (1, 0, 1)): (39, 3),
    (10, (1, 0, 2)): (45, 3),
    (10, (1, 1, 0)): (52, 0),
    (10, (1, 2, 0)): (70, 3),
    (10, (2, 0, 0)): (24, 0),
    (10, (2, 0, 1)): (23, 3),
    (10, (2, 0, 2)): (25, 3),
    (10, (2, 1, 0)): (32, 3),
    (10, (2, 2, 0)): (50, 3),
    (11, (0, 0, 0)): (46, 0),
    (11, (0, 0, 1)): (60, 0),
    (11, (0, 0, 2)): (72, 3),
    (11, (0, 1, 0)): (56, 0),
    (11, (0, 1, 1)): (68, 3),
    (11, (0, 1, 2)): (80, 3),
    (11, (0, 2, 0)): (63, 3),
    (11, (0, 2, 1)): (77, 3),
    (11, (0, 2, 2)): (90, 3),
    (11, (1, 0, 0)): (27, 0),
    (11, (1, 0, 1)): (40, 3),
    (11, (1, 0, 2)): (55, 3),
    (11, (1, 1, 0)): (35, 0),
    (11, (1, 2, 0)): (45, 3),
    (11, (2, 0, 0)): (14, 0),
    (11, (2, 0, 1)): (20, 3),
    (11, (2, 0, 2)): (36, 3),
    (11, (2, 1, 0)): (17, 3),
    (11, (2, 2, 0)): (25, 3),
    (12, (0, 0, 0)): (71, 0),
    (12, (0, 0, 1)): (89, 0),
    (12, (0, 0, 2)): (97, 3),
    (12, (0, 1, 0)): (73, 0),
    (12, (0, 1, 1)): (91, 3),
    (12, (0, 1, 2)): (103, 3),
    (12, (0, 2, 0)): (72, 3),
    (12, (0, 2, 1)): (88, 3),
    (12, (0, 2, 2)): (105, 3),
    (12, (1, 0, 0)): (51, 0),
    (12, (1, 0, 1)): (69, 3),
    (12, (1, 0, 2)): (84, 3),
    (12, (1, 1, 0)): (54, 0),
    (12, (1, 2, 0)): (55, 3),
    (12, (2, 0, 0)): (38, 0),
    (12, (2, 0, 1)): (47, 3),
    (12, (2, 0, 2)): (64, 3),
    (12, (2, 1, 0)): (34, 3),
    (12, (2, 2, 0)): (36, 3),
    (13, (0, 0, 0)): (96, 0),
    (13, (0, 0, 1)): (104, 0),
    (13, (0, 0, 2)): (107, 3),
    (13, (0, 1, 0)): (98, 0),
    (13, (0, 1, 1)): (110, 3),
    (13, (0, 1, 2)): (115, 3),
    (13, (0, 2, 0)): (97, 3),
    (13, (0, 2, 1)): (111, 3),
    (13, (0, 2, 2)): (119, 3),
    (13, (1, 0, 0)): (76, 0),
    (13, (1, 0, 1)): (86, 3),
    (13, (1, 0, 2)): (94, 3),
    (13, (1, 1, 0)): (82, 0),
    (13, (1, 2, 0)): (84, 3),
    (13, (2, 0, 0)): (58, 0),
    (13, (2, 0, 1)): (65, 3),
    (13, (2, 0, 2)): (75, 3),
    (13, (2, 1, 0)): (62, 3),
    (13, (2, 2, 0)): (64, 3),
    (14, (0, 0, 0)): (85, 0),
    (14, (0, 0, 1)): (87, 0),
    (14, (0, 0, 2)): (83, 3),
    (14, (0, 1, 0)): (101, 0),
    (14, (0, 1, 1)): (102, 3),
    (14, (0, 1, 2)): (100, 3),
    (14, (0, 2, 0)): (107, 3),
    (14, (0, 2, 1)): (112, 3),
    (14, (0, 2, 2)): (114, 3),
    (14, (1, 0, 0)): (66, 0),
    (14, (1, 0, 1)): (67, 3),
    (14, (1, 0, 2)): (70, 3),
    (14, (1, 1, 0)): (81, 0),
    (14, (1, 2, 0)): (94, 3),
    (14, (2, 0, 0)): (49, 0),
    (14, (2, 0, 1)): (48, 3),
    (14, (2, 0, 2)): (50, 3),
    (14, (2, 1, 0)): (61, 3),
    (14, (2, 2, 0)): (75, 3),
    (15, (0, 0, 0)): (95, 0),
    (15, (0, 0, 1)): (92, 0),
    (15, (0, 0, 2)): (83, 5),
    (15, (0, 1, 0)): (79, 0),
    (15, (0, 1, 1)): (78, 0),
    (15, (0, 1, 2)): (74, 3),
    (15, (0, 2, 0)): (63, 1),
    (15, (0, 2, 1)): (59, 3),
    (15, (0, 2, 2)): (57, 3),
    (15, (1, 0, 0)): (109, 0),
    (15, (1, 0, 1)): (108, 0),
    (15, (1, 0, 2)): (100, 5),
    (15, (1, 1, 0)): (93, 1),
    (15, (1, 2, 0)): (77, 1),
    (15, (2, 0, 0)): (117, 4),
    (15, (2, 0, 1)): (118, 5),
    (15, (2, 0, 2)): (114, 5),
    (15, (2, 1, 0)): (106, 1),
    (15, (2, 2, 0)): (90, 1),
    (16, (0, 0, 0)): (90, 0),
    (16, (0, 0, 1)): (77, 0),
    (16, (0, 0, 2)): (63, 5),
    (16, (0, 1, 0)): (80, 0),
    (16, (0, 1, 1)): (68, 0),
    (16, (0, 1, 2)): (56, 3),
    (16, (0, 2, 0)): (72, 1),
    (16, (0, 2, 1)): (60, 3),
    (16, (0, 2, 2)): (46, 3),
    (16, (1, 0, 0)): (106, 0),
    (16, (1, 0, 1)): (93, 0),
    (16, (1, 0, 2)): (79, 5),
    (16, (1, 1, 0)): (99, 1),
    (16, (1, 2, 0)): (88, 1),
    (16, (2, 0, 0)): (117, 3),
    (16, (2, 0, 1)): (109, 5),
    (16, (2, 0, 2)): (95, 5),
    (16, (2, 1, 0)): (113, 1),
    (16, (2, 2, 0)): (105, 1),
    (17, (0, 0, 0)): (105, 0),
    (17, (0, 0, 1)): (88, 0),
    (17, (0, 0, 2)): (72, 5),
    (17, (0, 1, 0)): (103, 0),
    (17, (0, 1, 1)): (91, 0),
    (17, (0, 1, 2)): (73, 3),
    (17, (0, 2, 0)): (97, 1),
    (17, (0, 2, 1)): (89, 3),
    (17, (0, 2, 2)): (71, 3),
    (17, (1, 0, 0)): (113, 0),
    (17, (1, 0, 1)): (99, 0),
    (17, (1, 0, 2)): (80, 5),
    (17, (1, 1, 0)): (116, 1),
    (17, (1, 2, 0)): (111, 1),
    (17, (2, 0, 0)): (117, 2),
    (17, (2, 0, 1)): (106, 5),
    (17, (2, 0, 2)): (90, 5),
    (17, (2, 1, 0)): (121, 1),
    (17, (2, 2, 0)): (119, 1),
    (18, (0, 0, 0)): (119, 0),
    (18, (0, 0, 1)): (111, 0),
    (18, (0, 0, 2)): (97, 5),
    (18, (0, 1, 0)): (115, 0),
    (18, (0, 1, 1)): (110, 0),
    (18, (0, 1, 2)): (98, 3),
    (18, (0, 2, 0)): (107, 1),
    (18, (0, 2, 1)): (104, 3),
    (18, (0, 2, 2)): (96, 3),
    (18, (1, 0, 0)): (121, 0),
    (18, (1, 0, 1)): (116, 0),
    (18, (1, 0, 2)): (103, 5),
    (18, (1, 1, 0)): (120, 1),
    (18, (1, 2, 0)): (112, 1),
    (18, (2, 0, 0)): (117, 1),
    (18, (2, 0, 1)): (113, 5),
    (18, (2, 0, 2)): (105, 5),
    (18, (2, 1, 0)): (118, 1),
    (18, (2, 2, 0)): (114, 1),
    (19, (0, 0, 0)): (114, 0),
    (19, (0, 0, 1)): (112, 0),
    (19, (0, 0, 2)): (107, 5),
    (19, (0, 1, 0)): (100, 0),
    (19, (0, 1, 1)): (102, 0),
    (19, (0, 1, 2)): (101, 3),
    (19, (0, 2, 0)): (83, 1),
    (19, (0, 2, 1)): (87, 3),
    (19, (0, 2, 2)): (85, 3),
    (19, (1, 0, 0)): (118, 0),
    (19, (1, 0, 1)): (120, 0),
    (19, (1, 0, 2)): (115, 5),
    (19, (1, 1, 0)): (108, 1),
    (19, (1, 2, 0)): (92, 1),
    (19, (2, 0, 0)): (117, 0),
    (19, (2, 0, 1)): (121, 5),
    (19, (2, 0, 2)): (119, 5),
    (19, (2, 1, 0)): (109, 1),
    (19, (2, 2, 0)): (95, 1),
}

# neighboring base cell in each ijk direction (127 where the
# pentagon's k neighbor is deleted)
BASE_CELL_NEIGHBORS = (
    (0, 1, 5, 2, 4, 3, 8),
    (1, 7, 6, 9, 0, 3, 2),
    (2, 6, 10, 11, 0, 1, 5),
    (3, 13, 1, 7, 4, 12, 0),
    (4, 127, 15, 8, 3, 0, 12),
    (5, 2, 18, 10, 8, 0, 16),
    (6, 14, 11, 17, 1, 9, 2),
    (7, 21, 9, 19, 3, 13, 1),
    (8, 5, 22, 16, 4, 0, 15),
    (9, 19, 14, 20, 1, 7, 6),
    (10, 11, 24, 23, 5, 2, 18),
    (11, 17, 23, 25, 2, 6, 10),
    (12, 28, 13, 26, 4, 15, 3),
    (13, 26, 21, 29, 3, 12, 7),
    (14, 127, 17, 27, 9, 20, 6),
    (15, 22, 28, 31, 4, 8, 12),
    (16, 18, 33, 30, 8, 5, 22),
    (17, 11, 14, 6, 35, 25, 27),
    (18, 24, 30, 32, 5, 10, 16),
    (19, 34, 20, 36, 7, 21, 9),
    (20, 14, 19, 9, 40, 27, 36),
    (21, 38, 19, 34, 13, 29, 7),
    (22, 16, 41, 33, 15, 8, 31),
    (23, 24, 11, 10, 39, 37, 25),
    (24, 127, 32, 37, 10, 23, 18),
    (25, 23, 17, 11, 45, 39, 35),
    (26, 42, 29, 43, 12, 28, 13),
    (27, 40, 35, 46, 14, 20, 17),
    (28, 31, 42, 44, 12, 15, 26),
    (29, 43, 38, 47, 13, 26, 21),
    (30, 32, 48, 50, 16, 18, 33),
    (31, 41, 44, 53, 15, 22, 28),
    (32, 30, 24, 18, 52, 50, 37),
    (33, 30, 49, 48, 22, 16, 41),
    (34, 19, 38, 21, 54, 36, 51),
    (35, 46, 45, 56, 17, 27, 25),
    (36, 20, 34, 19, 55, 40, 54),
    (37, 39, 52, 57, 24, 23, 32),
    (38, 127, 34, 51, 29, 47, 21),
    (39, 37, 25, 23, 59, 57, 45),
    (40, 27, 36, 20, 60, 46, 55),
    (41, 49, 53, 61, 22, 33, 31),
    (42, 58, 43, 62, 28, 44, 26),
    (43, 62, 47, 64, 26, 42, 29),
    (44, 53, 58, 65, 28, 31, 42),
    (45, 39, 35, 25, 63, 59, 56),
    (46, 60, 56, 68, 27, 40, 35),
    (47, 38, 43, 29, 69, 51, 64),
    (48, 49, 30, 33, 67, 66, 50),
    (49, 127, 61, 66, 33, 48, 41),
    (50, 48, 32, 30, 70, 67, 52),
    (51, 69, 54, 71, 38, 47, 34),
    (52, 57, 70, 74, 32, 37, 50),
    (53, 61, 65, 75, 31, 41, 44),
    (54, 71, 55, 73, 34, 51, 36),
    (55, 40, 54, 36, 72, 60, 73),
    (56, 68, 63, 77, 35, 46, 45),
    (57, 59, 74, 78, 37, 39, 52),
    (58, 127, 62, 76, 44, 65, 42),
    (59, 63, 78, 79, 39, 45, 57),
    (60, 72, 68, 80, 40, 55, 46),
    (61, 53, 49, 41, 81, 75, 66),
    (62, 43, 58, 42, 82, 64, 76),
    (63, 127, 56, 45, 79, 59, 77),
    (64, 47, 62, 43, 84, 69, 82),
    (65, 58, 53, 44, 86, 76, 75),
    (66, 67, 81, 85, 49, 48, 61),
    (67, 66, 50, 48, 87, 85, 70),
    (68, 56, 60, 46, 90, 77, 80),
    (69, 51, 64, 47, 89, 71, 84),
    (70, 67, 52, 50, 83, 87, 74),
    (71, 89, 73, 91, 51, 69, 54),
    (72, 127, 73, 55, 80, 60, 88),
    (73, 91, 72, 88, 54, 71, 55),
    (74, 78, 83, 92, 52, 57, 70),
    (75, 65, 61, 53, 94, 86, 81),
    (76, 86, 82, 96, 58, 65, 62),
    (77, 63, 68, 56, 93, 79, 90),
    (78, 74, 59, 57, 95, 92, 79),
    (79, 78, 63, 59, 93, 95, 77),
    (80, 68, 72, 60, 99, 90, 88),
    (81, 85, 94, 101, 61, 66, 75),
    (82, 96, 84, 98, 62, 76, 64),
    (83, 127, 74, 70, 100, 87, 92),
    (84, 69, 82, 64, 97, 89, 98),
    (85, 87, 101, 102, 66, 67, 81),
    (86, 76, 75, 65, 104, 96, 94),
    (87, 83, 102, 100, 67, 70, 85),
    (88, 72, 91, 73, 99, 80, 105),
    (89, 97, 91, 103, 69, 84, 71),
    (90, 77, 80, 68, 106, 93, 99),
    (91, 73, 89, 71, 105, 88, 103),
    (92, 83, 78, 74, 108, 100, 95),
    (93, 79, 90, 77, 109, 95, 106),
    (94, 86, 81, 75, 107, 104, 101),
    (95, 92, 79, 78, 109, 108, 93),
    (96, 104, 98, 110, 76, 86, 82),
    (97, 127, 98, 84, 103, 89, 111),
    (98, 110, 97, 111, 82, 96, 84),
    (99, 80, 105, 88, 106, 90, 113),
    (100, 102, 83, 87, 108, 114, 92),
    (101, 102, 107, 112, 81, 85, 94),
    (102, 101, 87, 85, 114, 112, 100),
    (103, 91, 97, 89, 116, 105, 111),
    (104, 107, 110, 115, 86, 94, 96),
    (105, 88, 103, 91, 113, 99, 116),
    (106, 93, 99, 90, 117, 109, 113),
    (107, 127, 101, 94, 115, 104, 112),
    (108, 100, 95, 92, 118, 114, 109),
    (109, 108, 93, 95, 117, 118, 106),
    (110, 98, 104, 96, 119, 111, 115),
    (111, 97, 110, 98, 116, 103, 119),
    (112, 107, 102, 101, 120, 115, 114),
    (113, 99, 116, 105, 117, 106, 121),
    (114, 112, 100, 102, 118, 120, 108),
    (115, 110, 107, 104, 120, 119, 112),
    (116, 103, 119, 111, 113, 105, 121),
    (117, 127, 109, 118, 113, 121, 106),
    (118, 120, 108, 114, 117, 121, 109),
    (119, 111, 115, 110, 121, 116, 120),
    (120, 115, 114, 112, 121, 119, 118),
    (121, 116, 120, 119, 117, 113, 118),
)

# ccw rotations of the digit frame when crossing into that neighbor
BASE_CELL_NEIGHBOR_60CCW_ROTS = (
    (0, 5, 0, 0, 1, 5, 1),
    (0, 0, 1, 0, 1, 0, 1),
    (0, 0, 0, 0, 0, 5, 0),
    (0, 5, 0, 0, 2, 5, 1),
    (0, 0, 1, 0, 3, 4, 2),
    (0, 0, 1, 0, 1, 0, 1),
    (0, 0, 0, 3, 5, 5, 0),
    (0, 0, 0, 0, 0, 5, 0),
    (0, 5, 0, 0, 0, 5, 1),
    (0, 0, 1, 3, 0, 0, 1),
    (0, 0, 1, 3, 0, 0, 1),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 5, 0, 0, 3, 5, 1),
    (0, 0, 1, 0, 1, 0, 1),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 5, 0, 0, 4, 5, 1),
    (0, 0, 0, 0, 0, 5, 0),
    (0, 3, 3, 3, 3, 0, 3),
    (0, 0, 0, 3, 5, 5, 0),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 3, 3, 3, 0, 3, 0),
    (0, 0, 0, 3, 5, 5, 0),
    (0, 0, 1, 0, 1, 0, 1),
    (0, 3, 3, 3, 0, 3, 0),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 0, 0, 3, 0, 0, 3),
    (0, 0, 0, 0, 0, 5, 0),
    (0, 3, 0, 0, 0, 3, 3),
    (0, 0, 1, 0, 1, 0, 1),
    (0, 0, 1, 3, 0, 0, 1),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 0, 0, 0, 0, 5, 0),
    (0, 3, 3, 3, 3, 0, 3),
    (0, 0, 1, 3, 0, 0, 1),
    (0, 3, 3, 3, 3, 0, 3),
    (0, 0, 3, 0, 3, 0, 3),
    (0, 0, 0, 3, 0, 0, 3),
    (0, 3, 0, 0, 0, 3, 3),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 3, 0, 0, 3, 3, 0),
    (0, 3, 0, 0, 3, 3, 0),
    (0, 0, 0, 3, 5, 5, 0),
    (0, 0, 0, 3, 5, 5, 0),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 0, 1, 3, 0, 0, 1),
    (0, 0, 3, 0, 0, 3, 3),
    (0, 0, 0, 3, 0, 3, 0),
    (0, 3, 3, 3, 0, 3, 0),
    (0, 3, 3, 3, 0, 3, 0),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 0, 0, 3, 0, 0, 3),
    (0, 3, 0, 0, 0, 3, 3),
    (0, 0, 3, 0, 3, 0, 3),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 0, 3, 0, 3, 0, 3),
    (0, 0, 3, 0, 0, 3, 3),
    (0, 3, 3, 3, 0, 0, 3),
    (0, 0, 0, 3, 0, 3, 0),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 3, 3, 3, 3, 3, 0),
    (0, 3, 3, 3, 3, 3, 0),
    (0, 3, 3, 3, 3, 0, 3),
    (0, 3, 3, 3, 3, 0, 3),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 0, 0, 3, 0, 0, 3),
    (0, 3, 3, 3, 0, 3, 0),
    (0, 3, 0, 0, 0, 3, 3),
    (0, 3, 0, 0, 3, 3, 0),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 3, 0, 0, 3, 3, 0),
    (0, 0, 3, 0, 0, 3, 3),
    (0, 0, 0, 3, 0, 3, 0),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 3, 3, 3, 0, 0, 3),
    (0, 3, 3, 3, 0, 0, 3),
    (0, 0, 0, 3, 0, 0, 3),
    (0, 3, 0, 0, 0, 3, 3),
    (0, 0, 0, 3, 0, 5, 0),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 0, 1, 3, 1, 0, 1),
    (0, 0, 1, 3, 1, 0, 1),
    (0, 0, 3, 0, 3, 0, 3),
    (0, 0, 3, 0, 3, 0, 3),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 0, 3, 0, 0, 3, 3),
    (0, 0, 0, 3, 0, 3, 0),
    (0, 3, 0, 0, 3, 3, 0),
    (0, 3, 3, 3, 3, 3, 0),
    (0, 0, 0, 3, 0, 5, 0),
    (0, 3, 3, 3, 3, 3, 0),
    (0, 0, 0, 0, 0, 0, 1),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 0, 0, 3, 0, 5, 0),
    (0, 5, 0, 0, 5, 5, 0),
    (0, 0, 3, 0, 0, 3, 3),
    (0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 3, 0, 3, 0),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 3, 3, 3, 0, 0, 3),
    (0, 5, 0, 0, 5, 5, 0),
    (0, 0, 1, 3, 1, 0, 1),
    (0, 3, 3, 3, 0, 0, 3),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 0, 1, 3, 1, 0, 1),
    (0, 3, 3, 3, 3, 3, 0),
    (0, 0, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, 3, 5, 1),
    (0, 0, 3, 0, 5, 2, 0),
    (0, 5, 0, 0, 5, 5, 0),
    (0, 0, 1, 0, 4, 5, 1),
    (0, 3, 3, 3, 0, 0, 0),
    (0, 0, 0, 3, 0, 5, 0),
    (0, 0, 0, 3, 0, 5, 0),
    (0, 0, 1, 0, 2, 5, 1),
    (0, 0, 0, 0, 0, 0, 1),
    (0, 0, 1, 3, 1, 0, 1),
    (0, 5, 0, 0, 5, 5, 0),
    (0, 0, 1, 0, 3, 4, 2),
    (0, 0, 1, 0, 0, 5, 1),
    (0, 0, 0, 0, 0, 0, 1),
    (0, 5, 0, 0, 5, 5, 0),
    (0, 0, 1, 0, 1, 5, 1),
)

# pentagon appearances whose orientation is degenerate under the
# five-fold symmetry; traversal validation pins their value
TWIN_ENTRIES = ((0, (0, 0, 2)), (1, (0, 0, 2)), (2, (0, 0, 2)), (3, (0, 0, 2)), (4, (0, 0, 2)), (15, (0, 0, 2)), (16, (0, 0, 2)), (17, (0, 0, 2)), (18, (0, 0, 2)), (19, (0, 0, 2)))

# crossings whose rotation was solved against reference grid disks
# rather than by flat-lattice frame composition
FIT_SOLVED = ((0, 4), (3, 4), (4, 2), (4, 3), (4, 4), (4, 5), (4, 6), (6, 1), (8, 4), (9, 2), (10, 2), (12, 4), (14, 2), (14, 3), (14, 4), (14, 5), (14, 6), (15, 4), (17, 2), (18, 1), (20, 1), (21, 1), (23, 1), (24, 2), (24, 3), (24, 4), (24, 5), (24, 6), (27, 4), (29, 2), (32, 2), (33, 2), (34, 2), (37, 4), (38, 2), (38, 3), (38, 4), (38, 5), (38, 6), (41, 1), (42, 1), (44, 2), (45, 4), (47, 1), (48, 1), (49, 2), (49, 3), (49, 4), (49, 5), (49, 6), (51, 4), (55, 4), (56, 2), (58, 2), (58, 3), (58, 4), (58, 5), (58, 6), (59, 1), (60, 1), (61, 2), (62, 2), (63, 2), (63, 3), (63, 4), (63, 5), (63, 6), (65, 1), (66, 4), (70, 4), (72, 2), (72, 3), (72, 4), (72, 5), (72, 6), (73, 2), (74, 2), (76, 4), (77, 1), (79, 2), (80, 2), (83, 2), (83, 3), (83, 4), (83, 5), (83, 6), (84, 4), (87, 1), (88, 1), (89, 1), (92, 1), (94, 4), (97, 2), (97, 3), (97, 4), (97, 5), (97, 6), (98, 2), (100, 2), (101, 2), (103, 2), (104, 1), (106, 4), (107, 2), (107, 3), (107, 4), (107, 5), (107, 6), (109, 4), (111, 1), (112, 1), (113, 4), (115, 2), (117, 2), (117, 3), (117, 4), (117, 5), (117, 6), (118, 4), (121, 4))
