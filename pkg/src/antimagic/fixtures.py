"""Gold labeling matrices transcribed from the printed appendices.

Each fixture lists the printed blocks per column group j = 1..r. For the
double-star products a block is a (head, mid, tail) triple: head belongs to
the copy on c_1c_2, mid to the copies on c_1 v_i, tail to those on c_2 v_i.

``top`` is the label on the hub side of each copy edge (hub row of the
matrix) and ``side`` the label on the other endpoint (the diagonal block).
"""

from __future__ import annotations

# S_{4,5} ◇ K̄_4
APPENDIX_A = {
    "k1": 4, "k2": 5, "r": 4,
    "base": (1, (2, 3, 4, 5), (6, 7, 8, 9, 10)),
    "top": (
        (20, (19, 18, 17, 16), (15, 14, 13, 12, 11)),
        (31, (32, 33, 34, 35), (36, 37, 38, 39, 40)),
        (42, (44, 46, 48, 50), (52, 54, 56, 58, 60)),
        (80, (79, 78, 77, 76), (75, 74, 73, 72, 71)),
    ),
    "side": (  # B_4, B_3, B_2, B_1
        (81, (82, 83, 84, 85), (86, 87, 88, 89, 90)),
        (70, (69, 68, 67, 66), (65, 64, 63, 62, 61)),
        (59, (57, 55, 53, 51), (49, 47, 45, 43, 41)),
        (21, (22, 23, 24, 25), (26, 27, 28, 29, 30)),
    ),
}

# S_7 ◇ 5K_2
APPENDIX_B = {
    "k": 7, "r": 5,
    "base": (1, 2, 3, 4, 5, 6, 7),
    "top1": (  # a_1 .. a_5
        (8, 9, 10, 11, 12, 13, 14),
        (21, 20, 19, 18, 17, 16, 15),
        (22, 23, 24, 25, 26, 27, 28),
        (35, 34, 33, 32, 31, 30, 29),
        (36, 37, 38, 39, 40, 41, 42),
    ),
    "side1": (  # A_5 .. A_1
        (111, 109, 107, 105, 103, 101, 99),
        (85, 87, 89, 91, 93, 95, 97),
        (83, 81, 79, 77, 75, 73, 71),
        (57, 59, 61, 63, 65, 67, 69),
        (55, 53, 51, 49, 47, 45, 43),
    ),
    "top2": (  # b_5 .. b_1
        (112, 110, 108, 106, 104, 102, 100),
        (86, 88, 90, 92, 94, 96, 98),
        (84, 82, 80, 78, 76, 74, 72),
        (58, 60, 62, 64, 66, 68, 70),
        (56, 54, 52, 50, 48, 46, 44),
    ),
    "side2": (  # B_1 .. B_5
        (113, 114, 115, 116, 117, 118, 119),
        (126, 125, 124, 123, 122, 121, 120),
        (127, 128, 129, 130, 131, 132, 133),
        (140, 139, 138, 137, 136, 135, 134),
        (141, 142, 143, 144, 145, 146, 147),
    ),
    "pair": (  # B_6 .. B_10
        (148, 149, 150, 151, 152, 153, 154),
        (161, 160, 159, 158, 157, 156, 155),
        (162, 163, 164, 165, 166, 167, 168),
        (175, 174, 173, 172, 171, 170, 169),
        (176, 177, 178, 179, 180, 181, 182),
    ),
}

# S_{3,4} ◇ 6K_2
APPENDIX_C = {
    "k1": 3, "k2": 4, "r": 6,
    "base": (1, (2, 3, 4), (5, 6, 7, 8)),
    "top1": (  # a_1 .. a_6
        (16, (15, 14, 13), (12, 11, 10, 9)),
        (24, (23, 22, 21), (20, 19, 18, 17)),
        (25, (26, 27, 28), (29, 30, 31, 32)),
        (40, (39, 38, 37), (36, 35, 34, 33)),
        (41, (42, 43, 44), (45, 46, 47, 48)),
        (57, (59, 61, 63), (65, 67, 69, 71)),
    ),
    "side1": (  # A_6 .. A_1
        (121, (123, 125, 127), (129, 131, 133, 135)),
        (137, (139, 141, 143), (145, 147, 149, 151)),
        (119, (117, 115, 113), (111, 109, 107, 105)),
        (89, (91, 93, 95), (97, 99, 101, 103)),
        (87, (85, 83, 81), (79, 77, 75, 73)),
        (56, (55, 54, 53), (52, 51, 50, 49)),
    ),
    "top2": (  # b_6 .. b_1
        (138, (140, 142, 144), (146, 148, 150, 152)),
        (122, (124, 126, 128), (130, 132, 134, 136)),
        (120, (118, 116, 114), (112, 110, 108, 106)),
        (90, (92, 94, 96), (98, 100, 102, 104)),
        (88, (86, 84, 82), (80, 78, 76, 74)),
        (58, (60, 62, 64), (66, 68, 70, 72)),
    ),
    "side2": (  # B_1 .. B_6
        (160, (159, 158, 157), (156, 155, 154, 153)),
        (168, (167, 166, 165), (164, 163, 162, 161)),
        (169, (170, 171, 172), (173, 174, 175, 176)),
        (184, (183, 182, 181), (180, 179, 178, 177)),
        (185, (186, 187, 188), (189, 190, 191, 192)),
        (200, (199, 198, 197), (196, 195, 194, 193)),
    ),
    "pair": (  # B_7 .. B_12
        (208, 207, 206, 205, 204, 203, 202, 201),
        (216, 215, 214, 213, 212, 211, 210, 209),
        (217, 218, 219, 220, 221, 222, 223, 224),
        (232, 231, 230, 229, 228, 227, 226, 225),
        (233, 234, 235, 236, 237, 238, 239, 240),
        (248, 247, 246, 245, 244, 243, 242, 241),
    ),
}

# row sums printed with each example, by vertex class
PRINTED_ROW_SUMS = {
    "A": {"c1": 890, "c2": 1172, "v": 232, "u": 101},
    "B": {"c": 3633, "v": 1039, "u1": 267, "u2": 373},
    "C": {"c1": 3316, "c2": 5088, "v": 1676, "u1": 345, "u2": 506},
}
