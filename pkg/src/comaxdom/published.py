"""Printed values used as reference data by the verification commands.

Zero lists are stored as printed (one representative per conjugate pair)
and expanded by ``expand_pairs``.
"""

COEFFS_Z32 = (
    0, 2, 33, 256, 1240, 4200, 10556, 20384, 30888, 37180,
    35750, 27456, 16744, 8008, 2940, 800, 153, 18, 1,
)

COEFFS_Z15 = (
    0, 8, 84, 429, 1346, 2997, 5004, 6435, 6435, 5005,
    3003, 1365, 455, 105, 15, 1,
)

# (re, im) with im >= 0; im > 0 stands for the pair re +- im i
ZEROS_Z32 = (
    (0.0, 0.0),
    (-0.495409, 0.0),
    (-4.46004, 2.50073),
    (-1.16758, 2.27659),
    (-0.606709, 1.2419),
    (-0.523464, 0.773364),
    (-0.50421, 0.514706),
    (-0.498372, 0.342698),
    (-0.496332, 0.211938),
    (-0.495595, 0.10164),
)

# printed after the n = 15 example, 21 values
ZEROS_PQ_LIST = (
    (0.0, 0.0),
    (-2.30127, 0.242051),
    (-2.11029, 0.681178),
    (-1.77132, 1.00249),
    (-1.34121, 1.16435),
    (-0.941712, 0.680334),
    (-0.877278, 1.1393),
    (-0.491186, 0.911887),
    (-0.365031, 0.729321),
    (-0.218239, 0.15275),
    (-0.0824722, 0.489912),
)

SPECIMEN_LOG_CONCAVE = (3, 8, 11, 13, 15, 17, 19, 13, 1)
SPECIMEN_UNIMODAL_NOT_LC = (1, 3, 4, 5, 2, 1)
SPECIMEN_TWO_OSCILLATIONS = (1, 7, 2020, 1990, 2024, 2000)


def expand_pairs(pairs) -> list[complex]:
    out = []
    for re, im in pairs:
        out.append(complex(re, im))
        if im:
            out.append(complex(re, -im))
    return out
