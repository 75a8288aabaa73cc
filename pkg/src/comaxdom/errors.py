class ShapeError(ValueError):
    """n does not have the shape a closed form or method requires."""


class OracleSizeError(ValueError):
    """Graph is too large for exhaustive subset enumeration."""


class ClassCountError(ValueError):
    """Too many divisor classes for the blow-up subset sum."""
