"""Domination polynomials of co-maximal graphs of Z_n.

Exact integer polynomials throughout; floating point only appears in the
root solver.
"""

from .domination import DominationResult, comaximal_domination
from .errors import ClassCountError, OracleSizeError, ShapeError
from .polynomial import IntPoly

__all__ = [
    "ClassCountError",
    "DominationResult",
    "IntPoly",
    "OracleSizeError",
    "ShapeError",
    "comaximal_domination",
]

__version__ = "0.1.0"
