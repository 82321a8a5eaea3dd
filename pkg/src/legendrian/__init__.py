"""Legendrian polygons in RP^3 and co-oriented piecewise circular curves.

Exact rational arithmetic throughout; floats appear only in rendering.
"""

from .circles import Circle, ContactElement, LineOrInfinity, MobiusMatrix
from .core import Lagrangian, maslov_index, omega
from .flags import OrientedFlag, flags_to_polygon, polygon_to_flags, triple_positive, tuple_positive
from .polygon import LegendrianPolygon, P_minus, P_plus, Transversality, transversality_class

__version__ = "0.1.0"

__all__ = [
    "Circle",
    "ContactElement",
    "Lagrangian",
    "LegendrianPolygon",
    "LineOrInfinity",
    "MobiusMatrix",
    "OrientedFlag",
    "P_minus",
    "P_plus",
    "Transversality",
    "flags_to_polygon",
    "maslov_index",
    "omega",
    "polygon_to_flags",
    "transversality_class",
    "triple_positive",
    "tuple_positive",
]
