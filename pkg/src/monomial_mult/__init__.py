"""Multiplier ideals, log canonical thresholds and Newton polyhedra of monomial ideals."""
from .lattice import (
    DimensionError,
    MonomialIdeal,
    ParseError,
    ZeroIdealError,
    contains,
    divides,
    format_ideal,
    ideal_from_json,
    minimalize,
    parse_ideal,
    power,
    product,
)
from .multiplier import floor_ideal, integral_closure, is_trivial, multiplier_ideal
from .oracle import LpVerdict, brute_multiplier, lp_classify
from .polyhedron import (
    Facet,
    NewtonPolyhedron,
    PointClass,
    classify,
    diagonal_intersection,
    newton_polyhedron,
    scale,
)
from .threshold import (
    LctResult,
    extremal_sequence,
    lct,
    lct_diagonal,
    simplicial_witness,
    threshold_search,
)

__version__ = "0.1.0"

__all__ = [
    "floor_ideal",
    "integral_closure",
    "is_trivial",
    "multiplier_ideal",
    "LpVerdict",
    "brute_multiplier",
    "lp_classify",
    "DimensionError",
    "MonomialIdeal",
    "ParseError",
    "ZeroIdealError",
    "contains",
    "divides",
    "format_ideal",
    "ideal_from_json",
    "minimalize",
    "parse_ideal",
    "power",
    "product",
    "Facet",
    "NewtonPolyhedron",
    "PointClass",
    "classify",
    "diagonal_intersection",
    "newton_polyhedron",
    "scale",
    "LctResult",
    "extremal_sequence",
    "lct",
    "lct_diagonal",
    "simplicial_witness",
    "threshold_search",
]
