"""
Curves, function fields and places
"""

from .model import CurveKind, CurveModel, genus, load_curve_spec
from .function_field import FunctionFieldElement
from .places import (
    AT_INFINITY,
    Branch,
    Chain,
    ChainKind,
    Place,
    candidate_places,
    infinite_place,
    order_at,
    places_over,
    ramification_index,
    ramified_places,
    random_rational_places,
    rational_places,
)

__all__ = [
    "CurveKind",
    "CurveModel",
    "genus",
    "load_curve_spec",
    "FunctionFieldElement",
    "AT_INFINITY",
    "Branch",
    "Chain",
    "ChainKind",
    "Place",
    "candidate_places",
    "infinite_place",
    "order_at",
    "places_over",
    "ramification_index",
    "ramified_places",
    "random_rational_places",
    "rational_places",
]
