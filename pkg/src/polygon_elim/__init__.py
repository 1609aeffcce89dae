"""Exact elimination engine for point-primitive Suzuki and Ree actions on
thick generalised hexagons and octagons."""

from .arith import Factorization, factorize, p_valuation
from .catalogue import CatalogueCase, Family, enumerate_cases, find_case
from .eliminator import Outcome, Verdict, evaluate_case
from .polygon import PolygonKind, PolygonOrder, point_count, solve_orders

__all__ = [
    "CatalogueCase",
    "Factorization",
    "Family",
    "Outcome",
    "PolygonKind",
    "PolygonOrder",
    "Verdict",
    "enumerate_cases",
    "evaluate_case",
    "factorize",
    "find_case",
    "p_valuation",
    "point_count",
    "solve_orders",
]

__version__ = "0.1.0"
