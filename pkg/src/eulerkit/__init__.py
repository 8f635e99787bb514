"""Exact arithmetic for second-order Eulerian polynomials and their combinatorics."""

from .exactpoly import ParseError, Polynomial, hessenberg_det, parse_poly, real_root_count
from .grammar import Grammar, parse_rules
from .identities import CheckReport, run_all, run_check
from .permstats import BoundError
from .sequences import FAMILIES, family_value, second_eulerian

__version__ = "0.1.0"

__all__ = [
    "BoundError",
    "CheckReport",
    "FAMILIES",
    "Grammar",
    "ParseError",
    "Polynomial",
    "family_value",
    "hessenberg_det",
    "parse_poly",
    "parse_rules",
    "real_root_count",
    "run_all",
    "run_check",
    "second_eulerian",
]
