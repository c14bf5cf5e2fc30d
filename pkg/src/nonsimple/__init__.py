"""Exact tests for non-simplicity of polarized abelian varieties."""

from .ring import GaussianRational, Poly, parse_poly, var, const
from .exterior import MultiVector, wedge, pfaffian
from .abelian import NSClass, PeriodMatrix, PolarizationType, PolarizedVariety
from .criterion import check_class, condition_a, condition_b, generate_system, split_check
from .solve import find_split, find_subvariety, linear_solve

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "Poly",
    "parse_poly",
    "var",
    "const",
    "MultiVector",
    "wedge",
    "pfaffian",
    "NSClass",
    "PeriodMatrix",
    "PolarizationType",
    "PolarizedVariety",
    "check_class",
    "condition_a",
    "condition_b",
    "generate_system",
    "split_check",
    "find_split",
    "find_subvariety",
    "linear_solve",
]
