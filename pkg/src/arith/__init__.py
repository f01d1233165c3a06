"""
Exact coefficient and polynomial arithmetic
"""

from .field import BaseCoeff, BaseField
from .mpoly import MPoly, univariate_gcd
from .ratexpr import RatExpr, coeff_map_apply, formal_partial, poly_arith

__all__ = [
    "BaseCoeff",
    "BaseField",
    "MPoly",
    "RatExpr",
    "coeff_map_apply",
    "formal_partial",
    "poly_arith",
    "univariate_gcd",
]
