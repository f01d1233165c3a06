"""
Document language: parsing, canonical printing and building
"""

from .ast import SpecDocument
from .builder import BuiltDocument, build_document, expr_to_element, expr_to_minpoly
from .parser import parse_expression, parse_spec
from .printer import print_expr, print_spec

__all__ = [
    "BuiltDocument",
    "SpecDocument",
    "build_document",
    "expr_to_element",
    "expr_to_minpoly",
    "parse_expression",
    "parse_spec",
    "print_expr",
    "print_spec",
]
