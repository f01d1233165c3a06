"""
Presented field-extension towers and their elements
"""

from .element import Element, normal_form
from .pth_power import is_pth_power
from .tower import GenSpec, Tower, algebraic, tower_extend
from .upoly import ElementPoly


def invert(e: Element) -> Element:
    """Inverse of a nonzero element"""
    return e.inverse()


__all__ = [
    "Element",
    "ElementPoly",
    "GenSpec",
    "Tower",
    "algebraic",
    "invert",
    "is_pth_power",
    "normal_form",
    "tower_extend",
]
