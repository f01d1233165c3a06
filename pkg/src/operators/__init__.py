"""
Derivations, difference endomorphisms and their interaction
"""

from .commutation import CommutationViolation, DifferenceDifferentialField, commutation_check, r_map
from .derivation import (
    Derivation,
    DerivationViolation,
    derivation_apply,
    derivation_define,
    derivation_extend_forced,
)
from .endomorphism import (
    Endomorphism,
    EndomorphismViolation,
    endo_apply,
    endo_define,
    evaluate_poly,
)

__all__ = [
    "CommutationViolation",
    "Derivation",
    "DerivationViolation",
    "DifferenceDifferentialField",
    "Endomorphism",
    "EndomorphismViolation",
    "commutation_check",
    "derivation_apply",
    "derivation_define",
    "derivation_extend_forced",
    "endo_apply",
    "endo_define",
    "evaluate_poly",
    "r_map",
]
