"""
Differential-difference kernels
"""

from .classify import DDLeaderReport, dd_classify
from .dd_kernel import DDKernel, dd_commutation, dd_verify
from .difference import (
    MET,
    MET_WITH_EQUALITY,
    VIOLATED,
    DifferencePresentation,
    DifferenceReport,
    difference_leader_classify,
    difference_verify,
)
from .hypotheses import DDHypothesisReport, Verdict, certify_separable, dd_hypothesis_check
from .prolong import Linearization, check_locality, dd_prolong_delta, linearize, prolongation_bound
from .realize import HypothesisData, Realization, dd_realize, realize_with_cases

__all__ = [
    "DDHypothesisReport",
    "DDKernel",
    "DDLeaderReport",
    "DifferencePresentation",
    "DifferenceReport",
    "HypothesisData",
    "Linearization",
    "MET",
    "MET_WITH_EQUALITY",
    "Realization",
    "VIOLATED",
    "Verdict",
    "certify_separable",
    "check_locality",
    "dd_classify",
    "dd_commutation",
    "dd_hypothesis_check",
    "dd_prolong_delta",
    "dd_realize",
    "dd_verify",
    "difference_leader_classify",
    "difference_verify",
    "linearize",
    "prolongation_bound",
    "realize_with_cases",
]
