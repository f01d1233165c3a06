"""
Standalone extension constructions
"""

from .perfect import PerfectExtension, PerfectExtensionPlan, diffperfect_truncated, r_map_table
from .preimage import (
    ALG,
    TRANS,
    VALUE,
    PlanStep,
    PreimageExtension,
    SurjectivizationPlan,
    adjoin_sigma_preimage,
)

__all__ = [
    "ALG",
    "PerfectExtension",
    "PerfectExtensionPlan",
    "PlanStep",
    "PreimageExtension",
    "SurjectivizationPlan",
    "TRANS",
    "VALUE",
    "adjoin_sigma_preimage",
    "diffperfect_truncated",
    "r_map_table",
]
