"""
Differential kernels
"""

from .diff_kernel import DiffKernel, classify_leaders, kernel_verify, leader_summary
from .gamma import GammaIndex, Gamma2Index, gamma, gamma2, linear_before, parse_index, product_before
from .leaders import LeaderEntry, LeaderKind, LeaderReport, classify_entries, entry_kind
from .presentation import (
    Algebraic,
    Defined,
    Entry,
    IndexedKernel,
    KernelViolation,
    Transcendental,
    VerificationResult,
)
from .prolong import ColumnFinding, FinitenessReport, extend_by_derivation, finiteness_probe, kernel_prolong

__all__ = [
    "Algebraic",
    "ColumnFinding",
    "Defined",
    "DiffKernel",
    "Entry",
    "FinitenessReport",
    "Gamma2Index",
    "GammaIndex",
    "IndexedKernel",
    "KernelViolation",
    "LeaderEntry",
    "LeaderKind",
    "LeaderReport",
    "Transcendental",
    "VerificationResult",
    "classify_entries",
    "classify_leaders",
    "entry_kind",
    "extend_by_derivation",
    "finiteness_probe",
    "gamma",
    "gamma2",
    "kernel_prolong",
    "kernel_verify",
    "leader_summary",
    "linear_before",
    "parse_index",
    "product_before",
]
