"""
Plain, a- and b-leaders of a dd-kernel
"""

import logging
from dataclasses import dataclass, field
from typing import List, Set, Tuple

from ..kernels.gamma import Gamma2Index, linear_before, product_before
from ..kernels.leaders import LeaderEntry, LeaderKind, LeaderReport, classify_entries, entry_kind
from .dd_kernel import DDKernel

logger = logging.getLogger(__name__)


@dataclass
class DDLeaderReport:
    """
    Leaders of a dd-kernel

    ``plain`` uses the product order on (ξ, u) for minimality; ``a_side``
    (u <= s - 1) and ``b_side`` (u >= 1) use ξ within each column (u, i).
    ``b_transported`` lists b-indices whose kind was carried over from the
    a-side through σ because their own presentation reaches into u = 0.
    """

    plain: LeaderReport
    a_side: LeaderReport
    b_side: LeaderReport
    b_transported: Set[Gamma2Index] = field(default_factory=set)
    disagreements: List[Tuple[Gamma2Index, LeaderKind, LeaderKind]] = field(default_factory=list)


def _b_closed(k: DDKernel, index: Gamma2Index) -> bool:
    for symbol in k.entries[index].symbols():
        other = k.index_of(symbol)
        if other is not None and other.u == 0:
            return False
    return True


def dd_classify(k: DDKernel) -> DDLeaderReport:
    """
    Classify every index of ``k`` three ways

    Args:
        k: Valid dd-kernel

    Returns:
        DDLeaderReport
    """
    plain = classify_entries(k.entries, product_before)
    a_indices = [index for index in k.entries if k.in_a(index)]
    a_side = classify_entries(k.entries, linear_before, a_indices)

    transported = set()
    disagreements = []
    b_kinds = {}
    for index in k.entries:
        if not k.in_b(index):
            continue
        source = a_side.kind(Gamma2Index(index.xi, index.u - 1, index.i))
        if _b_closed(k, index):
            own = entry_kind(k.entries[index])
            if own is not source:
                disagreements.append((index, own, source))
                logger.info("b-leader tag at %s is %s but σ carries %s", index, own.value, source.value)
            b_kinds[index] = own
        else:
            transported.add(index)
            b_kinds[index] = source

    b_side = LeaderReport()
    separable = [index for index, kind in b_kinds.items() if kind is LeaderKind.SEPARABLE]
    for index in sorted(b_kinds):
        kind = b_kinds[index]
        minimal = kind is LeaderKind.SEPARABLE and not any(linear_before(o, index) for o in separable)
        b_side.entries[index] = LeaderEntry(index, kind, minimal)
    return DDLeaderReport(plain, a_side, b_side, transported, disagreements)
