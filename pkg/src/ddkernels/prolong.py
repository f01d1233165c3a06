"""
δ-direction prolongation of dd-kernels and linearization to s = 1
"""

import logging
from dataclasses import dataclass
from typing import Dict

from ..kernels.gamma import Gamma2Index
from ..kernels.presentation import Defined
from ..kernels.prolong import extend_by_derivation
from ..utils.errors import HypothesisViolation, KernelError
from ..utils.validators import ValidationError, validate_count
from .classify import dd_classify
from .dd_kernel import DDKernel, dd_verify

logger = logging.getLogger(__name__)

LINEAR_COPY_LETTER = "lin"


def prolongation_bound(n: int, s: int, M: int) -> int:
    """Smallest r for which δ-prolongation is available"""
    return (n * s + 1) * (M + 1)


def check_locality(k: DDKernel, M: int) -> None:
    """
    Minimal-separable and inseparable leaders and a-leaders must sit in L_{(M,s)}

    Raises:
        HypothesisViolation: Naming the first misplaced leader
    """
    report = dd_classify(k)
    groups = [
        ("minimal-separable leader", report.plain.minimal_separable()),
        ("inseparable leader", report.plain.inseparable()),
        ("minimal-separable a-leader", report.a_side.minimal_separable()),
        ("inseparable a-leader", report.a_side.inseparable()),
    ]
    for label, indices in groups:
        for index in sorted(indices):
            if index.xi > M:
                raise HypothesisViolation(f"{label} outside L_(M,s) for M = {M}", str(index))


def dd_prolong_delta(k: DDKernel, steps: int, M: int) -> DDKernel:
    """
    Extend a dd-kernel by ``steps`` derivative orders, keeping s

    Every new entry is δ of the entry below it: fresh transcendentals over
    transcendental entries (σ then maps new generics to new generics) and
    forced values over separable ones.

    Args:
        k: Valid dd-kernel
        steps: Number of new levels
        M: Locality bound for leaders

    Returns:
        The prolonged dd-kernel, re-verified

    Raises:
        HypothesisViolation: If r < (ns+1)(M+1) or a leader sits above M
        KernelError: If the result fails verification
    """
    steps = validate_count(steps, "steps")
    M = validate_count(M, "M")
    if not steps:
        return k
    bound = prolongation_bound(k.n, k.s, M)
    if k.r < bound:
        raise HypothesisViolation(f"r = {k.r} is below (ns+1)(M+1) = {bound}", "r")
    check_locality(k, M)

    def too_high(index):
        return HypothesisViolation("inseparable leader at the top level", str(index))

    kernel = k
    for _ in range(steps):
        top = kernel.r
        pairs = [
            (Gamma2Index(top, u, i), Gamma2Index(top + 1, u, i))
            for u in range(kernel.s + 1)
            for i in range(1, kernel.n + 1)
        ]
        entries, names = extend_by_derivation(kernel, pairs, Gamma2Index.shifted, kernel.name_for, too_high)
        kernel = kernel.with_entries(entries, top + 1, kernel.s, names)
        logger.info("prolonged dd-kernel to (%d, %d); σ maps new generics to new generics",
                    kernel.r, kernel.s)
    result = dd_verify(kernel)
    if not result.ok:
        raise KernelError("δ-prolonged dd-kernel fails verification", result.violations)
    return kernel


@dataclass
class Linearization:
    """
    A width-ns kernel of length (r, 1) over the same tower

    ``relabel`` maps every linear index to the original index it presents.
    """

    kernel: DDKernel
    relabel: Dict[Gamma2Index, Gamma2Index]
    n: int
    s: int

    def original(self, index: Gamma2Index) -> Gamma2Index:
        return self.relabel[index]

    def linear(self, index: Gamma2Index) -> Gamma2Index:
        """The linear index carrying an original entry"""
        if index.u <= self.s - 1:
            return Gamma2Index(index.xi, 0, index.u * self.n + index.i)
        return Gamma2Index(index.xi, 1, (self.s - 1) * self.n + index.i)

    def is_copy(self, index: Gamma2Index) -> bool:
        """Linear entries that repeat another linear entry as a Defined value"""
        return index.u == 1 and self.relabel[index].u <= self.s - 1


def linearize(k: DDKernel) -> Linearization:
    """
    Re-index a dd-kernel of length (r, s) as one of length (r, 1) in n·s variables

    Variable u·n + i of the new kernel is a[i][·][u]; its σ-image is
    a[i][·][u+1], which is a Defined copy of variable (u+1)·n + i unless u + 1 = s.

    Raises:
        ValidationError: If s = 0
    """
    if k.s < 1:
        raise ValidationError("linearization needs s >= 1")
    n, s = k.n, k.s
    width = n * s
    entries = {}
    names = {}
    relabel = {}
    for xi in range(k.r + 1):
        for u_lin in (0, 1):
            for i_lin in range(1, width + 1):
                new = Gamma2Index(xi, u_lin, i_lin)
                old = Gamma2Index(xi, u_lin + (i_lin - 1) // n, (i_lin - 1) % n + 1)
                relabel[new] = old
                if u_lin == 1 and old.u <= s - 1:
                    entries[new] = Defined(k.value(old))
                    names[new] = new.name(LINEAR_COPY_LETTER)
                else:
                    entries[new] = k.entries[old]
                    names[new] = k.names[old]
    kernel = DDKernel(k.base, k.derivation, k.endomorphism, width, k.r, 1, entries, k.letter, names)
    logger.info("linearized (%d, %d) kernel in %d variables to width %d", k.r, k.s, n, width)
    return Linearization(kernel, relabel, n, s)
