"""
Differential kernels over (K, δ): verification and leader classification
"""

import logging
from typing import Dict, List, Mapping, Optional

from ..operators.derivation import Derivation
from ..tower.tower import Tower
from ..utils.validators import ValidationError, validate_count
from .gamma import GammaIndex, gamma, linear_before
from .leaders import LeaderReport, classify_entries
from .presentation import (
    Defined,
    IndexedKernel,
    KernelViolation,
    VerificationResult,
    is_generator,
)

logger = logging.getLogger(__name__)


def split_images(derivation) -> tuple:
    """(base images, generator images) of an operator on its own tower"""
    owner = derivation.owner
    images = derivation.images()
    return ({name: images[name] for name in owner.base},
            {name: images[name] for name in owner.gen_names})


class DiffKernel(IndexedKernel[GammaIndex]):
    """
    A differential kernel of length r and width n: entries a[i][ξ] over Γ(r)

    The kernel condition is that ``a[i][ξ] -> a[i][ξ+1]`` (ξ <= r - 1),
    together with δ on K, is a derivation from L_{r-1} into L_r.
    """

    def __init__(self, base: Tower, derivation: Derivation, n: int, r: int,
                 entries: Mapping[GammaIndex, object], letter: str = "a",
                 names: Optional[Mapping[GammaIndex, str]] = None):
        self.n = validate_count(n, "n", minimum=1)
        self.r = validate_count(r, "r")
        self.letter = letter
        expected = set(gamma(r, n))
        if set(entries) != expected:
            missing = sorted(expected - set(entries))
            extra = sorted(set(entries) - expected)
            raise ValidationError(
                f"kernel entries must cover Γ({r}) for n = {n}: "
                f"missing {[str(i) for i in missing]}, unexpected {[str(i) for i in extra]}"
            )
        names = names or {index: index.name(letter) for index in entries}
        super().__init__(base, derivation, entries, names)

    def name_for(self, index: GammaIndex) -> str:
        return index.name(self.letter)

    def with_entries(self, entries: Mapping, r: int, names: Mapping) -> "DiffKernel":
        return DiffKernel(self.base, self.derivation, self.n, r, entries, self.letter, names)

    def column(self, i: int) -> List[GammaIndex]:
        return [index for index in self.entries if index.i == i]

    def shift_derivation(self) -> Derivation:
        """a[i][ξ] -> a[i][ξ+1] on L_{r-1}, δ_K on the base, landing in L_r"""
        owner = self.level_tower(lambda index: index.xi <= self.r - 1)
        base_images, gen_images = split_images(self.derivation)
        for index, entry in self.entries.items():
            if index.xi <= self.r - 1 and is_generator(entry):
                gen_images[self.names[index]] = self.value(index.shifted())
        return Derivation(owner, base_images, gen_images, self.tower)

    def __str__(self) -> str:
        return f"DiffKernel(n={self.n}, r={self.r}) over {self.base}"


def shift_violations(kernel: IndexedKernel, derivation: Derivation, shift, in_domain) -> List[KernelViolation]:
    """
    Derivation conditions of a shift map plus consistency of Defined entries:
    δ(value(ι)) must equal value(shift(ι)) for every Defined ι in the domain
    """
    found = []
    for violation in derivation.violations():
        index = kernel.index_of(violation.generator)
        found.append(KernelViolation(
            index if index is not None else violation.generator, "delta",
            f"extension condition fails ({violation.case}): {violation.lhs} != 0",
            violation.lhs,
        ))
    for index, entry in kernel.entries.items():
        if not isinstance(entry, Defined) or not in_domain(index):
            continue
        lhs = derivation.apply(kernel.value(index))
        expected = kernel.value(shift(index))
        if lhs != expected:
            found.append(KernelViolation(
                index, "delta", f"δ({kernel.names[index]}) = {lhs} but the kernel has {expected}",
                lhs, expected,
            ))
    return found


def kernel_verify(k: DiffKernel) -> VerificationResult:
    """
    Check the kernel condition

    Args:
        k: Presented kernel

    Returns:
        VerificationResult listing every failed condition
    """
    violations = shift_violations(
        k, k.shift_derivation(), GammaIndex.shifted, lambda index: index.xi <= k.r - 1
    )
    for violation in violations:
        logger.info("kernel condition fails: %s", violation)
    return VerificationResult(k, violations)


def classify_leaders(k: DiffKernel) -> LeaderReport:
    """Leader kinds per index; minimality runs over ξ within each variable"""
    return classify_entries(k.entries, linear_before)


def leader_summary(report: LeaderReport) -> Dict[str, List[str]]:
    return {
        "minimal-separable": [str(i) for i in sorted(report.minimal_separable())],
        "inseparable": [str(i) for i in sorted(report.inseparable())],
    }
