"""
Differential-difference kernels over (K, δ, σ)
"""

import logging
from typing import List, Mapping, Optional

from ..kernels.diff_kernel import shift_violations, split_images
from ..kernels.gamma import Gamma2Index, gamma2
from ..kernels.presentation import (
    Defined,
    IndexedKernel,
    KernelViolation,
    VerificationResult,
    closure_violations,
    is_generator,
)
from ..operators.commutation import CommutationViolation, commutation_check
from ..operators.derivation import Derivation
from ..operators.endomorphism import Endomorphism
from ..tower.tower import Tower
from ..utils.validators import ValidationError, validate_count

logger = logging.getLogger(__name__)


class DDKernel(IndexedKernel[Gamma2Index]):
    """
    A dd-kernel of length (r, s) and width n: entries a[i][ξ][u] over Γ(r, s)

    Conditions: ``a[i][ξ][u] -> a[i][ξ+1][u]`` with δ on K is a derivation
    L_{(r-1,s)} -> L_{(r,s)}, and ``a[i][ξ][u] -> a[i][ξ][u+1]`` with σ on K is
    a field homomorphism L_{(r,s-1)} -> L_{(r,s)}.
    """

    def __init__(self, base: Tower, derivation: Derivation, endomorphism: Endomorphism,
                 n: int, r: int, s: int, entries: Mapping[Gamma2Index, object],
                 letter: str = "a", names: Optional[Mapping[Gamma2Index, str]] = None):
        self.n = validate_count(n, "n", minimum=1)
        self.r = validate_count(r, "r")
        self.s = validate_count(s, "s")
        self.letter = letter
        if endomorphism.owner != base:
            raise ValidationError(f"endomorphism is defined on {endomorphism.owner}, not on {base}")
        self.endomorphism = endomorphism
        expected = set(gamma2(r, s, n))
        if set(entries) != expected:
            missing = sorted(expected - set(entries))
            extra = sorted(set(entries) - expected)
            raise ValidationError(
                f"dd-kernel entries must cover Γ({r},{s}) for n = {n}: "
                f"missing {[str(i) for i in missing]}, unexpected {[str(i) for i in extra]}"
            )
        names = names or {index: index.name(letter) for index in entries}
        super().__init__(base, derivation, entries, names)

    def name_for(self, index: Gamma2Index) -> str:
        return index.name(self.letter)

    def with_entries(self, entries: Mapping, r: int, s: int, names: Mapping) -> "DDKernel":
        return DDKernel(self.base, self.derivation, self.endomorphism, self.n, r, s,
                        entries, self.letter, names)

    def column(self, u: int, i: int) -> List[Gamma2Index]:
        """Indices with fixed (u, i), increasing in ξ"""
        return [index for index in self.entries if index.u == u and index.i == i]

    def variable(self, i: int) -> List[Gamma2Index]:
        return [index for index in self.entries if index.i == i]

    def in_a(self, index: Gamma2Index) -> bool:
        return index.u <= self.s - 1

    def in_b(self, index: Gamma2Index) -> bool:
        return index.u >= 1

    def a_closure(self) -> List[KernelViolation]:
        """Entries of the a-part whose presentation reaches into u = s"""
        return closure_violations(self, self.in_a, "σ",
                                  [index for index in self.entries if self.in_a(index)])

    def delta_shift(self) -> Derivation:
        owner = self.level_tower(lambda index: index.xi <= self.r - 1)
        base_images, gen_images = split_images(self.derivation)
        for index, entry in self.entries.items():
            if index.xi <= self.r - 1 and is_generator(entry):
                gen_images[self.names[index]] = self.value(index.shifted())
        return Derivation(owner, base_images, gen_images, self.tower)

    def sigma_shift(self) -> Optional[Endomorphism]:
        """The u-shift on L_{(r,s-1)}; None when s = 0 or the a-part is not closed"""
        if self.s == 0 or self.a_closure():
            return None
        owner = self.level_tower(self.in_a)
        base_images, gen_images = split_images(self.endomorphism)
        for index, entry in self.entries.items():
            if self.in_a(index) and is_generator(entry):
                gen_images[self.names[index]] = self.value(index.sigma_shifted())
        return Endomorphism(owner, self.tower, base_images, gen_images)

    def __str__(self) -> str:
        return f"DDKernel(n={self.n}, r={self.r}, s={self.s}) over {self.base}"


def sigma_violations(k: IndexedKernel, sigma: Endomorphism, shift, in_domain) -> List[KernelViolation]:
    """Endomorphism conditions of a shift map plus consistency of Defined entries"""
    found = []
    for violation in sigma.violations():
        index = k.index_of(violation.generator)
        found.append(KernelViolation(
            index if index is not None else violation.generator, "sigma",
            violation.reason, violation.lhs,
        ))
    for index, entry in k.entries.items():
        if not isinstance(entry, Defined) or not in_domain(index):
            continue
        lhs = sigma.apply(k.value(index))
        expected = k.value(shift(index))
        if lhs != expected:
            found.append(KernelViolation(
                index, "sigma", f"σ({k.names[index]}) = {lhs} but the kernel has {expected}",
                lhs, expected,
            ))
    return found


def dd_verify(k: DDKernel) -> VerificationResult:
    """
    Check both shift maps

    Returns:
        VerificationResult whose violations name the index and the operator
        (``delta``, ``sigma`` or ``structure``)
    """
    violations = shift_violations(
        k, k.delta_shift(), Gamma2Index.shifted, lambda index: index.xi <= k.r - 1
    )
    if k.s:
        closure = k.a_closure()
        if closure:
            violations.extend(closure)
        else:
            violations.extend(sigma_violations(k, k.sigma_shift(), Gamma2Index.sigma_shifted, k.in_a))
    for violation in violations:
        logger.info("dd-kernel condition fails: %s", violation)
    return VerificationResult(k, violations)


def dd_commutation(k: DDKernel) -> List[CommutationViolation]:
    """δσ against σδ on every symbol where both composites are defined"""
    sigma = k.sigma_shift()
    if sigma is None:
        return []
    return commutation_check(k.delta_shift(), sigma)
