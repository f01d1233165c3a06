"""
Difference presentations K(a)_σ truncated at finite depth, and the leader-depth bound
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from ..kernels.diff_kernel import split_images
from ..kernels.gamma import GammaIndex, gamma, linear_before
from ..kernels.leaders import LeaderReport, classify_entries
from ..kernels.presentation import (
    Algebraic,
    IndexedKernel,
    KernelViolation,
    VerificationResult,
    is_generator,
)
from ..operators.endomorphism import Endomorphism
from ..tower.tower import Tower
from ..utils.validators import ValidationError, validate_count
from .dd_kernel import sigma_violations

logger = logging.getLogger(__name__)

MET = "met"
MET_WITH_EQUALITY = "met-with-equality"
VIOLATED = "violated"


class DifferencePresentation(IndexedKernel[GammaIndex]):
    """
    Entries a[i][k] = σ^k(a_i) for depth k <= ``depth`` over (K, σ)

    ``assume_separable`` records what the presenter asserts about L/K:
    True, False, or None when nothing is asserted.
    """

    def __init__(self, base: Tower, endomorphism: Endomorphism, n: int, depth: int,
                 entries: Mapping[GammaIndex, object], letter: str = "a",
                 assume_separable: Optional[bool] = None,
                 names: Optional[Mapping[GammaIndex, str]] = None):
        self.n = validate_count(n, "n", minimum=1)
        self.depth = validate_count(depth, "depth")
        self.letter = letter
        self.assume_separable = assume_separable
        if endomorphism.owner != base:
            raise ValidationError(f"endomorphism is defined on {endomorphism.owner}, not on {base}")
        self.endomorphism = endomorphism
        expected = set(gamma(depth, n))
        if set(entries) != expected:
            raise ValidationError(
                f"difference presentation must cover depths 0..{depth} for n = {n}"
            )
        names = names or {index: index.name(letter) for index in entries}
        super().__init__(base, None, entries, names)

    def sigma_shift(self) -> Endomorphism:
        owner = self.level_tower(lambda index: index.xi <= self.depth - 1)
        base_images, gen_images = split_images(self.endomorphism)
        for index, entry in self.entries.items():
            if index.xi <= self.depth - 1 and is_generator(entry):
                gen_images[self.names[index]] = self.value(index.shifted())
        return Endomorphism(owner, self.tower, base_images, gen_images)

    def __str__(self) -> str:
        return f"DifferencePresentation(n={self.n}, depth={self.depth}) over {self.base}"


def difference_verify(t: DifferencePresentation) -> VerificationResult:
    """σ(a[i][k]) = a[i][k+1] must define a field homomorphism L_{depth-1} -> L_depth"""
    violations = sigma_violations(
        t, t.sigma_shift(), GammaIndex.shifted, lambda index: index.xi <= t.depth - 1
    )
    return VerificationResult(t, violations)


@dataclass
class DifferenceReport:
    """
    σ-leaders per depth and the verdict on the bound: every minimal-separable
    leader sits at depth at most n
    """

    presentation: DifferencePresentation
    leaders: LeaderReport
    minimal_depths: Dict[int, Optional[int]]
    transcendence_degree: int
    verdict: str
    inseparability_witnesses: List[GammaIndex] = field(default_factory=list)
    violations: List[KernelViolation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def extension_inseparable(self) -> bool:
        """L/K is asserted or shown to be inseparable"""
        return self.presentation.assume_separable is False or bool(self.inseparability_witnesses)

    @property
    def max_minimal_depth(self) -> Optional[int]:
        depths = [d for d in self.minimal_depths.values() if d is not None]
        return max(depths) if depths else None


def _witnesses(t: DifferencePresentation, leaders: LeaderReport) -> List[GammaIndex]:
    """Inseparable entries whose minimal polynomial has all coefficients in K"""
    base_symbols = set(t.base.variables)
    found = []
    for index in sorted(leaders.inseparable()):
        entry = t.entries[index]
        if isinstance(entry, Algebraic) and entry.symbols() <= base_symbols:
            found.append(index)
    return found


def difference_leader_classify(t: DifferencePresentation, verify: bool = True) -> DifferenceReport:
    """
    Classify σ-leaders and check the depth bound

    Args:
        t: Difference presentation
        verify: Also check that the depth shift is a field homomorphism

    Returns:
        DifferenceReport
    """
    leaders = classify_entries(t.entries, linear_before)
    minimal_depths: Dict[int, Optional[int]] = {}
    for i in range(1, t.n + 1):
        depths = [index.xi for index in leaders.minimal_separable() if index.i == i]
        minimal_depths[i] = min(depths) if depths else None
    degree = len(leaders.non_leaders())

    deepest = max((d for d in minimal_depths.values() if d is not None), default=None)
    if deepest is None or deepest < t.n:
        verdict = MET
    elif deepest == t.n:
        verdict = MET_WITH_EQUALITY
    else:
        verdict = VIOLATED

    report = DifferenceReport(
        presentation=t,
        leaders=leaders,
        minimal_depths=minimal_depths,
        transcendence_degree=degree,
        verdict=verdict,
        inseparability_witnesses=_witnesses(t, leaders),
    )
    if verify:
        report.violations = difference_verify(t).violations
    if verdict == VIOLATED:
        if report.extension_inseparable:
            report.notes.append(
                f"minimal-separable leader at depth {deepest} > n = {t.n}; "
                "L/K is inseparable, so the bound does not apply"
            )
        elif t.assume_separable:
            report.notes.append(
                f"minimal-separable leader at depth {deepest} > n = {t.n} "
                "although L/K is asserted separable"
            )
        else:
            report.notes.append("separability of L/K is neither asserted nor refuted by the tags")
    if leaders.inseparable():
        logger.info("inseparable σ-leaders at %s", sorted(str(i) for i in leaders.inseparable()))
    logger.info("difference bound %s (deepest minimal-separable leader %s, n = %d)",
                verdict, deepest, t.n)
    return report
