"""
Guided realization of dd-kernels: δ-prolongation, then σ-steps case by case
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence

from ..kernels.diff_kernel import split_images
from ..kernels.gamma import Gamma2Index, GammaIndex
from ..kernels.presentation import Algebraic, Defined, Transcendental, is_generator
from ..operators.endomorphism import Endomorphism
from ..tower.tower import GenSpec
from ..utils.errors import ChoiceRequired, HypothesisViolation, KernelError
from ..utils.validators import validate_count, validate_target
from .dd_kernel import DDKernel, dd_commutation, dd_verify
from .hypotheses import DDHypothesisReport, dd_hypothesis_check
from .prolong import dd_prolong_delta

logger = logging.getLogger(__name__)

CASE_INDEPENDENT = "i"
CASE_CHOICE = "ii"
CASE_FORCED_LOW = "iii"
CASE_GENERIC = "a"
CASE_FORCED = "b"
CASE_INSEPARABLE = "inseparable"


@dataclass
class HypothesisData:
    """The combinatorial data a realization is checked against"""

    M: int
    I: List[GammaIndex] = field(default_factory=list)
    enumeration: List[Gamma2Index] = field(default_factory=list)
    t: int = 0
    d: int = 0
    choices: Dict[Gamma2Index, object] = field(default_factory=dict)


@dataclass
class Realization:
    kernel: DDKernel
    report: DDHypothesisReport
    cases: Dict[Gamma2Index, str] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def case_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for label in self.cases.values():
            counts[label] = counts.get(label, 0) + 1
        return counts


def _constant_coefficients(kernel: DDKernel, source: Gamma2Index) -> bool:
    """δ kills every coefficient of the source's minimal polynomial"""
    if source.xi > kernel.r - 1:
        return False
    delta = kernel.delta_shift()
    return all(delta.apply(c).is_zero() for c in kernel.entries[source].minpoly.coeffs)


def _sigma_step(kernel: DDKernel, data: HypothesisData, realization: Realization) -> DDKernel:
    """Add the level u = s + 1 by transporting level s through σ"""
    top = kernel.s + 1
    independent = set(data.I)
    entries = dict(kernel.entries)
    names = dict(kernel.names)
    tower = kernel.tower
    base_images, gen_images = split_images(kernel.endomorphism)
    for index, entry in kernel.entries.items():
        if is_generator(entry) and index.u <= kernel.s - 1:
            gen_images[kernel.names[index]] = kernel.value(index.sigma_shifted())
    slots = set()

    def sigma() -> Endomorphism:
        return Endomorphism(kernel.tower, tower, base_images, gen_images)

    for xi in range(kernel.r + 1):
        for i in range(1, kernel.n + 1):
            new = Gamma2Index(xi, top, i)
            source = Gamma2Index(xi, top - 1, i)
            entry = kernel.entries[source]
            name = kernel.name_for(new)
            names[new] = name
            source_name = kernel.names[source]

            if GammaIndex(xi, i) in independent and xi <= data.M:
                tower = tower.extend(GenSpec(name))
                entries[new] = Transcendental()
                gen_images[source_name] = tower.gen(name)
                realization.cases[new] = CASE_INDEPENDENT
            elif new in slots:
                value = tower.coerce(data.choices.get(new, 0))
                if value.num.is_constant() and value.den.is_constant():
                    supplied = "the supplied value" if new in data.choices else "the default 0"
                    raise ChoiceRequired(str(new), f"{supplied} is a constant image of "
                                                   f"the transcendental {source_name}")
                entries[new] = Defined(value)
                gen_images[source_name] = value
                realization.cases[new] = CASE_CHOICE
                logger.info("free slot %s takes %s", new, value)
            elif isinstance(entry, Transcendental):
                tower = tower.extend(GenSpec(name))
                entries[new] = Transcendental()
                gen_images[source_name] = tower.gen(name)
                realization.cases[new] = CASE_GENERIC
            elif isinstance(entry, Defined):
                entries[new] = Defined(sigma().apply(kernel.value(source)))
                realization.cases[new] = CASE_FORCED_LOW if xi <= data.M else CASE_FORCED
            else:
                transported = entry.minpoly.map_coeffs(sigma().apply, tower)
                tower = tower.extend(GenSpec(name, transported))
                entries[new] = Algebraic(tower.spec(name).minpoly)
                gen_images[source_name] = tower.gen(name)
                if entry.separable:
                    realization.cases[new] = CASE_FORCED_LOW if xi <= data.M else CASE_FORCED
                else:
                    realization.cases[new] = CASE_INSEPARABLE
                    below = Gamma2Index(xi + 1, top - 1, i)
                    if (below in kernel.entries
                            and isinstance(kernel.entries[below], Transcendental)
                            and _constant_coefficients(kernel, source)):
                        slots.add(below.sigma_shifted())
            logger.debug("%s (case %s): %s", new, realization.cases[new], entries[new])
    return kernel.with_entries(entries, kernel.r, top, names)


def realize_with_cases(k: DDKernel, target: Sequence[int], data: HypothesisData,
                       strict: bool = True) -> Realization:
    """
    Realize ``k`` to length ``target`` and record the case behind every new entry

    Args:
        k: Valid dd-kernel
        target: (R, S) with R >= r and S >= s
        data: Hypothesis data and per-slot choices
        strict: Refuse to run unless every hypothesis holds

    Returns:
        Realization

    Raises:
        HypothesisViolation: In strict mode, for the first failed hypothesis
        ChoiceRequired: When a free slot has no acceptable value
        KernelError: If the result fails verification or commutation
    """
    big_r, big_s = validate_target(target, (k.r, k.s))
    validate_count(data.M, "M")
    report = dd_hypothesis_check(k, data.M, data.I, data.enumeration, data.t, data.d)
    realization = Realization(k, report)
    if not report.green:
        failed = report.failures()[0]
        if strict:
            raise HypothesisViolation(f"{failed.name}: {failed.detail}", failed.witness)
        realization.notes.append(
            f"hypotheses not all green ({', '.join(v.name for v in report.failures())}); "
            "realizing from the presented tags"
        )

    kernel = dd_prolong_delta(k, big_r - k.r, data.M) if big_r > k.r else k
    for index in kernel.entries:
        if index not in k.entries:
            entry = kernel.entries[index]
            realization.cases[index] = CASE_GENERIC if isinstance(entry, Transcendental) else CASE_FORCED
    while kernel.s < big_s:
        kernel = _sigma_step(kernel, data, realization)
        logger.info("realized level u = %d", kernel.s)

    result = dd_verify(kernel)
    if not result.ok:
        raise KernelError("realized dd-kernel fails verification", result.violations)
    clashes = dd_commutation(kernel)
    if clashes:
        raise KernelError(f"realized dd-kernel does not commute at {clashes[0].symbol}", clashes)

    if CASE_GENERIC in realization.cases.values():
        realization.notes.append("new generics are mapped to new generics by σ")
    if CASE_INSEPARABLE in realization.cases.values():
        realization.notes.append("inseparable minimal polynomials transported through σ")
    realization.kernel = kernel
    return realization


def dd_realize(k: DDKernel, target: Sequence[int], data: HypothesisData,
               choices: Optional[Mapping[Gamma2Index, object]] = None,
               strict: bool = True) -> DDKernel:
    """Realized dd-kernel of length ``target``; ``choices`` override the data's slot values"""
    if choices:
        data = HypothesisData(data.M, list(data.I), list(data.enumeration), data.t, data.d,
                              {**data.choices, **choices})
    return realize_with_cases(k, target, data, strict).kernel
