"""
Adjoining a σ-preimage of one element, to a finite derivative depth
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ..kernels.diff_kernel import split_images
from ..operators.commutation import CommutationViolation, DifferenceDifferentialField, commutation_check
from ..operators.derivation import derivation_define, derivation_extend_forced
from ..operators.endomorphism import Endomorphism, endo_define
from ..tower.element import Element
from ..tower.tower import GenSpec, Tower
from ..tower.upoly import ElementPoly
from ..utils.errors import PlanInconsistent
from ..utils.validators import ValidationError, validate_count

logger = logging.getLogger(__name__)

TRANS = "trans"
ALG = "alg"
VALUE = "value"


@dataclass
class PlanStep:
    """
    How c[n] enters: a transcendental, a root of ``poly`` (the minimal
    polynomial of δ^n(b) with σ pulled back, written in c[n]), or an
    existing ``value``
    """

    kind: str
    poly: Optional[ElementPoly] = None
    value: Optional[Element] = None

    def __post_init__(self):
        if self.kind not in (TRANS, ALG, VALUE):
            raise ValidationError(f"unknown plan step kind '{self.kind}'")
        if self.kind == ALG and self.poly is None:
            raise ValidationError("an algebraic plan step needs a polynomial")
        if self.kind == VALUE and self.value is None:
            raise ValidationError("a value plan step needs a value")


@dataclass
class SurjectivizationPlan:
    b: Element
    depth: int
    steps: List[PlanStep]
    letter: str = "c"

    def name(self, n: int) -> str:
        return f"{self.letter}[{n}]"


@dataclass
class PreimageExtension:
    field: DifferenceDifferentialField
    preimages: List[Element]
    derivatives: List[Element]
    generators: List[str] = field(default_factory=list)
    commutation: List[CommutationViolation] = field(default_factory=list)


def adjoin_sigma_preimage(F: DifferenceDifferentialField, plan: SurjectivizationPlan) -> PreimageExtension:
    """
    Adjoin c[0..N] with σ(c[n]) = δ^n(b) and δ(c[n]) = c[n+1] for n < N

    Args:
        F: Commuting differential-difference field
        plan: Preimage plan for b

    Returns:
        PreimageExtension; σ(c[0]) = b

    Raises:
        PlanInconsistent: If a step's polynomial or value does not match δ^n(b)
        InvalidDerivation, InvalidEndomorphism: If the extended operators fail validation
    """
    depth = validate_count(plan.depth, "depth")
    if len(plan.steps) != depth + 1:
        raise ValidationError(f"plan of depth {depth} needs {depth + 1} steps, got {len(plan.steps)}")
    clashes = F.violations()
    if clashes:
        raise ValidationError(f"base operators do not commute at {clashes[0].symbol}")

    base = F.tower
    derivatives = [base.coerce(plan.b)]
    for _ in range(depth):
        derivatives.append(F.derivation.apply(derivatives[-1]))

    sigma_base, sigma_gens = split_images(F.endomorphism)
    tower = base
    preimages: List[Element] = []
    generators: List[str] = []
    for n, step in enumerate(plan.steps):
        name = plan.name(n)
        pullback = Endomorphism(tower, base, sigma_base, sigma_gens)
        if step.kind == TRANS:
            tower = tower.extend(GenSpec(name))
        elif step.kind == ALG:
            lhs = step.poly.map_coeffs(pullback.apply, base).evaluate(derivatives[n])
            if not lhs.is_zero():
                raise PlanInconsistent(n, lhs)
            tower = tower.extend(GenSpec(name, step.poly))
        else:
            value = tower.coerce(step.value)
            lhs = pullback.apply(value)
            if lhs != derivatives[n]:
                raise PlanInconsistent(n, lhs)
            preimages.append(value)
            logger.info("%s is the presented element %s", name, value)
            continue
        generators.append(name)
        sigma_gens[name] = derivatives[n]
        preimages.append(tower.gen(name))
        logger.info("adjoined %s with σ(%s) = %s", name, name, derivatives[n])

    preimages = [tower.coerce(c) for c in preimages]
    sigma = endo_define(tower, tower, sigma_base, sigma_gens)

    delta_base, delta_gens = split_images(F.derivation)
    for n in range(depth):
        if plan.name(n) in generators:
            delta_gens[plan.name(n)] = preimages[n + 1]
    top = plan.name(depth)
    last_separable = top in generators and tower.spec(top).is_algebraic and tower.spec(top).separable
    owner = tower.restrict([g for g in tower.gen_names if g != top]) if top in generators else tower
    delta = derivation_define(owner, delta_base, delta_gens, tower)
    if last_separable:
        delta = derivation_extend_forced(delta, tower)

    extended = DifferenceDifferentialField(tower, delta, sigma)
    result = PreimageExtension(extended, preimages, derivatives, generators,
                               commutation_check(delta, sigma))
    if result.commutation:
        logger.warning("preimage extension does not commute at %s", result.commutation[0])
    return result
