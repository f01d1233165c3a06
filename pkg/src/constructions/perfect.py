"""
Truncated differentially perfect extension: p-th roots of constants with derivative chains
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List

from ..kernels.diff_kernel import split_images
from ..operators.commutation import (
    CommutationViolation,
    DifferenceDifferentialField,
    commutation_check,
    r_map,
)
from ..operators.derivation import derivation_define
from ..operators.endomorphism import endo_define
from ..tower.element import Element
from ..tower.pth_power import is_pth_power
from ..tower.tower import GenSpec, Tower
from ..tower.upoly import ElementPoly
from ..utils.errors import NotAConstant, PRootMissing, UnsupportedTower
from ..utils.validators import validate_count

logger = logging.getLogger(__name__)


@dataclass
class PerfectExtensionPlan:
    """Constants c_1..c_k and the length J of each derivative chain"""

    constants: List[Element]
    depth: int
    letter: str = "x"

    def name(self, i: int, j: int) -> str:
        return f"{self.letter}[{i}][{j}]"


@dataclass
class PerfectExtension:
    field: DifferenceDifferentialField
    roots: List[Element]
    sigma_roots: List[Element]
    # the plan's constants followed by the σ-images adjoined to close them
    constants: List[Element] = field(default_factory=list)
    commutation: List[CommutationViolation] = field(default_factory=list)


def _root_tower(base: Tower, constants: List[Element], plan: PerfectExtensionPlan, depth: int) -> Tower:
    p = base.field.characteristic
    tower = base
    for i, c in enumerate(constants, start=1):
        root = plan.name(i, 0)
        tower = tower.extend(GenSpec(root, ElementPoly.monomial(tower, p, 1, root) - tower.coerce(c)))
        for j in range(1, depth + 1):
            tower = tower.extend(GenSpec(plan.name(i, j)))
    return tower


def diffperfect_truncated(L: DifferenceDifferentialField, plan: PerfectExtensionPlan) -> PerfectExtension:
    """
    Adjoin x[i][0] = c_i^(1/p) and transcendentals x[i][1..J] with
    δ(x[i][j]) = x[i][j+1]; σ(x[i][0]) is the p-th root of σ(c_i) and
    σ(x[i][j]) = δ^j of it

    When some σ(c_i) has no p-th root yet, σ(c_i) joins the constants and
    gets its own root and chain. The list closes after at most as many
    additions as there are free symbols.

    Args:
        L: Differential-difference field of positive characteristic
        plan: Constants and chain length

    Returns:
        PerfectExtension

    Raises:
        NotAConstant: If some c_i, or an adjoined σ-image, has nonzero derivative
        PRootMissing: If the constants do not close under σ
        UnsupportedTower: In characteristic 0
    """
    depth = validate_count(plan.depth, "depth")
    base = L.tower
    p = base.field.characteristic
    if p == 0:
        raise UnsupportedTower("differentially perfect extensions are trivial in characteristic 0")
    constants = [base.coerce(c) for c in plan.constants]
    for i, c in enumerate(constants, start=1):
        derivative = L.derivation.apply(c)
        if not derivative.is_zero():
            raise NotAConstant(i, derivative)

    limit = len(constants) + len(base.free_names())
    while True:
        tower = _root_tower(base, constants, plan, depth)
        images = [L.endomorphism.apply(c) for c in constants]
        sigma_roots = [is_pth_power(tower.coerce(image)) for image in images]
        missing = next((image for image, root in zip(images, sigma_roots) if root is None), None)
        if missing is None:
            break
        if len(constants) >= limit:
            raise PRootMissing(missing)
        derivative = L.derivation.apply(missing)
        if not derivative.is_zero():
            raise NotAConstant(len(constants) + 1, derivative)
        logger.info("σ-image %s has no p-th root; adjoining one", missing)
        constants.append(missing)
    for i, c in enumerate(constants, start=1):
        logger.info("adjoined %s = (%s)^(1/%d) with a chain of %d derivatives", plan.name(i, 0), c, p, depth)

    delta_base, delta_gens = split_images(L.derivation)
    tops = set()
    for i in range(1, len(constants) + 1):
        for j in range(depth):
            delta_gens[plan.name(i, j)] = tower.gen(plan.name(i, j + 1))
        tops.add(plan.name(i, depth))
    owner = tower.restrict([g for g in tower.gen_names if g not in tops])
    delta = derivation_define(owner, delta_base, delta_gens, tower)

    sigma_base, sigma_gens = split_images(L.endomorphism)
    for i, root in enumerate(sigma_roots, start=1):
        chain = root
        for j in range(depth + 1):
            sigma_gens[plan.name(i, j)] = chain
            if j < depth:
                chain = delta.apply(chain)
    sigma = endo_define(tower, tower, sigma_base, sigma_gens)

    roots = [tower.gen(plan.name(i, 0)) for i in range(1, len(constants) + 1)]
    extended = DifferenceDifferentialField(tower, delta, sigma)
    result = PerfectExtension(extended, roots, sigma_roots, constants=constants, commutation=commutation_check(delta, sigma))
    if result.commutation:
        logger.warning("perfect extension does not commute at %s", result.commutation[0])
    return result


def r_map_table(extension: PerfectExtension, constants: List[Element]) -> Dict[str, Element]:
    """r(c) for every plan constant, computed in the extension"""
    return {str(c): r_map(extension.field.derivation, c) for c in constants}
