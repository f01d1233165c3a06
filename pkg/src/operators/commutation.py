"""
Commutation of a derivation with an endomorphism, and the r-function
"""

import logging
from dataclasses import dataclass
from typing import List

from ..tower.element import Element
from ..tower.pth_power import is_pth_power
from ..tower.tower import Tower
from ..utils.errors import PRootMissing, UnsupportedTower
from .derivation import Derivation
from .endomorphism import Endomorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommutationViolation:
    """δσ(v) and σδ(v) disagree at the symbol v"""

    symbol: str
    delta_sigma: Element
    sigma_delta: Element

    def __str__(self) -> str:
        return f"{self.symbol}: δσ = {self.delta_sigma}, σδ = {self.sigma_delta}"


def commutation_check(d: Derivation, s: Endomorphism) -> List[CommutationViolation]:
    """
    Compare δσ(v) with σδ(v) on every base indeterminate and generator

    Symbols where one of the composites is undefined are skipped. An empty
    list means the operators commute on generators.
    """
    violations = []
    skipped = []
    for name in s.owner.variables:
        v = s.owner.gen(name)
        sigma_v = s.apply(v)
        if not d.defined_on(sigma_v) or not d.owner.has(name):
            skipped.append(name)
            continue
        delta_v = d.apply(d.owner.gen(name))
        if not s.defined_on(delta_v):
            skipped.append(name)
            continue
        delta_sigma = d.apply(sigma_v)
        sigma_delta = s.apply(delta_v)
        if delta_sigma != sigma_delta:
            logger.info("δσ(%s) = %s but σδ(%s) = %s", name, delta_sigma, name, sigma_delta)
            violations.append(CommutationViolation(name, delta_sigma, sigma_delta))
    if skipped:
        logger.debug("commutation not checked at %s (a composite is undefined)", skipped)
    return violations


@dataclass(frozen=True, eq=False)
class DifferenceDifferentialField:
    """(K, δ, σ) on one tower"""

    tower: Tower
    derivation: Derivation
    endomorphism: Endomorphism

    def violations(self) -> List[CommutationViolation]:
        return commutation_check(self.derivation, self.endomorphism)

    def commutes(self) -> bool:
        return not self.violations()


def r_map(d: Derivation, e) -> Element:
    """
    0 for non-constants, the p-th root for constants

    Raises:
        UnsupportedTower: In characteristic 0 or on unsupported towers
        PRootMissing: When ``e`` is a constant without a presented p-th root
    """
    if d.owner.field.characteristic == 0:
        raise UnsupportedTower("the r-function needs positive characteristic")
    if not d.apply(d.owner.coerce(e)).is_zero():
        return d.target.zero()
    # roots may live above the derivation's domain
    e = d.target.coerce(e)
    root = is_pth_power(e)
    if root is None:
        raise PRootMissing(e)
    return root
