"""
Derivations on presented towers
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from ..arith.mpoly import MPoly
from ..tower.element import Element
from ..tower.tower import Tower
from ..tower.upoly import ElementPoly
from ..utils.errors import InvalidDerivation, NotSeparable
from ..utils.validators import UnresolvedSymbol, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivationViolation:
    """A generator whose extension condition fails; ``lhs`` is the nonzero residue"""

    generator: str
    lhs: Element
    case: str

    def __str__(self) -> str:
        return f"{self.generator} ({self.case}): {self.lhs} != 0"


@dataclass(frozen=True, eq=False)
class Derivation:
    """
    A derivation ``owner -> target`` given by the images of the symbols of
    ``owner``. ``target`` must contain ``owner``; it defaults to ``owner``.
    Symbols without an image are mapped to 0.
    """

    owner: Tower
    base_images: Mapping[str, Element] = field(default_factory=dict)
    gen_images: Mapping[str, Element] = field(default_factory=dict)
    target: Optional[Tower] = None

    def __post_init__(self):
        target = self.target or self.owner
        if target.common(self.owner) is not target:
            raise ValidationError(f"derivation target {target} does not contain {self.owner}")
        object.__setattr__(self, "target", target)
        for name in self.base_images:
            if name not in self.owner.base:
                raise UnresolvedSymbol(name, f"base of {self.owner}")
        for name in self.gen_images:
            if name not in self.owner.gen_names:
                raise UnresolvedSymbol(name, f"generators of {self.owner}")
        object.__setattr__(self, "base_images",
                           {k: target.coerce(v) for k, v in self.base_images.items()})
        object.__setattr__(self, "gen_images",
                           {k: target.coerce(v) for k, v in self.gen_images.items()})

    def image(self, name: str) -> Element:
        if name in self.gen_images:
            return self.gen_images[name]
        if name in self.base_images:
            return self.base_images[name]
        self.owner.position(name)
        return self.target.zero()

    def images(self) -> Dict[str, Element]:
        return {name: self.image(name) for name in self.owner.variables}

    def defined_on(self, e: Element) -> bool:
        return e.used_symbols() <= set(self.owner.variables)

    def _apply_poly(self, poly: MPoly) -> Element:
        result = self.target.zero()
        for name in sorted(poly.used_variables(), key=poly.variables.index):
            image = self.image(name)
            if image.is_zero():
                continue
            result = result + self.target.element(poly.partial(name)) * image
        return result

    def apply(self, e) -> Element:
        """δ(e) by the chain rule on numerator and denominator, then the quotient rule"""
        e = self.owner.coerce(e)
        d_num = self._apply_poly(e.num)
        if e.den.is_constant():
            return d_num * self.target.const(self.owner.field.inv(e.den.constant_value()))
        d_den = self._apply_poly(e.den)
        num = self.target.element(e.num)
        den = self.target.element(e.den)
        return (d_num * den - num * d_den) / (den * den)

    __call__ = apply

    def is_constant(self, e) -> bool:
        return self.apply(e).is_zero()

    def twisted_minpoly(self, name: str) -> ElementPoly:
        """f^δ: the minimal polynomial of ``name`` with δ applied to its coefficients"""
        minpoly = self.owner.spec(name).minpoly
        return minpoly.map_coeffs(self.apply, self.target)

    def condition(self, name: str) -> Element:
        """f^δ(a) + f'(a)·δ(a) for an algebraic generator a"""
        spec = self.owner.spec(name)
        a = self.target.gen(name)
        derivative = spec.minpoly.derivative().evaluate(a)
        return self.twisted_minpoly(name).evaluate(a) + derivative * self.image(name)

    def forced_value(self, name: str) -> Element:
        """-f^δ(a)/f'(a), the only image a separable generator admits"""
        spec = self.owner.spec(name)
        if not spec.is_algebraic or not spec.separable:
            raise NotSeparable(f"generator '{name}' has no separable minimal polynomial")
        a = self.target.gen(name)
        return -self.twisted_minpoly(name).evaluate(a) / spec.minpoly.derivative().evaluate(a)

    def violations(self) -> List[DerivationViolation]:
        """Extension conditions that fail, walking the generators in order"""
        found = []
        for g in self.owner.gens:
            if not g.is_algebraic:
                continue
            lhs = self.condition(g.name)
            if not lhs.is_zero():
                found.append(DerivationViolation(g.name, lhs, g.kind))
        return found

    def restricted(self, owner: Tower) -> "Derivation":
        """The same derivation on a sub-tower of ``owner``"""
        return Derivation(
            owner,
            {k: v for k, v in self.base_images.items() if k in owner.base},
            {k: v for k, v in self.gen_images.items() if owner.has(k)},
            self.target,
        )

    def __str__(self) -> str:
        parts = [f"{name} -> {self.image(name)}" for name in self.owner.variables]
        return "δ{" + "; ".join(parts) + "}"


def derivation_define(t: Tower, base_images: Mapping, gen_images: Mapping,
                      target: Optional[Tower] = None) -> Derivation:
    """
    Build and validate a derivation

    Raises:
        InvalidDerivation: At the first generator whose condition fails
    """
    derivation = Derivation(t, dict(base_images), dict(gen_images), target)
    for violation in derivation.violations():
        logger.info("derivation rejected at %s", violation)
        raise InvalidDerivation(violation.generator, violation.lhs, violation.case)
    return derivation


def derivation_apply(d: Derivation, e) -> Element:
    return d.apply(e)


def derivation_extend_forced(d: Derivation, extended: Tower) -> Derivation:
    """
    Unique extension of ``d`` to a tower with one more separable generator

    Raises:
        NotSeparable: If the new generator is transcendental or inseparable
    """
    new = [name for name in extended.gen_names if not d.owner.has(name)]
    if len(new) != 1 or extended.gen_names[-1] != new[0]:
        raise ValidationError("extension must append exactly one generator")
    name = new[0]
    spec = extended.spec(name)
    if not spec.is_algebraic or not spec.separable:
        raise NotSeparable(f"generator '{name}' is not separable algebraic")
    target = extended if d.target == d.owner else d.target.common(extended)
    draft = Derivation(extended, d.base_images, d.gen_images, target)
    value = draft.forced_value(name)
    logger.info("forced δ(%s) = %s", name, value)
    images = dict(d.gen_images)
    images[name] = value
    return Derivation(extended, d.base_images, images, target)
