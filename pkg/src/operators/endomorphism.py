"""
Difference endomorphisms between presented towers
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

import numpy as np

from ..arith.mpoly import MPoly
from ..tower.element import Element
from ..tower.tower import Tower
from ..tower.upoly import ElementPoly
from ..utils.calculations import first_dependent_row, rank_mod_p
from ..utils.errors import InvalidEndomorphism
from ..utils.validators import UnresolvedSymbol
from .derivation import Derivation

logger = logging.getLogger(__name__)


def evaluate_poly(poly: MPoly, images: Mapping[str, Element], target: Tower) -> Element:
    """Substitute an image for every variable of ``poly`` and evaluate in ``target``"""
    powers: Dict[tuple, Element] = {}

    def power(name: str, e: int) -> Element:
        key = (name, e)
        if key not in powers:
            powers[key] = images[name] if e == 1 else power(name, e - 1) * images[name]
        return powers[key]

    result = target.zero()
    for exponents, coeff in poly.terms.items():
        term = target.const(coeff)
        for name, e in zip(poly.variables, exponents):
            if e:
                term = term * power(name, e)
        result = result + term
    return result


# modulus for the evaluated Jacobian; below 2^31 so products fit in int64
JACOBIAN_PRIME = 2_147_483_647


def _value_mod(poly: MPoly, point: Mapping[str, int]) -> int:
    total = 0
    for exponents, coeff in poly.terms.items():
        c = Fraction(coeff)
        term = c.numerator * pow(c.denominator, -1, JACOBIAN_PRIME)
        for name, e in zip(poly.variables, exponents):
            if e:
                term = term * pow(point[name], e, JACOBIAN_PRIME) % JACOBIAN_PRIME
        total += term
    return total % JACOBIAN_PRIME


def _jacobian_at(images: List[Element], free: Sequence[str], point: Mapping[str, int]) -> Optional[List[List[int]]]:
    """Jacobian of free rational images at ``point`` mod JACOBIAN_PRIME; None on a pole"""
    rows = []
    for y in images:
        den = _value_mod(y.den, point)
        if den == 0:
            return None
        num = _value_mod(y.num, point)
        inv = pow(den, -2, JACOBIAN_PRIME)
        rows.append([
            (_value_mod(y.num.partial(z), point) * den - num * _value_mod(y.den.partial(z), point)) * inv
            % JACOBIAN_PRIME
            for z in free
        ])
    return rows


def _partial_derivations(tower: Tower) -> Dict[str, Derivation]:
    """∂/∂z for every free symbol z, extended to the (separable) algebraic generators"""
    partials = {}
    for z in tower.free_names():
        base_images = {z: tower.one()} if z in tower.base else {}
        gen_images = {} if z in tower.base else {z: tower.one()}
        for g in tower.gens:
            if g.is_algebraic:
                gen_images[g.name] = Derivation(tower, base_images, gen_images).forced_value(g.name)
        partials[z] = Derivation(tower, base_images, gen_images)
    return partials


@dataclass(frozen=True)
class EndomorphismViolation:
    generator: str
    lhs: Optional[Element]
    reason: str

    def __str__(self) -> str:
        return f"{self.generator}: {self.reason}"


@dataclass(frozen=True, eq=False)
class Endomorphism:
    """
    A field homomorphism ``owner -> target`` fixing the prime field, given by
    the images of the symbols of ``owner``. A symbol without an image is
    mapped to the symbol of the same name in ``target``.
    """

    owner: Tower
    target: Optional[Tower] = None
    base_images: Mapping[str, Element] = field(default_factory=dict)
    gen_images: Mapping[str, Element] = field(default_factory=dict)

    def __post_init__(self):
        target = self.target or self.owner
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
        return self.target.gen(name)

    def images(self) -> Dict[str, Element]:
        return {name: self.image(name) for name in self.owner.variables}

    def defined_on(self, e: Element) -> bool:
        return e.used_symbols() <= set(self.owner.variables)

    def apply(self, e) -> Element:
        """σ(e): substitute images into numerator and denominator"""
        e = self.owner.coerce(e)
        images = {name: self.image(name) for name in e.used_symbols()}
        num = evaluate_poly(e.num, images, self.target)
        if e.den.is_constant():
            return num * self.target.const(self.owner.field.inv(e.den.constant_value()))
        return num / evaluate_poly(e.den, images, self.target)

    __call__ = apply

    def transported_minpoly(self, name: str) -> ElementPoly:
        """f^σ: the minimal polynomial of ``name`` with σ applied to its coefficients"""
        return self.owner.spec(name).minpoly.map_coeffs(self.apply, self.target)

    def dependent_image(self) -> Optional[str]:
        """
        First transcendental symbol whose image is algebraic over the images
        of the symbols before it, or None

        Repeated images are caught in every characteristic. Beyond that the
        test is the rank of the Jacobian of the images over the free symbols
        of the target, which decides independence in characteristic 0 only:
        in characteristic p a rank drop proves nothing (t -> t^p), so there
        the rank test is skipped.
        """
        algebraic = self.owner.algebraic_names()
        names = [name for name in self.owner.variables if name not in algebraic]
        images = [self.image(name) for name in names]
        for j, y in enumerate(images):
            if any(y == x for x in images[:j]):
                return names[j]
        if self.owner.field.characteristic != 0 or len(names) < 2:
            return None

        free = self.target.free_names()
        if all(y.is_free() for y in images):
            # full rank at a single point already proves independence
            for seed in range(3):
                values = np.random.default_rng(seed).integers(1, JACOBIAN_PRIME, size=len(free))
                try:
                    rows = _jacobian_at(images, free, dict(zip(free, (int(v) for v in values))))
                except ValueError:
                    rows = None
                if rows is not None and rank_mod_p(rows, JACOBIAN_PRIME) == len(images):
                    return None
        partials = _partial_derivations(self.target)
        index = first_dependent_row([[partials[z].apply(y) for z in free] for y in images])
        return None if index is None else names[index]

    def violations(self) -> List[EndomorphismViolation]:
        found = []
        for name in self.owner.variables:
            spec = self.owner.spec(name) if name in self.owner.gen_names else None
            if spec is not None and spec.is_algebraic:
                lhs = self.transported_minpoly(name).evaluate(self.image(name))
                if not lhs.is_zero():
                    found.append(EndomorphismViolation(name, lhs, f"f^σ(σ({name})) = {lhs}"))
                continue
            image = self.image(name)
            if image.num.is_constant() and image.den.is_constant():
                found.append(EndomorphismViolation(
                    name, None, f"transcendental symbol mapped to the constant {image}"
                ))
        if not found:
            name = self.dependent_image()
            if name is not None:
                found.append(EndomorphismViolation(
                    name, self.image(name), "image is algebraic over the images of the symbols before it"
                ))
        return found

    def restricted(self, owner: Tower) -> "Endomorphism":
        return Endomorphism(
            owner,
            self.target,
            {k: v for k, v in self.base_images.items() if k in owner.base},
            {k: v for k, v in self.gen_images.items() if owner.has(k)},
        )

    def __str__(self) -> str:
        parts = [f"{name} -> {self.image(name)}" for name in self.owner.variables]
        return "σ{" + "; ".join(parts) + "}"


def endo_define(t: Tower, target: Optional[Tower], base_images: Mapping,
                gen_images: Mapping) -> Endomorphism:
    """
    Build and validate an endomorphism

    Raises:
        InvalidEndomorphism: At the first symbol whose condition fails
    """
    endomorphism = Endomorphism(t, target, dict(base_images), dict(gen_images))
    for violation in endomorphism.violations():
        logger.info("endomorphism rejected at %s", violation)
        raise InvalidEndomorphism(violation.generator, violation.lhs, violation.reason)
    return endomorphism


def endo_apply(s: Endomorphism, e) -> Element:
    return s.apply(e)
