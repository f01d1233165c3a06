"""
Field elements of a presented tower in triangular normal form
"""

import logging
from fractions import Fraction

from ..arith.field import BaseCoeff
from ..arith.mpoly import MPoly
from ..utils.errors import ReducibleMinPoly, ZeroElement
from ..utils.validators import ValidationError
from .upoly import ElementPoly

logger = logging.getLogger(__name__)


class Element:
    """
    An element ``num/den`` of a tower.

    ``num`` is reduced modulo every algebraic generator's relation (degree in
    each algebraic generator below its minimal polynomial's degree) and
    ``den`` only involves free symbols: base indeterminates and transcendental
    generators. Elements are created through ``Tower.element`` and are never
    mutated.
    """

    __slots__ = ("owner", "num", "den")

    def __init__(self, owner, num: MPoly, den: MPoly):
        self.owner = owner
        self.num = num
        self.den = den

    # ------------------------------------------------------------ coercion
    def _align(self, other):
        if isinstance(other, Element):
            if other.owner is self.owner:
                return self, other
            owner = self.owner.common(other.owner)
            return owner.coerce(self), owner.coerce(other)
        if isinstance(other, (int, Fraction, BaseCoeff)):
            return self, self.owner.const(other)
        raise TypeError(f"cannot combine Element with {type(other).__name__}")

    # ---------------------------------------------------------- arithmetic
    def __add__(self, other) -> "Element":
        a, b = self._align(other)
        if a.den == b.den:
            return a.owner.tidy(a.num + b.num, a.den)
        return a.owner.tidy(a.num * b.den + b.num * a.den, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.owner, -self.num, self.den)

    def __sub__(self, other) -> "Element":
        a, b = self._align(other)
        return a + (-b)

    def __rsub__(self, other) -> "Element":
        a, b = self._align(other)
        return b + (-a)

    def __mul__(self, other) -> "Element":
        a, b = self._align(other)
        return a.owner.reduce(a.num * b.num, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Element":
        a, b = self._align(other)
        return a * b.inverse()

    def __rtruediv__(self, other) -> "Element":
        a, b = self._align(other)
        return b * a.inverse()

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.owner.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Element, int, Fraction, BaseCoeff)):
            return NotImplemented
        a, b = self._align(other)
        return (a.num * b.den - b.num * a.den).is_zero()

    __hash__ = None

    # -------------------------------------------------------------- queries
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def used_symbols(self) -> set:
        return self.num.used_variables() | self.den.used_variables()

    def algebraic_symbols(self) -> set:
        return self.num.used_variables() & self.owner.algebraic_names()

    def is_free(self) -> bool:
        """True when no algebraic generator occurs"""
        return not self.algebraic_symbols()

    def is_variable(self):
        """Name of the single symbol this element equals, or None"""
        if not self.den.is_constant() or len(self.num) != 1:
            return None
        exponents, coeff = next(iter(self.num.terms.items()))
        if sum(exponents) != 1 or coeff != self.den.constant_value():
            return None
        return self.num.variables[exponents.index(1)]

    # ------------------------------------------------------------ inversion
    def inverse(self) -> "Element":
        """
        Multiplicative inverse

        The numerator is inverted by the extended Euclidean algorithm against
        the minimal polynomial of the top algebraic generator it uses, with
        coefficients in the tower below that generator.

        Raises:
            ZeroElement: If the element is zero
            ReducibleMinPoly: If a nontrivial common factor with a minimal
                polynomial shows the presentation is not a field
        """
        if self.is_zero():
            raise ZeroElement(f"inverse of zero in {self.owner}")
        owner = self.owner
        used = self.algebraic_symbols()
        if not used:
            return owner.tidy(self.den, self.num)
        top = max(used, key=owner.position)
        spec = owner.spec(top)
        domain = owner.coefficient_tower(top)
        poly = self.polynomial_in(top, domain, numerator_only=True)
        minpoly = spec.minpoly.lift(domain)
        g, s, _ = poly.gcdex(minpoly)
        if g.degree() >= 1:
            logger.info("inversion found factor %s of the minimal polynomial of %s", g, top)
            raise ReducibleMinPoly(top, g.renamed(top))
        # s * num == 1 modulo the minimal polynomial
        inverse_num = s.evaluate(owner.gen(top))
        return inverse_num * owner.from_mpoly(self.den)

    def polynomial_in(self, name: str, domain=None, numerator_only: bool = False) -> ElementPoly:
        """
        View as a univariate polynomial in one generator

        Args:
            name: Generator (or base indeterminate) name
            domain: Coefficient tower, default ``coefficient_tower(name)``
            numerator_only: Ignore the denominator

        Raises:
            ValidationError: If the denominator involves ``name``
        """
        owner = self.owner
        domain = domain or owner.coefficient_tower(name)
        if not numerator_only and name in self.den.used_variables():
            raise ValidationError(f"denominator of {self} involves '{name}'")
        den = domain.from_mpoly(self.den) if not numerator_only else domain.one()
        coeffs = self.num.coefficients(name)
        top = max(coeffs) if coeffs else -1
        values = []
        for k in range(top + 1):
            part = coeffs.get(k)
            values.append(domain.zero() if part is None else domain.from_mpoly(part) / den)
        return ElementPoly(domain, values, name)

    # ------------------------------------------------------------- display
    def simplified(self) -> "Element":
        """Re-run gcd and content cancellation; equality is unaffected"""
        return self.owner.tidy(self.num, self.den)

    def __str__(self) -> str:
        if self.den.is_constant():
            return str(self.num)
        num = str(self.num)
        if len(self.num) > 1:
            num = f"({num})"
        den = str(self.den)
        single_power = (
            len(self.den) == 1
            and len(self.den.used_variables()) == 1
            and next(iter(self.den.terms.values())) == self.den.field.one
        )
        if not single_power:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"Element({self} in {self.owner})"


def normal_form(e: Element) -> Element:
    """Re-reduce an element modulo the tower's relations (idempotent)"""
    return e.owner.element(e.num, e.den)
