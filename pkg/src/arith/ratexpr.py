"""
Rational expressions num/den over a polynomial ring
"""

from fractions import Fraction
from typing import Tuple

from .field import BaseCoeff, BaseField
from .mpoly import MPoly, univariate_gcd
from ..utils.validators import ValidationError


class RatExpr:
    """
    Quotient of two polynomials. Not kept reduced: equality is decided by
    cross-multiplication, and ``simplified`` is a display-only pass.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly = None):
        if den is None:
            den = MPoly.constant(num.field, num.variables, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational expression with zero denominator")
        self.num, self.den = num._unify(den)

    @classmethod
    def from_value(cls, field: BaseField, variables, value) -> "RatExpr":
        return cls(MPoly.constant(field, variables, value))

    @property
    def field(self) -> BaseField:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other) -> "RatExpr":
        if isinstance(other, RatExpr):
            return other
        if isinstance(other, MPoly):
            return RatExpr(other)
        if isinstance(other, (int, Fraction, BaseCoeff)):
            return RatExpr(MPoly.constant(self.field, self.num.variables, other))
        raise TypeError(f"cannot combine RatExpr with {type(other).__name__}")

    def __add__(self, other) -> "RatExpr":
        other = self._coerce(other)
        if self.den == other.den:
            return RatExpr(self.num + other.num, self.den)
        return RatExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatExpr":
        return RatExpr(-self.num, self.den)

    def __sub__(self, other) -> "RatExpr":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatExpr":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RatExpr":
        other = self._coerce(other)
        return RatExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatExpr":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by a zero rational expression")
        return RatExpr(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatExpr":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RatExpr":
        if n < 0:
            return RatExpr(self.den ** -n, self.num ** -n)
        return RatExpr(self.num ** n, self.den ** n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RatExpr, MPoly, int, Fraction, BaseCoeff)):
            return NotImplemented
        other = self._coerce(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def simplified(self) -> "RatExpr":
        """Cancel monomial content and, in one variable, the polynomial gcd"""
        num, den = self.num, self.den
        if num.is_zero():
            return RatExpr(num, MPoly.constant(num.field, num.variables, 1))
        common = tuple(min(a, b) for a, b in zip(num.monomial_content(), den.monomial_content()))
        if any(common):
            num, den = num.divide_monomial(common), den.divide_monomial(common)
        used = num.used_variables() | den.used_variables()
        if len(used) == 1:
            name = next(iter(used))
            g = univariate_gcd(num, den, name)
            if g.total_degree() > 0:
                num, _ = num.divrem(g, name)
                den, _ = den.divrem(g, name)
        _, lc = den.leading_term()
        inverse = num.field.inv(lc)
        return RatExpr(num.scale(inverse), den.scale(inverse))

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == self.field.one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatExpr({self})"


def poly_arith(a: MPoly, b: MPoly, op: str, variable: str = None):
    """
    Exact polynomial arithmetic

    Args:
        a: Left operand
        b: Right operand
        op: One of ``add``, ``sub``, ``mul``, ``divrem``
        variable: Division variable, required for ``divrem``

    Returns:
        An MPoly, or ``(quotient, remainder)`` for ``divrem``. When the
        divisor's leading coefficient is not a constant, quotient and
        remainder are RatExpr values over the fraction field of the
        remaining variables.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op != "divrem":
        raise ValueError(f"unknown polynomial operation '{op}'")
    a, b = a._unify(b)
    if variable is None:
        raise ValueError("divrem needs a division variable")
    multiplier, quotient, remainder = a.pseudo_divrem(b, variable)
    if multiplier.is_constant():
        return quotient, remainder
    return RatExpr(quotient, multiplier), RatExpr(remainder, multiplier)


def formal_partial(f: MPoly, variable: str) -> MPoly:
    """Formal partial derivative; raises ValidationError for unknown variables"""
    return f.partial(variable)


def coeff_map_apply(f: MPoly, m, main: Tuple[str, ...]) -> MPoly:
    """
    Apply a coefficient map to f viewed as a polynomial in ``main``

    Args:
        f: Polynomial
        m: Callable taking a coefficient polynomial to its image, or
            returning None where it is undefined
        main: The polynomial's own variables; everything else is coefficient

    Raises:
        ValidationError: If ``m`` is undefined on some coefficient
    """
    def checked(coefficient: MPoly) -> MPoly:
        image = m(coefficient)
        if image is None:
            raise ValidationError(f"coefficient map undefined on {coefficient}")
        return image

    return f.map_coefficients(main, checked)
