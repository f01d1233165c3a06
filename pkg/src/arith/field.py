"""
Prime fields and the rationals as coefficient domains
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..utils.validators import ValidationError, validate_prime

Coeff = Union[int, Fraction]


@dataclass(frozen=True)
class BaseField:
    """
    Coefficient domain: F_p for a prime p, or Q when ``characteristic`` is 0.

    Coefficients are plain Python values: residues in [0, p) for F_p and
    ``Fraction`` for Q. Both are arbitrary precision.
    """

    characteristic: int = 0

    def __post_init__(self):
        validate_prime(self.characteristic)

    @classmethod
    def parse(cls, text: str) -> "BaseField":
        """Build a field from ``Q`` or ``F<p>``"""
        if text == "Q":
            return cls(0)
        if text.startswith("F") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise ValidationError(f"unknown base field '{text}'")

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @property
    def zero(self) -> Coeff:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Coeff:
        return Fraction(1) if self.characteristic == 0 else 1

    def convert(self, value) -> Coeff:
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            num = value.numerator % p
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"{value} has no image in F{p}")
            return (num * pow(den, -1, p)) % p
        return int(value) % p

    def add(self, a: Coeff, b: Coeff) -> Coeff:
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a: Coeff, b: Coeff) -> Coeff:
        p = self.characteristic
        return (a - b) % p if p else a - b

    def neg(self, a: Coeff) -> Coeff:
        p = self.characteristic
        return (-a) % p if p else -a

    def mul(self, a: Coeff, b: Coeff) -> Coeff:
        p = self.characteristic
        return (a * b) % p if p else a * b

    def inv(self, a: Coeff) -> Coeff:
        if a == 0:
            raise ZeroDivisionError("inverse of zero coefficient")
        p = self.characteristic
        return pow(a, -1, p) if p else 1 / a

    def div(self, a: Coeff, b: Coeff) -> Coeff:
        return self.mul(a, self.inv(b))

    def power(self, a: Coeff, n: int) -> Coeff:
        p = self.characteristic
        if n < 0:
            return self.power(self.inv(a), -n)
        return pow(a, n, p) if p else a ** n

    def format(self, a: Coeff) -> str:
        if self.characteristic == 0 and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class BaseCoeff:
    """A coefficient value tagged with its field"""

    field: BaseField
    value: Coeff

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.convert(self.value))

    def _other(self, other) -> Coeff:
        if isinstance(other, BaseCoeff):
            if other.field != self.field:
                raise ValidationError(f"cannot mix {self.field} and {other.field}")
            return other.value
        return self.field.convert(other)

    def __add__(self, other):
        return BaseCoeff(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return BaseCoeff(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return BaseCoeff(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return BaseCoeff(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return BaseCoeff(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return BaseCoeff(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return BaseCoeff(self.field, self.field.power(self.value, n))

    def __eq__(self, other):
        if isinstance(other, BaseCoeff):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return self.field.format(self.value)
