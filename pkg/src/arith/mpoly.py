"""
Sparse multivariate polynomials over a prime field or Q
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .field import BaseCoeff, BaseField, Coeff
from ..utils.validators import ValidationError

Monomial = Tuple[int, ...]


def grlex_key(exponents: Monomial) -> tuple:
    """Graded lexicographic sort key on the declared variable order"""
    return (sum(exponents), exponents)


class MPoly:
    """
    Polynomial stored as a map from exponent vectors to nonzero coefficients.

    Values are immutable by convention: no method mutates ``terms``.
    Binary operations unify variable contexts by name; the left operand's
    order is kept and new names are appended.
    """

    __slots__ = ("field", "variables", "terms")

    def __init__(self, field: BaseField, variables: Sequence[str],
                 terms: Optional[Mapping[Monomial, object]] = None):
        self.field = field
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValidationError(f"repeated variable in {self.variables}")
        clean: Dict[Monomial, Coeff] = {}
        for exponents, value in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(self.variables):
                raise ValidationError("exponent vector does not match the variables")
            if any(e < 0 for e in exponents):
                raise ValidationError("negative exponent")
            if isinstance(value, BaseCoeff):
                value = value.value
            coeff = field.convert(value)
            if coeff != 0:
                clean[exponents] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, field: BaseField, variables: Tuple[str, ...], terms: Dict[Monomial, Coeff]) -> "MPoly":
        poly = object.__new__(cls)
        poly.field = field
        poly.variables = variables
        poly.terms = terms
        return poly

    # ----------------------------------------------------------------- builders
    @classmethod
    def zero(cls, field: BaseField, variables: Sequence[str] = ()) -> "MPoly":
        return cls._raw(field, tuple(variables), {})

    @classmethod
    def constant(cls, field: BaseField, variables: Sequence[str], value) -> "MPoly":
        if isinstance(value, BaseCoeff):
            value = value.value
        coeff = field.convert(value)
        variables = tuple(variables)
        if coeff == 0:
            return cls._raw(field, variables, {})
        return cls._raw(field, variables, {(0,) * len(variables): coeff})

    @classmethod
    def variable(cls, field: BaseField, variables: Sequence[str], name: str) -> "MPoly":
        variables = tuple(variables)
        if name not in variables:
            variables = variables + (name,)
        exponents = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(field, variables, {exponents: field.one})

    # ---------------------------------------------------------------- queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Coeff:
        """Coefficient of the constant monomial"""
        return self.terms.get((0,) * len(self.variables), self.field.zero)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValidationError(f"unknown variable '{name}'")

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial"""
        if not self.terms:
            return -1
        if name not in self.variables:
            return 0
        k = self.variables.index(name)
        return max(e[k] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def used_variables(self) -> set:
        used = set()
        for exponents in self.terms:
            for name, e in zip(self.variables, exponents):
                if e:
                    used.add(name)
        return used

    def sorted_terms(self) -> List[Tuple[Monomial, Coeff]]:
        """Terms in descending graded-lex order"""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Monomial, Coeff]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exponents = max(self.terms, key=grlex_key)
        return exponents, self.terms[exponents]

    def __iter__(self) -> Iterator[Tuple[Monomial, Coeff]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    # --------------------------------------------------------------- contexts
    def with_variables(self, variables: Sequence[str]) -> "MPoly":
        """Re-embed into another variable list; every used variable must be present"""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        positions = []
        for name in self.variables:
            positions.append(variables.index(name) if name in variables else -1)
        width = len(variables)
        terms = {}
        for exponents, coeff in self.terms.items():
            target = [0] * width
            for k, e in enumerate(exponents):
                if e:
                    if positions[k] < 0:
                        raise ValidationError(
                            f"variable '{self.variables[k]}' missing from context {variables}"
                        )
                    target[positions[k]] = e
            terms[tuple(target)] = coeff
        return MPoly._raw(self.field, variables, terms)

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.field != self.field:
                raise ValidationError(f"cannot mix polynomials over {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction, BaseCoeff)):
            return MPoly.constant(self.field, self.variables, other)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    def _unify(self, other) -> Tuple["MPoly", "MPoly"]:
        other = self._coerce(other)
        if other.variables == self.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(merged), other.with_variables(merged)

    # ------------------------------------------------------------- arithmetic
    def __add__(self, other) -> "MPoly":
        a, b = self._unify(other)
        p = a.field.characteristic
        terms = dict(a.terms)
        for exponents, coeff in b.terms.items():
            value = terms.get(exponents, 0) + coeff
            if p:
                value %= p
            if value == 0:
                terms.pop(exponents, None)
            else:
                terms[exponents] = value
        return MPoly._raw(a.field, a.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        neg = self.field.neg
        return MPoly._raw(self.field, self.variables, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "MPoly":
        a, b = self._unify(other)
        if not a.terms or not b.terms:
            return MPoly._raw(a.field, a.variables, {})
        p = a.field.characteristic
        terms: Dict[Monomial, Coeff] = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                exponents = tuple(x + y for x, y in zip(ea, eb))
                value = terms.get(exponents, 0) + ca * cb
                if p:
                    value %= p
                terms[exponents] = value
        return MPoly._raw(a.field, a.variables, {e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.constant(self.field, self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, value) -> "MPoly":
        coeff = self.field.convert(value.value if isinstance(value, BaseCoeff) else value)
        if coeff == 0:
            return MPoly._raw(self.field, self.variables, {})
        mul = self.field.mul
        return MPoly._raw(self.field, self.variables, {e: mul(c, coeff) for e, c in self.terms.items()})

    def shift(self, name: str, n: int) -> "MPoly":
        """Multiply by ``name**n``"""
        poly = self if name in self.variables else self.with_variables(self.variables + (name,))
        if n == 0:
            return poly
        k = poly.variables.index(name)
        terms = {}
        for exponents, coeff in poly.terms.items():
            moved = list(exponents)
            moved[k] += n
            terms[tuple(moved)] = coeff
        return MPoly._raw(poly.field, poly.variables, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (MPoly, int, Fraction, BaseCoeff)):
            return NotImplemented
        a, b = self._unify(other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        named = frozenset(
            (tuple((v, e) for v, e in zip(self.variables, exponents) if e), coeff)
            for exponents, coeff in self.terms.items()
        )
        return hash(named)

    # ------------------------------------------------------------ structure
    def coefficient(self, name: str, power: int) -> "MPoly":
        """Coefficient of ``name**power``, as a polynomial in the other variables"""
        if name not in self.variables:
            return self if power == 0 else MPoly._raw(self.field, self.variables, {})
        k = self.variables.index(name)
        terms = {}
        for exponents, coeff in self.terms.items():
            if exponents[k] == power:
                terms[exponents[:k] + (0,) + exponents[k + 1:]] = coeff
        return MPoly._raw(self.field, self.variables, terms)

    def coefficients(self, name: str) -> Dict[int, "MPoly"]:
        """Split into ``{power: coefficient}`` with respect to one variable"""
        if name not in self.variables:
            return {0: self} if self.terms else {}
        k = self.variables.index(name)
        buckets: Dict[int, Dict[Monomial, Coeff]] = {}
        for exponents, coeff in self.terms.items():
            buckets.setdefault(exponents[k], {})[exponents[:k] + (0,) + exponents[k + 1:]] = coeff
        return {power: MPoly._raw(self.field, self.variables, terms) for power, terms in buckets.items()}

    def partial(self, name: str) -> "MPoly":
        """Formal partial derivative; exponents divisible by p vanish"""
        k = self.index(name)
        p = self.field.characteristic
        terms = {}
        for exponents, coeff in self.terms.items():
            e = exponents[k]
            if e == 0:
                continue
            value = coeff * e
            if p:
                value %= p
            if value == 0:
                continue
            lowered = exponents[:k] + (e - 1,) + exponents[k + 1:]
            terms[lowered] = value
        return MPoly._raw(self.field, self.variables, terms)

    def pseudo_divrem(self, divisor: "MPoly", name: str) -> Tuple["MPoly", "MPoly", "MPoly"]:
        """
        Pseudo-division in one variable

        Args:
            divisor: Nonzero polynomial
            name: Division variable

        Returns:
            ``(multiplier, quotient, remainder)`` with
            ``multiplier * self == quotient * divisor + remainder`` and the
            remainder's degree in ``name`` below the divisor's. The multiplier
            is a power of the divisor's leading coefficient (1 when that
            coefficient is a constant).
        """
        a, b = self._unify(divisor)
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if name not in a.variables:
            a, b = a.with_variables(a.variables + (name,)), b.with_variables(a.variables + (name,))
        d = b.degree(name)
        lc = b.coefficient(name, d)
        one = MPoly.constant(a.field, a.variables, 1)
        quotient = MPoly.zero(a.field, a.variables)
        remainder = a
        if lc.is_constant():
            inverse = a.field.inv(lc.constant_value())
            while not remainder.is_zero() and remainder.degree(name) >= d:
                e = remainder.degree(name)
                step = remainder.coefficient(name, e).scale(inverse).shift(name, e - d)
                quotient = quotient + step
                remainder = remainder - step * b
            return one, quotient, remainder
        multiplier = one
        while not remainder.is_zero() and remainder.degree(name) >= d:
            e = remainder.degree(name)
            step = remainder.coefficient(name, e).shift(name, e - d)
            remainder = remainder * lc - step * b
            quotient = quotient * lc + step
            multiplier = multiplier * lc
        return multiplier, quotient, remainder

    def divrem(self, divisor: "MPoly", name: str) -> Tuple["MPoly", "MPoly"]:
        """
        Division in ``name`` by a divisor whose leading coefficient is a constant
        """
        multiplier, quotient, remainder = self.pseudo_divrem(divisor, name)
        if not multiplier.is_constant():
            raise ValidationError(
                "leading coefficient is not a constant; use pseudo_divrem or poly_arith"
            )
        return quotient, remainder

    def map_coefficients(self, main: Iterable[str], fn: Callable[["MPoly"], "MPoly"]) -> "MPoly":
        """
        Apply ``fn`` to the coefficients of self seen as a polynomial in ``main``

        The coefficients are polynomials in the remaining variables; ``fn``
        receives each one and returns its image.
        """
        main = [name for name in main]
        for name in main:
            self.index(name)
        positions = [self.variables.index(name) for name in main]
        groups: Dict[Monomial, Dict[Monomial, Coeff]] = {}
        for exponents, coeff in self.terms.items():
            key = tuple(exponents[k] for k in positions)
            rest = list(exponents)
            for k in positions:
                rest[k] = 0
            groups.setdefault(key, {})[tuple(rest)] = coeff
        result = MPoly.zero(self.field, self.variables)
        for key, terms in groups.items():
            image = fn(MPoly._raw(self.field, self.variables, terms))
            monomial = MPoly.constant(self.field, self.variables, 1)
            for name, e in zip(main, key):
                monomial = monomial.shift(name, e)
            result = result + image * monomial
        return result

    def monomial_content(self) -> Monomial:
        """Componentwise minimum exponent over all terms"""
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(column) for column in zip(*self.terms))

    def divide_monomial(self, exponents: Monomial) -> "MPoly":
        terms = {}
        for own, coeff in self.terms.items():
            lowered = tuple(x - y for x, y in zip(own, exponents))
            if any(e < 0 for e in lowered):
                raise ValidationError("monomial does not divide the polynomial")
            terms[lowered] = coeff
        return MPoly._raw(self.field, self.variables, terms)

    # ------------------------------------------------------------- printing
    def format_monomial(self, exponents: Monomial) -> str:
        parts = []
        for name, e in zip(self.variables, exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exponents, coeff in self.sorted_terms():
            negative = self.field.characteristic == 0 and coeff < 0
            magnitude = -coeff if negative else coeff
            monomial = self.format_monomial(exponents)
            text = self.field.format(magnitude)
            if monomial:
                text = monomial if magnitude == 1 else f"{text}*{monomial}"
            if not pieces:
                pieces.append(f"-{text}" if negative else text)
            else:
                pieces.append(f" - {text}" if negative else f" + {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MPoly({self}, {self.field.name}{list(self.variables)})"


def univariate_gcd(a: MPoly, b: MPoly, name: str) -> MPoly:
    """Monic gcd of two polynomials that involve only ``name``"""
    a, b = a._unify(b)
    while not b.is_zero():
        _, r = a.divrem(b, name)
        a, b = b, r
    if a.is_zero():
        return a
    _, lc = a.leading_term()
    return a.scale(a.field.inv(lc))
