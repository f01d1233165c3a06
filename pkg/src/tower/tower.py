"""
Presented field-extension towers over F_p(t_1..t_k) or Q(t_1..t_k)
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..arith.field import BaseCoeff, BaseField
from ..arith.mpoly import MPoly, univariate_gcd
from ..arith.ratexpr import RatExpr
from ..utils.validators import (
    UnresolvedSymbol,
    ValidationError,
    validate_symbol_name,
    validate_unique_names,
)
from .element import Element
from .upoly import ElementPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GenSpec:
    """
    A generator: transcendental when ``minpoly`` is None, otherwise algebraic
    with a monic minimal polynomial over the generators before it
    """

    name: str
    minpoly: Optional[ElementPoly] = None
    separable: bool = dataclass_field(init=False, default=True)

    def __post_init__(self):
        validate_symbol_name(self.name, "generator")
        if self.minpoly is not None:
            problem = self.minpoly.minimal_error()
            if problem:
                raise ValidationError(f"generator '{self.name}': {problem}")
            object.__setattr__(self, "minpoly", self.minpoly.renamed(self.name))
            object.__setattr__(self, "separable", not self.minpoly.derivative().is_zero())

    @classmethod
    def transcendental(cls, name: str) -> "GenSpec":
        return cls(name)

    @property
    def is_algebraic(self) -> bool:
        return self.minpoly is not None

    @property
    def degree(self) -> Optional[int]:
        return None if self.minpoly is None else self.minpoly.degree()

    @property
    def kind(self) -> str:
        if self.minpoly is None:
            return "transcendental"
        return "separable" if self.separable else "inseparable"

    def __str__(self) -> str:
        if self.minpoly is None:
            return f"{self.name} trans"
        return f"{self.name} alg {self.minpoly}"


def _slice_gcd(num: MPoly, den: MPoly, name: str) -> MPoly:
    """gcd of ``den`` (univariate in ``name``) with every ``name``-slice of ``num``"""
    k = num.variables.index(name)
    slices: Dict[tuple, Dict[tuple, object]] = {}
    for exponents, coeff in num.terms.items():
        key = exponents[:k] + (0,) + exponents[k + 1:]
        only = tuple(e if j == k else 0 for j, e in enumerate(exponents))
        slices.setdefault(key, {})[only] = coeff
    g = den
    for terms in slices.values():
        g = univariate_gcd(g, MPoly(num.field, num.variables, terms), name)
        if g.total_degree() <= 0:
            break
    return g


class Tower:
    """
    K(g_1, ..., g_m) with K = F(t_1, ..., t_k) and F a prime field or Q.

    Generators are ordered; every minimal polynomial only refers to base
    indeterminates and earlier generators. Towers are immutable and compare
    by a name-preserving structural signature.
    """

    def __init__(self, field: BaseField, base: Sequence[str] = (), gens: Iterable[GenSpec] = ()):
        self.field = field
        self.base = tuple(base)
        self.gens: Tuple[GenSpec, ...] = tuple(gens)
        for name in self.base:
            validate_symbol_name(name, "base indeterminate")
        self.gen_names = tuple(g.name for g in self.gens)
        self.variables = self.base + self.gen_names
        validate_unique_names(self.variables, "symbol")
        self._positions = {name: k for k, name in enumerate(self.variables)}
        self._specs = {g.name: g for g in self.gens}
        self._algebraic = frozenset(g.name for g in self.gens if g.is_algebraic)
        self._one = MPoly.constant(field, self.variables, 1)
        self._cache: Dict[tuple, object] = {}
        self._relations: List[Tuple[str, MPoly, int]] = []
        seen = set(self.base)
        for g in self.gens:
            if g.is_algebraic:
                self._relations.append((g.name, self._cleared_relation(g, seen), g.degree))
            seen.add(g.name)
        self._relations.reverse()
        self.signature = (
            field,
            self.base,
            tuple((g.name, None if g.minpoly is None else str(g.minpoly)) for g in self.gens),
        )

    def _cleared_relation(self, g: GenSpec, allowed: set) -> MPoly:
        """Minimal polynomial times the product of its distinct coefficient denominators"""
        for c in g.minpoly.coeffs:
            stray = c.used_symbols() - allowed
            if stray:
                raise ValidationError(
                    f"minimal polynomial of '{g.name}' refers to {sorted(stray)} "
                    "which are not earlier symbols"
                )
        if g.minpoly.domain.field != self.field:
            raise ValidationError(f"minimal polynomial of '{g.name}' is over another field")
        denominators: List[MPoly] = []
        for c in g.minpoly.coeffs:
            den = c.den.with_variables(self.variables)
            if not den.is_constant() and den not in denominators:
                denominators.append(den)
        relation = MPoly.zero(self.field, self.variables)
        for k, c in enumerate(g.minpoly.coeffs):
            if c.is_zero():
                continue
            den = c.den.with_variables(self.variables)
            term = c.num.with_variables(self.variables)
            if den.is_constant():
                term = term.scale(self.field.inv(den.constant_value()))
            for other in denominators:
                if other != den:
                    term = term * other
            relation = relation + term.shift(g.name, k)
        return relation

    # --------------------------------------------------------------- lookup
    def position(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise UnresolvedSymbol(name, str(self))

    def spec(self, name: str) -> GenSpec:
        try:
            return self._specs[name]
        except KeyError:
            raise UnresolvedSymbol(name, str(self))

    def has(self, name: str) -> bool:
        return name in self._positions

    def algebraic_names(self) -> frozenset:
        return self._algebraic

    def free_names(self) -> Tuple[str, ...]:
        return tuple(v for v in self.variables if v not in self._algebraic)

    def is_separable(self, name: str) -> bool:
        return self.spec(name).separable

    # --------------------------------------------------------- construction
    def extend(self, spec: GenSpec) -> "Tower":
        if spec.name in self._positions:
            raise ValidationError(f"generator name '{spec.name}' is already used")
        tower = Tower(self.field, self.base, self.gens + (spec,))
        logger.debug("extended %s by %s", self, spec)
        return tower

    def restrict(self, names: Iterable[str]) -> "Tower":
        """Sub-tower on a selection of generators, keeping their order"""
        wanted = set(names)
        for name in wanted:
            self.spec(name)
        key = ("restrict", frozenset(wanted))
        if key not in self._cache:
            self._cache[key] = Tower(self.field, self.base, [g for g in self.gens if g.name in wanted])
        return self._cache[key]

    def prefix(self, name: str) -> "Tower":
        """The tower of the generators before ``name``"""
        index = self.gen_names.index(self.spec(name).name)
        return self.restrict(self.gen_names[:index])

    def coefficient_tower(self, name: str) -> "Tower":
        """
        Tower for coefficients of polynomials in ``name``: everything except
        ``name`` and the algebraic generators after it
        """
        if name in self.base:
            return self.restrict(self.gen_names).without_base(name)
        index = self.gen_names.index(self.spec(name).name)
        keep = [
            g.name for k, g in enumerate(self.gens)
            if k < index or (k > index and not g.is_algebraic)
        ]
        return self.restrict(keep)

    def without_base(self, name: str) -> "Tower":
        key = ("without_base", name)
        if key not in self._cache:
            self._cache[key] = Tower(self.field, [b for b in self.base if b != name], self.gens)
        return self._cache[key]

    # -------------------------------------------------------------- elements
    def zero(self) -> Element:
        return Element(self, MPoly.zero(self.field, self.variables), self._one)

    def one(self) -> Element:
        return Element(self, self._one, self._one)

    def const(self, value) -> Element:
        if isinstance(value, BaseCoeff):
            value = value.value
        return self.tidy(MPoly.constant(self.field, self.variables, value), self._one)

    def gen(self, name: str) -> Element:
        """The element of a base indeterminate or generator"""
        self.position(name)
        return Element(self, MPoly.variable(self.field, self.variables, name), self._one)

    symbol = gen

    def from_mpoly(self, poly: MPoly) -> Element:
        return self.element(poly)

    def element(self, num, den=None) -> Element:
        """
        Build an element from a numerator and denominator in this tower's symbols

        Both may be MPoly values over any subset of the symbols; a RatExpr is
        accepted as ``num``. Denominators that involve algebraic generators
        are rationalized by inversion.
        """
        if isinstance(num, RatExpr):
            num, den = num.num, num.den if den is None else num.den * den
        try:
            num = num.with_variables(self.variables)
            den = self._one if den is None else den.with_variables(self.variables)
        except ValidationError:
            missing = (num.used_variables() | (den.used_variables() if den is not None else set())) \
                - set(self.variables)
            raise UnresolvedSymbol(sorted(missing)[0] if missing else "?", str(self))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.used_variables() & self._algebraic:
            return self.element(num) * self.element(den).inverse()
        return self.reduce(num, den)

    def coerce(self, value) -> Element:
        """Bring an element of a related tower, a coefficient or an MPoly into this tower"""
        if isinstance(value, Element):
            if value.owner is self:
                return value
            if value.owner.field != self.field:
                raise ValidationError(f"cannot move an element of {value.owner} into {self}")
            if value.owner == self:
                return Element(self, value.num.with_variables(self.variables),
                               value.den.with_variables(self.variables))
            return self.element(value.num, value.den)
        if isinstance(value, (int, Fraction, BaseCoeff)):
            return self.const(value)
        if isinstance(value, MPoly):
            return self.element(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into a tower element")

    def common(self, other: "Tower") -> "Tower":
        """The larger of two towers when one contains the other's symbols"""
        if other is self or other == self:
            return self
        if self.field != other.field:
            raise ValidationError(f"towers over different fields: {self}, {other}")
        mine, theirs = set(self.variables), set(other.variables)
        if theirs <= mine:
            return self
        if mine <= theirs:
            return other
        raise ValidationError(f"elements of {self} and {other} cannot be combined")

    # ------------------------------------------------------------ normalizing
    def reduce(self, num: MPoly, den: MPoly) -> Element:
        """Triangular reduction of the numerator, top algebraic generator first"""
        for name, relation, degree in self._relations:
            if num.degree(name) >= degree:
                multiplier, _, num = num.pseudo_divrem(relation, name)
                if not multiplier.is_constant():
                    den = den * multiplier
        return self.tidy(num, den)

    def tidy(self, num: MPoly, den: MPoly) -> Element:
        """Cancel what is cheap to cancel and make the denominator monic"""
        one = self.field.one
        if num.is_zero():
            return Element(self, num, self._one)
        if not den.is_constant():
            common = tuple(min(a, b) for a, b in zip(num.monomial_content(), den.monomial_content()))
            if any(common):
                num, den = num.divide_monomial(common), den.divide_monomial(common)
            used = den.used_variables()
            if len(used) == 1:
                name = next(iter(used))
                g = _slice_gcd(num, den, name)
                if g.total_degree() > 0:
                    num, _ = num.divrem(g, name)
                    den, _ = den.divrem(g, name)
        if den.is_constant():
            c = den.constant_value()
            if c != one:
                num = num.scale(self.field.inv(c))
            return Element(self, num, self._one)
        _, lc = den.leading_term()
        if lc != one:
            inverse = self.field.inv(lc)
            num, den = num.scale(inverse), den.scale(inverse)
        return Element(self, num, den)

    # -------------------------------------------------------------- identity
    def __eq__(self, other) -> bool:
        if not isinstance(other, Tower):
            return NotImplemented
        return self is other or self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    def __str__(self) -> str:
        text = f"{self.field.name}({', '.join(self.base)})" if self.base else self.field.name
        if self.gens:
            text += f"({', '.join(self.gen_names)})"
        return text

    def __repr__(self) -> str:
        return f"Tower({self})"

    def describe(self) -> List[str]:
        """One line per generator with its kind and minimal polynomial"""
        return [f"{g.name}: {g.kind}" + (f", minpoly {g.minpoly}" if g.minpoly else "") for g in self.gens]


def tower_extend(t: Tower, g: GenSpec) -> Tower:
    """Append a generator; the original tower is unchanged"""
    tower = t.extend(g)
    if g.is_algebraic:
        logger.info("adjoined %s with minimal polynomial %s (%s)", g.name, g.minpoly, g.kind)
    else:
        logger.info("adjoined transcendental %s", g.name)
    return tower


def algebraic(name: str, tower: Tower, coeffs: Sequence) -> GenSpec:
    """Shorthand for an algebraic GenSpec with coefficients given low degree first"""
    return GenSpec(name, ElementPoly(tower, coeffs, name))
