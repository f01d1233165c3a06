"""
Univariate polynomials whose coefficients are elements of a tower
"""

from typing import Callable, List, Optional, Sequence, Tuple


class ElementPoly:
    """
    Dense univariate polynomial over a presented tower

    Coefficients are stored low degree first, trailing zeros trimmed. The
    variable name is only used for printing.
    """

    __slots__ = ("domain", "coeffs", "variable")

    def __init__(self, domain, coeffs: Sequence, variable: str = "x"):
        self.domain = domain
        converted = [domain.coerce(c) for c in coeffs]
        while converted and converted[-1].is_zero():
            converted.pop()
        self.coeffs: Tuple = tuple(converted)
        self.variable = variable

    @classmethod
    def monomial(cls, domain, degree: int, coeff=1, variable: str = "x") -> "ElementPoly":
        return cls(domain, [0] * degree + [coeff], variable)

    def _like(self, coeffs) -> "ElementPoly":
        return ElementPoly(self.domain, coeffs, self.variable)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            return self.domain.zero()
        return self.coeffs[-1]

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.domain.zero()

    def _coerce(self, other) -> "ElementPoly":
        if isinstance(other, ElementPoly):
            if other.domain is not self.domain and other.domain != self.domain:
                return other.lift(self.domain)
            return other
        return self._like([other])

    def __add__(self, other) -> "ElementPoly":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return self._like([self.coefficient(k) + other.coefficient(k) for k in range(size)])

    __radd__ = __add__

    def __neg__(self) -> "ElementPoly":
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other) -> "ElementPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ElementPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "ElementPoly":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return self._like([])
        out = [self.domain.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ElementPoly":
        result = self._like([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementPoly):
            return NotImplemented
        other = self._coerce(other)
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def divrem(self, divisor: "ElementPoly") -> Tuple["ElementPoly", "ElementPoly"]:
        """Euclidean division; the divisor's leading coefficient is inverted in the domain"""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        inverse = divisor.leading().inverse()
        d = divisor.degree()
        remainder = list(self.coeffs)
        quotient = [self.domain.zero()] * max(len(remainder) - d, 0)
        for k in range(len(remainder) - 1, d - 1, -1):
            c = remainder[k]
            if c.is_zero():
                continue
            factor = c * inverse
            quotient[k - d] = factor
            for j, b in enumerate(divisor.coeffs):
                remainder[k - d + j] = remainder[k - d + j] - factor * b
        return self._like(quotient), self._like(remainder[:d])

    def monic(self) -> "ElementPoly":
        if self.is_zero():
            return self
        inverse = self.leading().inverse()
        return self._like([c * inverse for c in self.coeffs])

    def gcdex(self, other: "ElementPoly") -> Tuple["ElementPoly", "ElementPoly", "ElementPoly"]:
        """
        Extended Euclidean algorithm

        Returns:
            ``(g, s, t)`` with ``s*self + t*other == g`` and g monic (or zero
            when both inputs are zero)
        """
        other = self._coerce(other)
        r0, r1 = self, other
        s0, s1 = self._like([1]), self._like([])
        t0, t1 = self._like([]), self._like([1])
        while not r1.is_zero():
            q, r = r0.divrem(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inverse = r0.leading().inverse()
        return r0 * inverse, s0 * inverse, t0 * inverse

    def derivative(self) -> "ElementPoly":
        return self._like([c * k for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, value):
        """Horner evaluation; coefficients are lifted into the value's tower"""
        target = value.owner
        result = target.zero()
        for c in reversed(self.coeffs):
            result = result * value + target.coerce(c)
        return result

    def map_coeffs(self, fn: Callable, domain=None) -> "ElementPoly":
        """Apply ``fn`` to every coefficient; the images live in ``domain``"""
        return ElementPoly(domain or self.domain, [fn(c) for c in self.coeffs], self.variable)

    def lift(self, domain) -> "ElementPoly":
        return ElementPoly(domain, self.coeffs, self.variable)

    def renamed(self, variable: str) -> "ElementPoly":
        return ElementPoly(self.domain, self.coeffs, variable)

    def terms(self) -> List[Tuple[int, object]]:
        """Nonzero ``(degree, coefficient)`` pairs, highest degree first"""
        return [(k, c) for k, c in reversed(list(enumerate(self.coeffs))) if not c.is_zero()]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for k, c in self.terms():
            power = "" if k == 0 else (self.variable if k == 1 else f"{self.variable}^{k}")
            text = str(c)
            compound = len(c.num) > 1 or not c.den.is_constant()
            if power:
                if c == 1:
                    text = power
                elif c == -1:
                    text = f"-{power}"
                else:
                    text = f"({text})*{power}" if compound else f"{text}*{power}"
            elif compound and pieces:
                text = f"({text})"
            if pieces and text.startswith("-") and not text.startswith("-("):
                pieces.append(f" - {text[1:]}")
            elif pieces:
                pieces.append(f" + {text}")
            else:
                pieces.append(text)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"ElementPoly({self} over {self.domain})"

    def minimal_error(self) -> Optional[str]:
        """Reason this polynomial cannot be a minimal polynomial, or None"""
        if self.degree() < 1:
            return "minimal polynomial must have degree at least 1"
        if self.leading() != 1:
            return "minimal polynomial must be monic"
        return None
