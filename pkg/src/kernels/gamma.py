"""
Index sets Γ(r) and Γ(r, s) with their lexicographic order
"""

from dataclasses import dataclass
from typing import List, Tuple

from ..utils.validators import ValidationError, split_indexed_symbol, validate_count


@dataclass(frozen=True, order=True)
class GammaIndex:
    """(ξ, i): derivative order ξ of variable i; dataclass order is the lex order"""

    xi: int
    i: int

    def name(self, letter: str = "a") -> str:
        return f"{letter}[{self.i}][{self.xi}]"

    def shifted(self, steps: int = 1) -> "GammaIndex":
        return GammaIndex(self.xi + steps, self.i)

    @property
    def column(self) -> int:
        return self.i

    def __str__(self) -> str:
        return f"({self.xi},{self.i})"


@dataclass(frozen=True, order=True)
class Gamma2Index:
    """(ξ, u, i): derivative order ξ and shift order u of variable i"""

    xi: int
    u: int
    i: int

    def name(self, letter: str = "a") -> str:
        return f"{letter}[{self.i}][{self.xi}][{self.u}]"

    def shifted(self, steps: int = 1) -> "Gamma2Index":
        return Gamma2Index(self.xi + steps, self.u, self.i)

    def sigma_shifted(self, steps: int = 1) -> "Gamma2Index":
        return Gamma2Index(self.xi, self.u + steps, self.i)

    @property
    def column(self) -> Tuple[int, int]:
        return (self.u, self.i)

    def __str__(self) -> str:
        return f"({self.xi},{self.u},{self.i})"


def gamma(r: int, n: int) -> List[GammaIndex]:
    """Γ(r) for n variables in lex order"""
    validate_count(r, "r")
    validate_count(n, "n", minimum=1)
    return [GammaIndex(xi, i) for xi in range(r + 1) for i in range(1, n + 1)]


def gamma2(r: int, s: int, n: int) -> List[Gamma2Index]:
    """Γ(r, s) for n variables in lex order"""
    validate_count(r, "r")
    validate_count(s, "s")
    validate_count(n, "n", minimum=1)
    return [
        Gamma2Index(xi, u, i)
        for xi in range(r + 1)
        for u in range(s + 1)
        for i in range(1, n + 1)
    ]


def parse_index(name: str, arity: int):
    """``a[i][ξ]`` to GammaIndex, ``a[i][ξ][u]`` to Gamma2Index; returns (letter, index)"""
    letter, indices = split_indexed_symbol(name, arity)
    if indices[0] < 1:
        raise ValidationError(f"variable number in '{name}' must be at least 1")
    if arity == 2:
        return letter, GammaIndex(indices[1], indices[0])
    return letter, Gamma2Index(indices[1], indices[2], indices[0])


def linear_before(a, b) -> bool:
    """a strictly below b in ξ within the same column"""
    return a.column == b.column and a.xi < b.xi


def product_before(a: Gamma2Index, b: Gamma2Index) -> bool:
    """a strictly below b in the product order on (ξ, u), same variable"""
    return a.i == b.i and a.xi <= b.xi and a.u <= b.u and (a.xi, a.u) != (b.xi, b.u)
