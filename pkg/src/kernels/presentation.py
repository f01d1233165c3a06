"""
Presented kernels: tagged entries over an index set and the tower they span
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Generic, Iterable, List, Mapping, Optional, TypeVar, Union

from ..operators.derivation import Derivation
from ..tower.element import Element
from ..tower.tower import GenSpec, Tower
from ..tower.upoly import ElementPoly
from ..utils.validators import UnresolvedSymbol, ValidationError

logger = logging.getLogger(__name__)

Index = TypeVar("Index")


@dataclass(frozen=True)
class Transcendental:
    """A new generator, transcendental over everything before it"""

    kind = "trans"

    def symbols(self) -> set:
        return set()

    def __str__(self) -> str:
        return "trans"


@dataclass(frozen=True, eq=False)
class Algebraic:
    """A new generator with a monic minimal polynomial over everything before it"""

    minpoly: ElementPoly
    kind = "alg"

    @property
    def separable(self) -> bool:
        return not self.minpoly.derivative().is_zero()

    def symbols(self) -> set:
        found = set()
        for c in self.minpoly.coeffs:
            found |= c.used_symbols()
        return found

    def __str__(self) -> str:
        return f"alg {self.minpoly}"


@dataclass(frozen=True, eq=False)
class Defined:
    """An element of the field generated by the entries before it; no new generator"""

    value: Element
    kind = "value"

    def symbols(self) -> set:
        return self.value.used_symbols()

    def __str__(self) -> str:
        return f"= {self.value}"


Entry = Union[Transcendental, Algebraic, Defined]


def is_generator(entry: Entry) -> bool:
    return not isinstance(entry, Defined)


@dataclass(frozen=True)
class KernelViolation:
    """
    A failed kernel condition

    ``operator`` is ``delta`` or ``sigma`` for a shift map condition and
    ``structure`` for presentation problems.
    """

    index: object
    operator: str
    reason: str
    lhs: Optional[Element] = None
    expected: Optional[Element] = None

    def __str__(self) -> str:
        where = str(self.index) if self.index is not None else "base"
        return f"{self.operator} at {where}: {self.reason}"


@dataclass
class VerificationResult:
    kernel: "IndexedKernel"
    violations: List[KernelViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def build_tower(base: Tower, entries: Mapping, names: Mapping) -> tuple:
    """
    Adjoin the generator entries to ``base`` in the given order

    Returns:
        ``(tower, values)`` with every entry's value coerced into the tower

    Raises:
        ValidationError: If an entry refers to a symbol not yet available
    """
    tower = base
    values = {}
    for index, entry in entries.items():
        name = names[index]
        try:
            if isinstance(entry, Transcendental):
                tower = tower.extend(GenSpec(name))
                values[index] = tower.gen(name)
            elif isinstance(entry, Algebraic):
                tower = tower.extend(GenSpec(name, entry.minpoly))
                values[index] = tower.gen(name)
            else:
                values[index] = tower.coerce(entry.value)
        except UnresolvedSymbol as exc:
            raise ValidationError(f"entry {index} ({name}) refers to '{exc.name}' "
                                  "which does not come before it") from exc
    return tower, {index: tower.coerce(v) for index, v in values.items()}


class IndexedKernel(Generic[Index]):
    """
    Entries over an index set, adjoined to a differential base in lex order.

    ``names`` maps every index to its symbol; Defined entries keep their
    name for display only, since they add no generator.
    """

    def __init__(self, base: Tower, derivation: Optional[Derivation], entries: Mapping,
                 names: Mapping):
        missing = set(entries) - set(names)
        if missing:
            raise ValidationError(f"entries without a name: {sorted(missing)}")
        if derivation is not None and derivation.owner != base:
            raise ValidationError(f"derivation is defined on {derivation.owner}, not on {base}")
        self.base = base
        self.derivation = derivation
        self.entries: Dict = dict(sorted(entries.items()))
        self.names: Dict = {index: names[index] for index in self.entries}
        self.tower, self._values = build_tower(base, self.entries, self.names)
        self._index_of = {self.names[index]: index for index in self.entries}

    def indices(self) -> List:
        return list(self.entries)

    def value(self, index) -> Element:
        try:
            return self._values[index]
        except KeyError:
            raise ValidationError(f"index {index} is outside the kernel")

    def entry(self, index) -> Entry:
        return self.entries[index]

    def index_of(self, name: str):
        """Index of a generator name, or None for base symbols"""
        return self._index_of.get(name)

    def gen_names(self, selector: Callable = lambda index: True) -> List[str]:
        return [self.names[index] for index, entry in self.entries.items()
                if is_generator(entry) and selector(index)]

    def level_tower(self, selector: Callable) -> Tower:
        """The sub-tower of the generator entries whose index ``selector`` accepts"""
        return self.tower.restrict(list(self.base.gen_names) + self.gen_names(selector))

    def describe(self) -> List[str]:
        return [f"{self.names[index]} {entry}" for index, entry in self.entries.items()]

    def __iter__(self):
        return iter(self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)


def closure_violations(kernel: IndexedKernel, allowed: Callable, operator: str,
                       indices: Iterable) -> List[KernelViolation]:
    """
    Entries among ``indices`` whose presentation uses a generator that
    ``allowed`` rejects
    """
    found = []
    for index in indices:
        for symbol in sorted(kernel.entries[index].symbols()):
            other = kernel.index_of(symbol)
            if other is not None and not allowed(other):
                found.append(KernelViolation(
                    index, "structure",
                    f"{operator}-shift domain is not closed: {kernel.names[index]} uses {symbol}",
                ))
                break
    return found
