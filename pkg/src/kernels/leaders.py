"""
Leader classification from presentation tags
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, List, Mapping

from .presentation import Algebraic, Defined, Entry, Transcendental


class LeaderKind(str, Enum):
    NON_LEADER = "non-leader"
    SEPARABLE = "separable"
    INSEPARABLE = "inseparable"


def entry_kind(entry: Entry) -> LeaderKind:
    """
    Leader kind read from the tag

    A Defined entry is rational over its predecessors, hence a separable leader.
    """
    if isinstance(entry, Transcendental):
        return LeaderKind.NON_LEADER
    if isinstance(entry, Defined):
        return LeaderKind.SEPARABLE
    if isinstance(entry, Algebraic) and entry.separable:
        return LeaderKind.SEPARABLE
    return LeaderKind.INSEPARABLE


@dataclass(frozen=True)
class LeaderEntry:
    index: object
    kind: LeaderKind
    minimal: bool = False

    @property
    def label(self) -> str:
        if self.kind is LeaderKind.SEPARABLE and self.minimal:
            return "minimal-separable"
        return self.kind.value


@dataclass
class LeaderReport:
    """Classification per index, in lex order"""

    entries: Dict[object, LeaderEntry] = field(default_factory=dict)

    def kind(self, index) -> LeaderKind:
        return self.entries[index].kind

    def minimal_separable(self) -> set:
        return {index for index, e in self.entries.items()
                if e.kind is LeaderKind.SEPARABLE and e.minimal}

    def separable(self) -> set:
        return {index for index, e in self.entries.items() if e.kind is LeaderKind.SEPARABLE}

    def inseparable(self) -> set:
        return {index for index, e in self.entries.items() if e.kind is LeaderKind.INSEPARABLE}

    def non_leaders(self) -> set:
        return {index for index, e in self.entries.items() if e.kind is LeaderKind.NON_LEADER}

    def rows(self) -> List[dict]:
        return [{"index": str(index), "kind": e.kind.value, "minimal": e.minimal, "label": e.label}
                for index, e in self.entries.items()]

    def __len__(self) -> int:
        return len(self.entries)


def classify_entries(entries: Mapping[object, Entry], before: Callable,
                     indices: Iterable = None) -> LeaderReport:
    """
    Classify ``indices`` (default: all) of ``entries``

    A separable leader is minimal when no index strictly ``before`` it in the
    minimality order is a separable leader.

    Args:
        entries: Tagged entries keyed by index
        before: Strict minimality order on indices
        indices: Subset to classify

    Returns:
        LeaderReport
    """
    chosen = sorted(entries) if indices is None else sorted(indices)
    kinds = {index: entry_kind(entries[index]) for index in chosen}
    separable = [index for index, kind in kinds.items() if kind is LeaderKind.SEPARABLE]
    report = LeaderReport()
    for index in chosen:
        kind = kinds[index]
        minimal = kind is LeaderKind.SEPARABLE and not any(before(other, index) for other in separable)
        report.entries[index] = LeaderEntry(index, kind, minimal)
    return report
