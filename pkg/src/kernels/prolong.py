"""
Prolongation of kernels one derivative order at a time
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..operators.derivation import Derivation
from ..tower.tower import GenSpec
from ..utils.errors import InseparableLeaderTooHigh, KernelError
from ..utils.validators import validate_count
from .diff_kernel import DiffKernel, classify_leaders, kernel_verify, split_images
from .gamma import GammaIndex
from .leaders import LeaderKind, LeaderReport
from .presentation import Algebraic, Defined, IndexedKernel, Transcendental, is_generator

logger = logging.getLogger(__name__)


def extend_by_derivation(kernel: IndexedKernel, pairs: Sequence[Tuple[object, object]],
                         shift: Callable, name_for: Callable,
                         inseparable_error: Callable) -> Tuple[Dict, Dict]:
    """
    Define new entries as derivatives of old ones

    ``pairs`` lists ``(source, new)`` in lex order of ``new``. A transcendental
    source gets a fresh transcendental (nothing is forced); a separable
    algebraic source gets the forced value -f^δ(a)/f'(a); a Defined source
    gets δ of its value. The derivation on the old tower maps every generator
    ``g`` to ``value(shift(g))`` once that value is known.

    Returns:
        ``(entries, names)`` of the extended presentation

    Raises:
        Whatever ``inseparable_error(source)`` builds, for an inseparable source
    """
    entries = dict(kernel.entries)
    names = dict(kernel.names)
    tower = kernel.tower
    base_images, gen_images = split_images(kernel.derivation)
    for index, entry in kernel.entries.items():
        if is_generator(entry) and shift(index) in kernel.entries:
            gen_images[kernel.names[index]] = kernel.value(shift(index))

    for source, new in pairs:
        entry = kernel.entries[source]
        source_name = kernel.names[source]
        name = name_for(new)
        names[new] = name
        if isinstance(entry, Transcendental):
            tower = tower.extend(GenSpec(name))
            entries[new] = Transcendental()
            gen_images[source_name] = tower.gen(name)
            logger.debug("%s: new transcendental %s", new, name)
            continue
        if isinstance(entry, Algebraic) and not entry.separable:
            raise inseparable_error(source)
        d = Derivation(kernel.tower, base_images, gen_images, tower)
        if isinstance(entry, Algebraic):
            value = d.forced_value(source_name)
            gen_images[source_name] = value
        else:
            value = d.apply(kernel.value(source))
        entries[new] = Defined(value)
        logger.debug("%s: forced %s = %s", new, name, value)
    return entries, names


def kernel_prolong(k: DiffKernel, steps: int) -> DiffKernel:
    """
    Extend a kernel by ``steps`` derivative orders

    Args:
        k: Valid kernel whose inseparable leaders all sit below the top level
        steps: Number of new levels

    Returns:
        The prolonged kernel, re-verified

    Raises:
        InseparableLeaderTooHigh: If an inseparable leader sits at level r
        KernelError: If the result fails verification
    """
    steps = validate_count(steps, "steps")
    for index in classify_leaders(k).inseparable():
        if index.xi >= k.r:
            raise InseparableLeaderTooHigh(index)
    kernel = k
    for _ in range(steps):
        top = kernel.r
        pairs = [(GammaIndex(top, i), GammaIndex(top + 1, i)) for i in range(1, kernel.n + 1)]
        entries, names = extend_by_derivation(
            kernel, pairs, GammaIndex.shifted, kernel.name_for, InseparableLeaderTooHigh
        )
        kernel = kernel.with_entries(entries, top + 1, names)
        logger.info("prolonged kernel to length %d", kernel.r)
    if steps:
        result = kernel_verify(kernel)
        if not result.ok:
            raise KernelError("prolonged kernel fails verification", result.violations)
    return kernel


@dataclass(frozen=True)
class ColumnFinding:
    """What a prolonged column shows for one variable"""

    i: int
    first_separable: Optional[int]
    defined_above: bool
    inseparable: int
    transcendental: int


@dataclass
class FinitenessReport:
    kernel: DiffKernel
    leaders: LeaderReport
    columns: List[ColumnFinding] = field(default_factory=list)

    def minimal_separable(self) -> set:
        return self.leaders.minimal_separable()

    def inseparable(self) -> set:
        return self.leaders.inseparable()


def finiteness_probe(k: DiffKernel, depth: int) -> FinitenessReport:
    """
    Prolong to ``depth`` and report, per variable, where the first separable
    leader sits and whether every entry above it lies in the field of its
    predecessors. Evidence at finite depth only.
    """
    depth = validate_count(depth, "depth")
    kernel = kernel_prolong(k, max(0, depth - k.r))
    leaders = classify_leaders(kernel)
    report = FinitenessReport(kernel, leaders)
    for i in range(1, kernel.n + 1):
        column = kernel.column(i)
        separable = [index.xi for index in column if leaders.kind(index) is LeaderKind.SEPARABLE]
        first = min(separable) if separable else None
        above = [index for index in column if first is not None and index.xi > first]
        report.columns.append(ColumnFinding(
            i=i,
            first_separable=first,
            defined_above=all(isinstance(kernel.entries[index], Defined) for index in above),
            inseparable=sum(1 for index in column if leaders.kind(index) is LeaderKind.INSEPARABLE),
            transcendental=sum(1 for index in column if leaders.kind(index) is LeaderKind.NON_LEADER),
        ))
    logger.info("finiteness report at depth %d: %s", kernel.r, report.columns)
    return report
