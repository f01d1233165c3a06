"""
Checks of the realizability hypotheses for dd-kernels in positive characteristic
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from ..kernels.gamma import Gamma2Index, GammaIndex
from ..kernels.presentation import Algebraic, Defined, Transcendental
from ..tower.element import Element
from ..utils.errors import HypothesisViolation
from .dd_kernel import DDKernel
from .prolong import check_locality

logger = logging.getLogger(__name__)

TAG_TRUST = "transcendental/algebraic tags of the presentation"


@dataclass
class Verdict:
    """One hypothesis: whether it holds, what shows it, and which tags it trusts"""

    name: str
    ok: bool
    detail: str = ""
    witness: Optional[str] = None
    relied_on: List[str] = field(default_factory=list)


@dataclass
class DDHypothesisReport:
    M: int
    I: List[GammaIndex]
    enumeration: List[Gamma2Index]
    t: int
    d: int
    m: int
    counted_d: int
    verdicts: List[Verdict] = field(default_factory=list)

    @property
    def green(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def verdict(self, name: str) -> Verdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def failures(self) -> List[Verdict]:
        return [v for v in self.verdicts if not v.ok]


def _generator_name(k: DDKernel, index: Gamma2Index) -> Optional[str]:
    """The transcendental generator an entry is, or equals as a Defined value"""
    entry = k.entries[index]
    if isinstance(entry, Transcendental):
        return k.names[index]
    if isinstance(entry, Defined):
        name = entry.value.is_variable()
        other = k.index_of(name) if name else None
        if other is not None and isinstance(k.entries[other], Transcendental):
            return name
    return None


def _divisible_use(e: Element, powers: Set[str], p: int) -> Set[str]:
    """Symbols of ``e`` outside ``powers``, or {"<power>"} when a power is not a multiple of p"""
    used = set()
    for poly in (e.num, e.den):
        for exponents, _ in poly.terms.items():
            for name, exponent in zip(poly.variables, exponents):
                if not exponent:
                    continue
                if name in powers:
                    if exponent % p:
                        used.add(f"{name}^{exponent}")
                else:
                    used.add(name)
    return used


def _entry_uses(k: DDKernel, index: Gamma2Index, powers: Set[str], p: int) -> Set[str]:
    entry = k.entries[index]
    if isinstance(entry, Defined):
        return _divisible_use(entry.value, powers, p)
    used = set()
    for c in entry.minpoly.coeffs:
        used |= _divisible_use(c, powers, p)
    return used


def certify_separable(k: DDKernel, allowed: Set[str], targets: Iterable[Gamma2Index],
                      powers: Set[str] = frozenset(), p: int = 0) -> Tuple[bool, Optional[Gamma2Index]]:
    """
    Fixpoint: an entry is separably algebraic over the field of ``allowed``
    when it is Defined, or separable algebraic, over symbols already certified

    Symbols in ``powers`` may only occur with exponents divisible by ``p``.

    Returns:
        ``(all targets certified, first uncertified target)``
    """
    known = set(allowed)
    certified: Set[Gamma2Index] = set()
    changed = True
    while changed:
        changed = False
        for index, entry in k.entries.items():
            if index in certified:
                continue
            if isinstance(entry, Transcendental):
                if k.names[index] in known and k.names[index] not in powers:
                    certified.add(index)
                    changed = True
                continue
            if isinstance(entry, Algebraic) and not entry.separable:
                continue
            if _entry_uses(k, index, powers, p) <= known:
                certified.add(index)
                if isinstance(entry, Algebraic):
                    known.add(k.names[index])
                changed = True
    for index in targets:
        if index not in certified:
            return False, index
    return True, None


def dd_hypothesis_check(k: DDKernel, M: int, I: Iterable, enumeration: Sequence[Gamma2Index],
                        t: int, d: int) -> DDHypothesisReport:
    """
    Evaluate every hypothesis of the realization theorem for the supplied data

    Args:
        k: Valid dd-kernel
        M: Locality bound
        I: Pairs (ξ, i) whose columns form the independent set B
        enumeration: x_1..x_m, a permutation of a[i][ξ][u] for (ξ, i) outside I, u <= s - 1
        t: Number of x's in the separating basis
        d: Expected transcendence degree

    Returns:
        DDHypothesisReport; nothing is raised for failed hypotheses
    """
    n, r, s = k.n, k.r, k.s
    p = k.base.field.characteristic
    chosen = sorted(GammaIndex(*pair) if isinstance(pair, tuple) else pair for pair in I)
    enumeration = list(enumeration)
    complement = [GammaIndex(xi, i) for xi in range(M + 1) for i in range(1, n + 1)
                  if GammaIndex(xi, i) not in chosen]
    verdicts: List[Verdict] = []

    need_s = (M + 1) * n
    verdicts.append(Verdict("bound-s", s >= need_s, f"s = {s}, (M+1)n = {need_s}",
                            None if s >= need_s else "s"))
    need_r = (M + 1) * (n * s + 1)
    verdicts.append(Verdict("bound-r", r >= need_r, f"r = {r}, (M+1)(ns+1) = {need_r}",
                            None if r >= need_r else "r"))

    try:
        check_locality(k, M)
        verdicts.append(Verdict("locality", True, f"all relevant leaders within ξ <= {M}",
                                relied_on=[TAG_TRUST]))
    except HypothesisViolation as exc:
        verdicts.append(Verdict("locality", False, exc.reason, exc.witness, [TAG_TRUST]))

    stray = [pair for pair in chosen if not (0 <= pair.xi <= M and 1 <= pair.i <= n)]
    verdicts.append(Verdict("I-range", not stray, f"I ⊆ {{0..{M}}} x {{1..{n}}}",
                            str(stray[0]) if stray else None))
    complement = [pair for pair in complement if pair not in stray]

    # B: every column of I, all shifts
    b_indices = [Gamma2Index(pair.xi, u, pair.i) for pair in chosen if pair not in stray
                 for u in range(s + 1) if pair.xi <= r]
    not_free = [index for index in b_indices if not isinstance(k.entries[index], Transcendental)]
    verdicts.append(Verdict(
        "condition-1a", not not_free, "B is algebraically independent over K",
        str(not_free[0]) if not_free else None, [TAG_TRUST],
    ))
    b_names = {k.names[index] for index in b_indices}
    base_names = set(k.base.variables)
    block = [Gamma2Index(pair.xi, 0, pair.i) for pair in complement]
    block_names = {k.names[index] for index in block
                   if not isinstance(k.entries[index], Defined)}

    allowed = base_names | b_names | block_names
    witness = None
    for pair in complement:
        index = Gamma2Index(pair.xi, 1, pair.i)
        if s < 1 or index not in k.entries:
            witness = f"{pair}: no entry at u = 1"
            break
        entry = k.entries[index]
        if isinstance(entry, Transcendental):
            witness = f"{index}: transcendental"
            break
        outside = entry.symbols() - allowed
        if outside:
            witness = f"{index}: uses {sorted(outside)[0]}"
            break
    verdicts.append(Verdict(
        "condition-1b", witness is None,
        "a[i][ξ][1] algebraic over K(B)(a[i][ξ][0] : (ξ, i) outside I)", witness, [TAG_TRUST],
    ))

    counted = sum(1 for index in block if isinstance(k.entries[index], Transcendental))
    unclosed = [index for index in block
                if not isinstance(k.entries[index], Transcendental)
                and k.entries[index].symbols() - allowed]
    verdicts.append(Verdict(
        "condition-2a", counted == d and not unclosed,
        f"transcendental count of the column-0 block over K(B) is {counted}, d = {d}",
        str(unclosed[0]) if unclosed else (None if counted == d else f"counted {counted}"),
        [TAG_TRUST],
    ))

    expected = [Gamma2Index(pair.xi, u, pair.i) for pair in complement for u in range(s)]
    m = len(expected)
    permutation_ok = sorted(enumeration) == sorted(expected) and len(set(enumeration)) == len(enumeration)
    missing = sorted(set(expected) - set(enumeration))
    extra = [index for index in enumeration if index not in set(expected)]
    verdicts.append(Verdict(
        "enumeration", permutation_ok, f"x_1..x_m with m = {m}",
        None if permutation_ok else str((missing or extra or ["repeated entry"])[0]),
    ))
    range_ok = 0 <= t <= d <= m
    verdicts.append(Verdict("t-d-range", range_ok, f"t = {t}, d = {d}, m = {m}",
                            None if range_ok else "t, d"))

    if permutation_ok and range_ok:
        verdicts.append(_separating_basis(k, enumeration, t, d, base_names | b_names))
        verdicts.append(_p_condition(k, enumeration, t, d, base_names | b_names, p))
    else:
        verdicts.append(Verdict("condition-2b", False, "needs a valid enumeration and t <= d <= m"))
        verdicts.append(Verdict("condition-2c", False, "needs a valid enumeration and t <= d <= m"))

    report = DDHypothesisReport(M, chosen, enumeration, t, d, m, counted, verdicts)
    for v in report.failures():
        logger.info("hypothesis %s fails: %s (witness %s)", v.name, v.detail, v.witness)
    return report


def _separating_basis(k: DDKernel, xs: List[Gamma2Index], t: int, d: int,
                      ground: Set[str]) -> Verdict:
    ys = [x.sigma_shifted() for x in xs]
    basis = xs[:t] + ys[t:d]
    names = []
    for index in basis:
        name = _generator_name(k, index)
        if name is None:
            return Verdict("condition-2b", False, "basis element is not a transcendental generator",
                           str(index), [TAG_TRUST])
        if name in names:
            return Verdict("condition-2b", False, "basis elements coincide", str(index), [TAG_TRUST])
        names.append(name)
    ok, witness = certify_separable(k, ground | set(names), xs + ys)
    return Verdict(
        "condition-2b", ok, "(x_1..x_t, y_{t+1}..y_d) separating transcendence basis of K(B)(x, y)",
        None if ok else str(witness),
        [TAG_TRUST, "separable minimal polynomials and Defined values certify algebraicity"],
    )


def _p_condition(k: DDKernel, xs: List[Gamma2Index], t: int, d: int, ground: Set[str],
                 p: int) -> Verdict:
    name = "condition-2c"
    if p == 0:
        return Verdict(name, True, "vacuous in characteristic 0")
    if t == d:
        return Verdict(name, True, "vacuous for t = d")
    ys = [x.sigma_shifted() for x in xs]
    powers = {_generator_name(k, x) or k.names[x] for x in xs[:t]}
    allowed = set(ground) | powers
    for y in ys[t:d]:
        allowed.add(_generator_name(k, y) or k.names[y])
    ok, witness = certify_separable(k, allowed, xs[t:d], powers, p)
    return Verdict(
        name, ok, "x_{t+1}..x_d separably algebraic over K(B)(x_1^p..x_t^p, y_{t+1}..y_d)",
        None if ok else str(witness), [TAG_TRUST],
    )
