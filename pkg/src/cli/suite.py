"""
Parametric example builders and the bundled example suite
"""

import logging
from dataclasses import dataclass
from math import factorial
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..arith.field import BaseField
from ..constructions.perfect import PerfectExtensionPlan, diffperfect_truncated
from ..constructions.preimage import ALG, PlanStep, SurjectivizationPlan, adjoin_sigma_preimage
from ..ddkernels.dd_kernel import DDKernel, dd_commutation, dd_verify
from ..ddkernels.difference import (
    MET_WITH_EQUALITY,
    VIOLATED,
    DifferencePresentation,
    difference_leader_classify,
)
from ..ddkernels.prolong import prolongation_bound
from ..ddkernels.realize import CASE_CHOICE, HypothesisData, realize_with_cases
from ..dsl.parser import parse_spec
from ..dsl.printer import print_spec
from ..kernels.diff_kernel import DiffKernel, classify_leaders
from ..kernels.gamma import Gamma2Index, GammaIndex
from ..kernels.presentation import Algebraic, Defined, Transcendental
from ..kernels.prolong import kernel_prolong
from ..operators.commutation import DifferenceDifferentialField, commutation_check, r_map
from ..operators.derivation import Derivation
from ..operators.endomorphism import Endomorphism
from ..tower.element import Element
from ..tower.tower import GenSpec, Tower
from ..tower.upoly import ElementPoly
from ..utils.config import get_settings
from ..utils.errors import ChoiceRequired, KolchinError

logger = logging.getLogger(__name__)

EXAMPLE1_CASES = ((2, 2), (2, 3), (3, 2))
EXAMPLE2_CASES = ((2, 2), (2, 3))
RICCATI_DEPTH = 5


def _field(p: int, names: Sequence[str] = ()) -> Tower:
    return Tower(BaseField(p), names)


def _root_poly(tower: Tower, p: int, name: str, c: Element) -> ElementPoly:
    """x^p - c in the variable ``name``"""
    return ElementPoly.monomial(tower, p, 1, name) - tower.coerce(c)


# --------------------------------------------------------------- differential
def riccati_kernel(p: int = 0) -> DiffKernel:
    """δx = x² over the prime field: a[1][0] transcendental, a[1][1] = a[1][0]^2"""
    K = _field(p)
    scratch = K.extend(GenSpec("a[1][0]"))
    entries = {
        GammaIndex(0, 1): Transcendental(),
        GammaIndex(1, 1): Defined(scratch.gen("a[1][0]") ** 2),
    }
    return DiffKernel(K, Derivation(K), 1, 1, entries)


def riccati_expected(kernel: DiffKernel, depth: int) -> Dict[int, Element]:
    """a[1][k] = k!·a[1][0]^(k+1) for 1 <= k <= depth"""
    x = kernel.tower.gen(kernel.names[GammaIndex(0, 1)])
    return {k: kernel.tower.const(factorial(k)) * x ** (k + 1) for k in range(1, depth + 1)}


# ----------------------------------------------------------------- difference
def example1_presentation(p: int, m: int) -> DifferencePresentation:
    """
    F_p(t_1..t_m) with σ(t_i) = t_{i+1}, σ(t_m) = t_1^p and the single
    difference generator t_1^(1/p), presented to depth m
    """
    names = [f"t{i}" for i in range(1, m + 1)]
    K = _field(p, names)
    images = {names[i]: K.gen(names[i + 1]) for i in range(m - 1)}
    images[names[-1]] = K.gen(names[0]) ** p
    sigma = Endomorphism(K, K, images)
    tower = K
    entries = {}
    for xi in range(m):
        name = GammaIndex(xi, 1).name()
        minpoly = _root_poly(tower, p, name, K.gen(names[xi]))
        tower = tower.extend(GenSpec(name, minpoly))
        entries[GammaIndex(xi, 1)] = Algebraic(tower.spec(name).minpoly)
    entries[GammaIndex(m, 1)] = Defined(K.gen(names[0]))
    return DifferencePresentation(K, sigma, 1, m, entries, assume_separable=False)


def _example2_step(state: Tuple[int, int], n: int) -> Tuple[int, int]:
    """σ(t_j^(1/p^e)) = t_{j+1}^(1/p^(e+1)) for j < n and t_1^(p^(n-1-e)) for j = n"""
    j, e = state
    return (j + 1, e + 1) if j < n else (1, e - n + 1)


def example2_presentation(p: int, n: int) -> DifferencePresentation:
    """
    F_p(t_1..t_n, roots) with σ(t_i) = t_{i+1}^(1/p) and σ(t_n) = t_1^(p^(n-1)),
    generated by t_1..t_n and presented to depth n

    An entry t_j^(1/p^e) is a new p-th root when e is one past the deepest
    root of t_j so far, and a p-power of that root otherwise.
    """
    K = _field(p)
    tower = K
    entries = {}
    deepest: Dict[int, Tuple[int, str]] = {}
    states = {i: (i, 0) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        name = GammaIndex(0, i).name()
        tower = tower.extend(GenSpec(name))
        entries[GammaIndex(0, i)] = Transcendental()
        deepest[i] = (0, name)
    for xi in range(1, n + 1):
        for i in range(1, n + 1):
            states[i] = _example2_step(states[i], n)
            j, e = states[i]
            known, root = deepest[j]
            index = GammaIndex(xi, i)
            if e <= known:
                entries[index] = Defined(tower.gen(root) ** (p ** (known - e)))
            else:
                name = index.name()
                tower = tower.extend(GenSpec(name, _root_poly(tower, p, name, tower.gen(root))))
                entries[index] = Algebraic(tower.spec(name).minpoly)
                deepest[j] = (e, name)
    identity = Endomorphism(K, K)
    return DifferencePresentation(K, identity, n, n, entries, assume_separable=True)


# ---------------------------------------------------- differential-difference
def noncommuting_field() -> DifferenceDifferentialField:
    """F_3(t)(x, y) with δ = d/dt, δx = t, δy = t + 1 and σ: t -> t + 1, x -> y, y -> x"""
    tower = _field(3, ["t"]).extend(GenSpec("x")).extend(GenSpec("y"))
    t, x, y = tower.gen("t"), tower.gen("x"), tower.gen("y")
    delta = Derivation(tower, {"t": tower.one()}, {"x": t, "y": t + 1})
    sigma = Endomorphism(tower, tower, {"t": t + 1}, {"x": y, "y": x})
    return DifferenceDifferentialField(tower, delta, sigma)


def _base_operators(K: Tower, delta_images: Dict[str, object],
                    sigma_images: Dict[str, object]) -> Tuple[Derivation, Endomorphism]:
    return (Derivation(K, {k: K.coerce(v) for k, v in delta_images.items()}),
            Endomorphism(K, K, {k: K.coerce(v) for k, v in sigma_images.items()}))


def noncommuting_ddkernel() -> DDKernel:
    """
    The same data as a dd-kernel of length (1, 2): x = a[1][0][0], y = a[1][0][1]
    and σ(y) = x demanded by a[1][0][2]
    """
    K = _field(3, ["t"])
    t = K.gen("t")
    delta, sigma = _base_operators(K, {"t": 1}, {"t": t + 1})
    scratch = K.extend(GenSpec("a[1][0][0]"))
    entries = {
        Gamma2Index(0, 0, 1): Transcendental(),
        Gamma2Index(0, 1, 1): Transcendental(),
        Gamma2Index(0, 2, 1): Defined(scratch.gen("a[1][0][0]")),
        Gamma2Index(1, 0, 1): Defined(t),
        Gamma2Index(1, 1, 1): Defined(t + 1),
        Gamma2Index(1, 2, 1): Defined(t),
    }
    return DDKernel(K, delta, sigma, 1, 1, 2, entries)


def riccati_ddkernel(p: int = 0, r: int = 6, s: int = 2) -> Tuple[DDKernel, HypothesisData]:
    """σx = x, δx = x² as a dd-kernel of length (r, s), with its hypothesis data for M = 1"""
    K = _field(p)
    delta, sigma = _base_operators(K, {}, {})
    x_name = Gamma2Index(0, 0, 1).name()
    x = K.extend(GenSpec(x_name)).gen(x_name)
    entries = {}
    for xi in range(r + 1):
        for u in range(s + 1):
            index = Gamma2Index(xi, u, 1)
            if (xi, u) == (0, 0):
                entries[index] = Transcendental()
            else:
                entries[index] = Defined(x.owner.const(factorial(xi)) * x ** (xi + 1))
    kernel = DDKernel(K, delta, sigma, 1, r, s, entries)
    enumeration = [Gamma2Index(0, 0, 1), Gamma2Index(1, 0, 1), Gamma2Index(0, 1, 1), Gamma2Index(1, 1, 1)]
    return kernel, HypothesisData(M=1, I=[], enumeration=enumeration, t=1, d=1)


def choice_instance() -> Tuple[DDKernel, HypothesisData]:
    """
    F_2(t1, t2, t3) with σ: t1 -> t2 -> t3 -> t1², δ = 0 and a dd-kernel whose
    σ-step to u = 2 leaves a[1][1][2] free
    """
    K = _field(2, ["t1", "t2", "t3"])
    t1, t2, t3 = (K.gen(name) for name in ("t1", "t2", "t3"))
    delta, sigma = _base_operators(K, {}, {"t1": t2, "t2": t3, "t3": t1 ** 2})
    tower = K
    entries = {}
    for index, c in ((Gamma2Index(0, 0, 1), t1), (Gamma2Index(0, 1, 1), t2)):
        name = index.name()
        tower = tower.extend(GenSpec(name, _root_poly(tower, 2, name, c)))
        entries[index] = Algebraic(tower.spec(name).minpoly)
    entries[Gamma2Index(1, 0, 1)] = Transcendental()
    entries[Gamma2Index(1, 1, 1)] = Transcendental()
    kernel = DDKernel(K, delta, sigma, 1, 1, 1, entries)
    return kernel, HypothesisData(M=0, I=[], enumeration=[Gamma2Index(0, 0, 1)], t=0, d=0)


def polynomial_dd_instance(p: int, coefficients: Sequence[Tuple[int, int]], n: int = 1, M: int = 0,
                           s: Optional[int] = None) -> Tuple[DDKernel, HypothesisData]:
    """
    Over F_p(t) (or Q(t)) with δ = d/dt and σ(t) = t + 1: every a[i][ξ][0] is
    transcendental and σ(a[i][0][0]) = Q(a[i][0][0]) + a[i-1][0][0] with
    Q(x) = Σ (c_k + e_k·t)·x^k (no coupling term for i = 1). Every level
    u >= 1 is forced by σ and δ. ``s`` defaults to (M+1)n and r is the
    prolongation bound (ns+1)(M+1).
    """
    s = (M + 1) * n if s is None else s
    r = prolongation_bound(n, s, M)
    K = _field(p, ["t"])
    t = K.gen("t")
    delta, sigma = _base_operators(K, {"t": 1}, {"t": t + 1})
    work = K
    for i in range(1, n + 1):
        for xi in range(r + 1):
            work = work.extend(GenSpec(Gamma2Index(xi, 0, i).name()))
    d = Derivation(work, {"t": work.one()}, {
        Gamma2Index(xi, 0, i).name(): work.gen(Gamma2Index(xi + 1, 0, i).name())
        for i in range(1, n + 1) for xi in range(r)
    })

    def next_level(values: List[Element], tt: Element) -> List[Element]:
        images = []
        for i, x in enumerate(values):
            q = work.zero()
            for k, (c, e) in enumerate(coefficients):
                q = q + (c + e * tt) * x ** k
            images.append(q + values[i - 1] if i else q)
        return images

    level = [work.gen(Gamma2Index(0, 0, i).name()) for i in range(1, n + 1)]
    entries = {}
    for u in range(s + 1):
        for i, value in enumerate(level, start=1):
            for xi in range(r + 1):
                entries[Gamma2Index(xi, u, i)] = Defined(value) if u else Transcendental()
                if u and xi < r:
                    value = d.apply(value)
        # σ^u(t) = t + u in the coefficients of the next σ-step
        level = next_level(level, work.gen("t") + u)
    kernel = DDKernel(K, delta, sigma, n, r, s, entries)
    enumeration = [Gamma2Index(xi, u, i) for u in range(s) for xi in range(M + 1) for i in range(1, n + 1)]
    d_count = n * (M + 1)
    return kernel, HypothesisData(M=M, I=[], enumeration=enumeration, t=d_count, d=d_count)


def swap_field(p: int = 2) -> DifferenceDifferentialField:
    """F_p(t1, t2) with σ exchanging t1 and t2 and δ = 0"""
    K = _field(p, ["t1", "t2"])
    delta, sigma = _base_operators(K, {}, {"t1": K.gen("t2"), "t2": K.gen("t1")})
    return DifferenceDifferentialField(K, delta, sigma)


def chain_field(p: int = 3) -> DifferenceDifferentialField:
    """F_p(t, c) with δt = 1, δc = 0, σ(t) = t + 1 and σ(c) = c"""
    K = _field(p, ["t", "c"])
    delta, sigma = _base_operators(K, {"t": 1}, {"t": K.gen("t") + 1})
    return DifferenceDifferentialField(K, delta, sigma)


def frobenius_field() -> DifferenceDifferentialField:
    """F_2(t) with σ(t) = t² and δ = 0"""
    K = _field(2, ["t"])
    delta, sigma = _base_operators(K, {}, {"t": K.gen("t") ** 2})
    return DifferenceDifferentialField(K, delta, sigma)


def frobenius_preimage_plan(F: DifferenceDifferentialField) -> SurjectivizationPlan:
    """A square root c[0] of t, so that σ(c[0]) = t"""
    K = F.tower
    step = PlanStep(ALG, poly=_root_poly(K, 2, "c[0]", K.gen("t")))
    return SurjectivizationPlan(K.gen("t"), 0, [step])


# ---------------------------------------------------------------------- suite
@dataclass
class ExampleOutcome:
    name: str
    expected: str
    observed: str
    ok: bool


def _noncommuting() -> List[ExampleOutcome]:
    F = noncommuting_field()
    clashes = commutation_check(F.derivation, F.endomorphism)
    t = F.tower.gen("t")
    hit = [c for c in clashes if c.symbol == "y" and c.delta_sigma == t and c.sigma_delta == t + 2]
    observed = "; ".join(str(c) for c in clashes) or "commutes"
    outcomes = [ExampleOutcome("non-commuting swap field", "y: δσ = t, σδ = t + 2", observed,
                               len(clashes) == 1 and bool(hit))]

    kernel = noncommuting_ddkernel()
    result = dd_verify(kernel)
    sigma_at = [str(v.index) for v in result.violations if v.operator == "sigma"]
    witness = [c for c in dd_commutation(kernel) if c.symbol == kernel.names[Gamma2Index(0, 1, 1)]]
    outcomes.append(ExampleOutcome(
        "non-commuting dd-kernel", "σ violation at (1,1,1); δσ ≠ σδ at a[1][0][1]",
        f"σ violations at {sigma_at}; commutation witness {[str(c) for c in witness]}",
        str(Gamma2Index(1, 1, 1)) in sigma_at and bool(witness),
    ))
    return outcomes


def _example1(p: int, m: int) -> ExampleOutcome:
    report = difference_leader_classify(example1_presentation(p, m))
    inseparable = sorted(index.xi for index in report.leaders.inseparable())
    ok = (not report.violations
          and inseparable == list(range(m))
          and report.minimal_depths == {1: m}
          and report.verdict == VIOLATED
          and report.extension_inseparable)
    observed = (f"inseparable at {inseparable}, minimal-separable at {report.minimal_depths[1]}, "
                f"bound {report.verdict}, inseparable L/K: {report.extension_inseparable}")
    return ExampleOutcome(f"difference example 1 (p={p}, m={m})",
                          f"inseparable at 0..{m - 1}, minimal-separable at {m}, bound violated",
                          observed, ok)


def _example2(p: int, n: int) -> ExampleOutcome:
    report = difference_leader_classify(example2_presentation(p, n))
    ok = (not report.violations
          and report.max_minimal_depth == n
          and report.minimal_depths[1] == n
          and report.verdict == MET_WITH_EQUALITY)
    observed = f"minimal depths {report.minimal_depths}, bound {report.verdict}"
    return ExampleOutcome(f"difference example 2 (p={p}, n={n})",
                          f"minimal-separable at depth {n}, bound met with equality", observed, ok)


def _riccati() -> ExampleOutcome:
    kernel = riccati_kernel()
    before = classify_leaders(kernel)
    prolonged = kernel_prolong(kernel, RICCATI_DEPTH - kernel.r)
    expected = riccati_expected(prolonged, RICCATI_DEPTH)
    values = {k: prolonged.value(GammaIndex(k, 1)) for k in range(1, RICCATI_DEPTH + 1)}
    after = classify_leaders(prolonged)
    stable = all(after.kind(index) is before.kind(index) for index in kernel.entries)
    observed = ", ".join(f"a^{k} = {values[k]}" for k in range(2, RICCATI_DEPTH + 1))
    return ExampleOutcome("riccati prolongation", "a^k = k!·(a^0)^(k+1), leaders stable",
                          observed, values == expected and stable)


def _riccati_realize() -> ExampleOutcome:
    kernel, data = riccati_ddkernel()
    realization = realize_with_cases(kernel, (8, 3), data)
    realized = realization.kernel
    ok = dd_verify(realized).ok and not dd_commutation(realized) and realization.report.green
    return ExampleOutcome("σx = x, δx = x² realization", "(6,2) -> (8,3), verified and commuting",
                          f"({realized.r},{realized.s}) cases {realization.case_counts()}", ok)


def _choice() -> ExampleOutcome:
    kernel, data = choice_instance()
    slot = Gamma2Index(1, 2, 1)
    try:
        realize_with_cases(kernel, (1, 2), data, strict=False)
        refused = False
    except ChoiceRequired as exc:
        refused = exc.slot == str(slot)
    chosen = HypothesisData(data.M, data.I, data.enumeration, data.t, data.d,
                            {slot: kernel.value(Gamma2Index(1, 0, 1))})
    realization = realize_with_cases(kernel, (1, 2), chosen, strict=False)
    ok = refused and realization.cases.get(slot) == CASE_CHOICE and dd_verify(realization.kernel).ok
    return ExampleOutcome("free σ-slot", f"default refused at {slot}, choice a[1][1][0] accepted",
                          f"refused: {refused}, case at slot: {realization.cases.get(slot)}", ok)


def _preimage() -> ExampleOutcome:
    F = frobenius_field()
    result = adjoin_sigma_preimage(F, frobenius_preimage_plan(F))
    image = result.field.endomorphism.apply(result.preimages[0])
    ok = image == result.field.tower.gen("t") and not result.commutation
    return ExampleOutcome("σ-preimage over F_2(t), σ(t) = t²", "σ(c[0]) = t", f"σ(c[0]) = {image}", ok)


def _perfect() -> List[ExampleOutcome]:
    outcomes = []
    F = swap_field(2)
    constants = [F.tower.gen("t1"), F.tower.gen("t2")]
    extension = diffperfect_truncated(F, PerfectExtensionPlan(constants, 0))
    roots = extension.roots
    sigma_root = extension.field.endomorphism.apply(roots[0])
    ok = sigma_root == roots[1] and not extension.commutation
    outcomes.append(ExampleOutcome("perfect extension of the swap field", "σ(t1^(1/2)) = t2^(1/2)",
                                   f"σ(x[1][0]) = {sigma_root}", ok))

    F = chain_field(3)
    c = F.tower.gen("c")
    extension = diffperfect_truncated(F, PerfectExtensionPlan([c], 1))
    root = r_map(extension.field.derivation, c)
    ok = root ** 3 == extension.field.tower.coerce(c) and not extension.commutation
    outcomes.append(ExampleOutcome("truncated perfect extension with a derivative chain",
                                   "r(c)^3 = c and δσ = σδ", f"r(c) = {root}", ok))
    return outcomes


def _documents(data_dir: Path) -> List[ExampleOutcome]:
    outcomes = []
    for path in sorted(data_dir.glob("*.d[dk]")):
        text = path.read_text(encoding="utf-8")
        first = print_spec(parse_spec(text))
        ok = print_spec(parse_spec(first)) == first and parse_spec(first) == parse_spec(text)
        outcomes.append(ExampleOutcome(f"round trip {path.name}", "print(parse) is stable",
                                       "stable" if ok else "changed", ok))
    return outcomes


def _guarded(name: str, build: Callable[[], object]) -> List[ExampleOutcome]:
    try:
        found = build()
    except KolchinError as exc:
        logger.warning("example %s raised %s", name, exc)
        return [ExampleOutcome(name, "completes", f"{type(exc).__name__}: {exc}", False)]
    return found if isinstance(found, list) else [found]


def run_examples(data_dir: Optional[Path] = None) -> List[ExampleOutcome]:
    """Every bundled example with its expected outcome, in a fixed order"""
    data_dir = data_dir or get_settings().data_dir
    outcomes: List[ExampleOutcome] = []
    outcomes += _guarded("non-commuting swap field", _noncommuting)
    for p, m in EXAMPLE1_CASES:
        outcomes += _guarded(f"difference example 1 (p={p}, m={m})", lambda p=p, m=m: _example1(p, m))
    for p, n in EXAMPLE2_CASES:
        outcomes += _guarded(f"difference example 2 (p={p}, n={n})", lambda p=p, n=n: _example2(p, n))
    outcomes += _guarded("riccati prolongation", _riccati)
    outcomes += _guarded("riccati realization", _riccati_realize)
    outcomes += _guarded("free σ-slot", _choice)
    outcomes += _guarded("σ-preimage", _preimage)
    outcomes += _guarded("perfect extension", _perfect)
    if data_dir.is_dir():
        outcomes += _guarded("shipped documents", lambda: _documents(data_dir))
    return outcomes
