"""
Subcommand handlers

Every handler takes the parsed arguments, the built document (None for
``examples``) and the report it fills in. Negative verdicts become failing
findings; handlers never decide the exit code themselves.
"""

import logging
from typing import Callable, Dict, Iterable, List

import pandas as pd

from ..constructions.perfect import diffperfect_truncated, r_map_table
from ..constructions.preimage import adjoin_sigma_preimage
from ..ddkernels.classify import dd_classify
from ..ddkernels.dd_kernel import dd_commutation, dd_verify
from ..ddkernels.difference import VIOLATED, difference_leader_classify
from ..ddkernels.hypotheses import dd_hypothesis_check
from ..ddkernels.prolong import dd_prolong_delta, linearize
from ..ddkernels.realize import realize_with_cases
from ..dsl.builder import BuiltDocument
from ..kernels.diff_kernel import classify_leaders, kernel_verify, leader_summary
from ..kernels.presentation import IndexedKernel, KernelViolation
from ..kernels.prolong import kernel_prolong
from ..operators.commutation import CommutationViolation, commutation_check, r_map
from ..utils.formatters import leader_table
from .report import RunReport
from .suite import run_examples

logger = logging.getLogger(__name__)


# ------------------------------------------------------------------ helpers
def entries_frame(kernel: IndexedKernel) -> pd.DataFrame:
    rows = [{"index": str(index), "symbol": kernel.names[index], "entry": str(entry)}
            for index, entry in kernel.entries.items()]
    return pd.DataFrame(rows, columns=["index", "symbol", "entry"])


def _witness(**values) -> Dict[str, object]:
    return {key: value for key, value in values.items() if value is not None}


def add_kernel_violations(report: RunReport, check: str, violations: Iterable[KernelViolation]) -> None:
    found = False
    for v in violations:
        found = True
        report.add(check, False, v.index, f"{v.operator}: {v.reason}",
                   **_witness(operator=v.operator, lhs=v.lhs, expected=v.expected))
    if not found:
        report.add(check, True, detail="every condition holds")


def add_commutation(report: RunReport, clashes: List[CommutationViolation], check: str = "commutation") -> None:
    for c in clashes:
        report.add(check, False, c.symbol, "δσ ≠ σδ",
                   symbol=c.symbol, delta_sigma=c.delta_sigma, sigma_delta=c.sigma_delta)
    if not clashes:
        report.add(check, True, detail="δσ = σδ on every generator")


def _kernel_names(kernel: IndexedKernel) -> Dict[str, str]:
    return {str(index): name for index, name in kernel.names.items()}


def _is_dd(built: BuiltDocument, name) -> bool:
    if name is not None:
        return name in built.ddkernels
    return bool(built.ddkernels) and not built.kernels


# ----------------------------------------------------------------- kernels
def cmd_verify_kernel(args, built: BuiltDocument, report: RunReport) -> None:
    kernel = built.kernel(args.name)
    report.set(n=kernel.n, r=kernel.r, generators=len(kernel.gen_names()))
    add_kernel_violations(report, "kernel conditions", kernel_verify(kernel).violations)


def cmd_verify_dd(args, built: BuiltDocument, report: RunReport) -> None:
    kernel = built.ddkernel(args.name)
    report.set(n=kernel.n, r=kernel.r, s=kernel.s, generators=len(kernel.gen_names()))
    result = dd_verify(kernel)
    add_kernel_violations(report, "dd-kernel conditions", result.violations)
    if not any(v.operator == "structure" for v in result.violations):
        add_commutation(report, dd_commutation(kernel), "dd commutation")


def cmd_classify(args, built: BuiltDocument, report: RunReport) -> None:
    if not _is_dd(built, args.name):
        kernel = built.kernel(args.name)
        leaders = classify_leaders(kernel)
        report.table("leaders", leader_table(leaders.rows(), _kernel_names(kernel)))
        report.set(**{key.replace("-", "_"): value for key, value in leader_summary(leaders).items()})
        return
    kernel = built.ddkernel(args.name)
    leaders = dd_classify(kernel)
    names = _kernel_names(kernel)
    report.table("leaders", leader_table(leaders.plain.rows(), names))
    report.table("a-side", leader_table(leaders.a_side.rows(), names))
    report.table("b-side", leader_table(leaders.b_side.rows(), names))
    if leaders.b_transported:
        report.note("b-side kinds carried through σ at " + ", ".join(str(i) for i in sorted(leaders.b_transported)))
    for index, own, carried in leaders.disagreements:
        report.add("b-leader tags", False, index, "tag disagrees with the σ-image of the a-side",
                   tagged=own.value, transported=carried.value)
    if not leaders.disagreements:
        report.add("b-leader tags", True, detail="tags agree with the a-side")


def cmd_classify_diff(args, built: BuiltDocument, report: RunReport) -> None:
    presentation = built.difference(args.name)
    result = difference_leader_classify(presentation)
    report.table("leaders", leader_table(result.leaders.rows(), _kernel_names(presentation)))
    report.set(
        n=presentation.n,
        depth=presentation.depth,
        minimal_depths=[f"{i}: {d}" for i, d in sorted(result.minimal_depths.items())],
        transcendence_degree=result.transcendence_degree,
        bound=result.verdict,
        inseparable_extension=result.extension_inseparable,
        witnesses=[str(w) for w in result.inseparability_witnesses],
    )
    for text in result.notes:
        report.note(text)
    add_kernel_violations(report, "σ-shift", result.violations)
    if result.verdict == VIOLATED and not result.extension_inseparable:
        report.add("depth bound", False, detail="a minimal-separable leader lies deeper than n",
                   deepest=result.max_minimal_depth, n=presentation.n)
    else:
        detail = f"bound {result.verdict}"
        if result.verdict == VIOLATED:
            detail += "; the bound applies to separable extensions only"
        report.add("depth bound", True, detail=detail)


def cmd_prolong(args, built: BuiltDocument, report: RunReport) -> None:
    kernel = built.kernel(args.name)
    prolonged = kernel_prolong(kernel, args.steps)
    report.set(r_before=kernel.r, r_after=prolonged.r)
    report.table("entries", entries_frame(prolonged))
    before = classify_leaders(kernel)
    after = classify_leaders(prolonged)
    moved = [index for index in kernel.entries if before.kind(index) is not after.kind(index)]
    report.add("leaders stable", not moved, ", ".join(str(i) for i in moved) or None)


def cmd_dd_prolong(args, built: BuiltDocument, report: RunReport) -> None:
    kernel = built.ddkernel(args.name)
    prolonged = dd_prolong_delta(kernel, args.steps, args.M)
    report.set(r_before=kernel.r, r_after=prolonged.r, s=prolonged.s, M=args.M)
    report.table("entries", entries_frame(prolonged))
    add_kernel_violations(report, "dd-kernel conditions", dd_verify(prolonged).violations)
    add_commutation(report, dd_commutation(prolonged), "dd commutation")


def cmd_linearize(args, built: BuiltDocument, report: RunReport) -> None:
    kernel = built.ddkernel(args.name)
    lin = linearize(kernel)
    rows = [{"linear": str(index), "original": str(lin.original(index)), "copy": lin.is_copy(index)}
            for index in lin.kernel.entries]
    report.table("relabel", pd.DataFrame(rows, columns=["linear", "original", "copy"]))
    report.set(width=lin.kernel.n, r=lin.kernel.r, s=lin.kernel.s)
    add_kernel_violations(report, "linearized conditions", dd_verify(lin.kernel).violations)


# -------------------------------------------------------------- hypotheses
def _hypothesis_findings(report: RunReport, hypotheses) -> None:
    for verdict in hypotheses.verdicts:
        report.add(verdict.name, verdict.ok, detail=verdict.detail, **_witness(witness=verdict.witness))
        for trusted in verdict.relied_on:
            report.note(f"{verdict.name} trusts the {trusted}")


def cmd_check_hypotheses(args, built: BuiltDocument, report: RunReport) -> None:
    kernel, data = built.hypothesis(args.name)
    hypotheses = dd_hypothesis_check(kernel, data.M, data.I, data.enumeration, data.t, data.d)
    report.set(M=hypotheses.M, t=hypotheses.t, d=hypotheses.d, m=hypotheses.m, counted_d=hypotheses.counted_d)
    _hypothesis_findings(report, hypotheses)


def cmd_realize(args, built: BuiltDocument, report: RunReport) -> None:
    kernel, data = built.hypothesis(args.name)
    realization = realize_with_cases(kernel, args.target, data, strict=not args.lenient)
    realized = realization.kernel
    report.set(source=f"({kernel.r},{kernel.s})", target=f"({realized.r},{realized.s})",
               cases=[f"{label}: {count}" for label, count in sorted(realization.case_counts().items())])
    rows = [{"index": str(index), "symbol": realized.names[index], "case": case, "entry": str(realized.entries[index])}
            for index, case in sorted(realization.cases.items())]
    report.table("new entries", pd.DataFrame(rows, columns=["index", "symbol", "case", "entry"]))
    for text in realization.notes:
        report.note(text)
    report.add("realized kernel", True, detail="verified and commuting")


# ---------------------------------------------------------- constructions
def cmd_commute_check(args, built: BuiltDocument, report: RunReport) -> None:
    F = built.operators()
    report.set(tower=F.tower)
    for v in F.derivation.violations():
        report.add("derivation", False, v.generator, str(v), lhs=v.lhs)
    for v in F.endomorphism.violations():
        report.add("endomorphism", False, v.generator, v.reason, **_witness(lhs=v.lhs))
    add_commutation(report, commutation_check(F.derivation, F.endomorphism))
    if any(g.is_algebraic and not g.separable for g in F.tower.gens):
        report.note("the tower has inseparable generators; commutation is checked on generators only")


def cmd_adjoin_preimage(args, built: BuiltDocument, report: RunReport) -> None:
    F, plan = built.preimage(args.name)
    result = adjoin_sigma_preimage(F, plan)
    sigma = result.field.endomorphism
    rows = []
    for n, (c, target) in enumerate(zip(result.preimages, result.derivatives)):
        image = sigma.apply(c)
        rows.append({"n": str(n), "c": str(c), "σ(c)": str(image), "δ^n(b)": str(target)})
        report.add("σ(c[n]) = δ^n(b)", image == result.field.tower.coerce(target), n,
                   image=image, expected=target)
    report.table("preimages", pd.DataFrame(rows, columns=["n", "c", "σ(c)", "δ^n(b)"]))
    report.set(tower=result.field.tower, generators=result.generators)
    add_commutation(report, result.commutation)


def cmd_perfect_extend(args, built: BuiltDocument, report: RunReport) -> None:
    F, plan = built.perfect(args.name)
    extension = diffperfect_truncated(F, plan)
    rows = [{"constant": str(c), "root": str(root), "σ(root)": str(image)}
            for c, root, image in zip(extension.constants, extension.roots, extension.sigma_roots)]
    report.table("roots", pd.DataFrame(rows, columns=["constant", "root", "σ(root)"]))
    report.table("r-map", pd.DataFrame(
        [{"element": key, "r": str(value)} for key, value in r_map_table(extension, plan.constants).items()],
        columns=["element", "r"],
    ))
    report.set(tower=extension.field.tower)
    add_commutation(report, extension.commutation)


def cmd_r_map(args, built: BuiltDocument, report: RunReport) -> None:
    element = built.element(args.element)
    if built.document.perfects:
        F, plan = built.perfect(args.name)
        derivation = diffperfect_truncated(F, plan).field.derivation
        report.note("evaluated in the perfect extension of the document")
    else:
        derivation = built.derivation()
    root = r_map(derivation, element)
    report.set(element=element, constant=derivation.is_constant(element), r=root)
    report.add("r-map", True, detail=f"r({element}) = {root}")


def cmd_examples(args, built, report: RunReport) -> None:
    for outcome in run_examples():
        report.add(outcome.name, outcome.ok, detail=outcome.observed, expected=outcome.expected)


Handler = Callable[..., None]

COMMANDS: Dict[str, Handler] = {
    "verify-kernel": cmd_verify_kernel,
    "verify-dd": cmd_verify_dd,
    "classify": cmd_classify,
    "classify-diff": cmd_classify_diff,
    "prolong": cmd_prolong,
    "dd-prolong": cmd_dd_prolong,
    "linearize": cmd_linearize,
    "check-hypotheses": cmd_check_hypotheses,
    "realize": cmd_realize,
    "commute-check": cmd_commute_check,
    "adjoin-preimage": cmd_adjoin_preimage,
    "perfect-extend": cmd_perfect_extend,
    "r-map": cmd_r_map,
    "examples": cmd_examples,
}
