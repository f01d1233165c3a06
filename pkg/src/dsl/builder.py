"""
Turning a SpecDocument into towers, operators, kernels and plans
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from ..arith.field import BaseField
from ..constructions.perfect import PerfectExtensionPlan
from ..constructions.preimage import ALG, TRANS, VALUE, PlanStep, SurjectivizationPlan
from ..ddkernels.dd_kernel import DDKernel
from ..ddkernels.difference import DifferencePresentation
from ..ddkernels.realize import HypothesisData
from ..kernels.diff_kernel import DiffKernel
from ..kernels.gamma import GammaIndex, parse_index
from ..kernels.presentation import Algebraic, Defined, Transcendental
from ..operators.commutation import DifferenceDifferentialField
from ..operators.derivation import Derivation
from ..operators.endomorphism import Endomorphism
from ..tower.element import Element
from ..tower.tower import GenSpec, Tower, tower_extend
from ..tower.upoly import ElementPoly
from ..utils.validators import UnresolvedSymbol, ValidationError
from .ast import (
    BinOp,
    DDKernelDecl,
    DifferenceDecl,
    EntryDecl,
    KernelDecl,
    Neg,
    Num,
    OperatorDecl,
    Pow,
    SpecDocument,
    Sym,
    expr_symbols,
)
from .parser import PREIMAGE_LETTER, parse_expression

logger = logging.getLogger(__name__)


def expr_to_element(expr, tower: Tower, env: Optional[Mapping[str, Element]] = None) -> Element:
    """
    Evaluate an expression in ``tower``; names in ``env`` stand for their values

    Raises:
        UnresolvedSymbol: For a name that is neither in ``env`` nor in the tower
        ZeroElement: On division by zero
    """
    env = env or {}
    if isinstance(expr, Num):
        return tower.const(expr.value)
    if isinstance(expr, Sym):
        if expr.name in env:
            return tower.coerce(env[expr.name])
        return tower.gen(expr.name)
    if isinstance(expr, Neg):
        return -expr_to_element(expr.operand, tower, env)
    if isinstance(expr, Pow):
        return expr_to_element(expr.base, tower, env) ** expr.exponent
    if isinstance(expr, BinOp):
        left = expr_to_element(expr.left, tower, env)
        right = expr_to_element(expr.right, tower, env)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        return left / right
    raise ValidationError(f"not an expression: {expr!r}")


def expr_to_minpoly(expr, tower: Tower, name: str,
                    env: Optional[Mapping[str, Element]] = None) -> ElementPoly:
    """A minimal polynomial written in ``name`` with coefficients in ``tower``"""
    scratch = tower.extend(GenSpec(name))
    value = expr_to_element(expr, scratch, env)
    return value.polynomial_in(name, domain=tower)


def free_element(expr, base: BaseField) -> Element:
    """
    An expression over a scratch tower of free symbols; coercion into a
    tower that knows the symbols gives its value there
    """
    return expr_to_element(expr, Tower(base, sorted(expr_symbols(expr))))


def _operator_images(decl: OperatorDecl, tower: Tower) -> Tuple[Dict[str, Element], Dict[str, Element]]:
    base_images, gen_images = {}, {}
    for image in decl.images:
        value = expr_to_element(image.value, tower)
        if image.symbol in tower.base:
            base_images[image.symbol] = value
        else:
            gen_images[image.symbol] = value
    return base_images, gen_images


def _entries(decls: List[EntryDecl], base: Tower, arity: int, context: str):
    """Entries keyed by index, their names and the shared letter"""
    tower = base
    env: Dict[str, Element] = {}
    entries, names = {}, {}
    letters = set()
    for decl in decls:
        letter, index = parse_index(decl.symbol, arity)
        letters.add(letter)
        if index in entries:
            raise ValidationError(f"{context}: index {index} is declared twice")
        names[index] = decl.symbol
        if decl.kind == "trans":
            tower = tower.extend(GenSpec(decl.symbol))
            entries[index] = Transcendental()
        elif decl.kind == "alg":
            minpoly = expr_to_minpoly(decl.expr, tower, decl.symbol, env)
            tower = tower.extend(GenSpec(decl.symbol, minpoly))
            entries[index] = Algebraic(tower.spec(decl.symbol).minpoly)
        else:
            value = expr_to_element(decl.expr, tower, env)
            entries[index] = Defined(value)
            env[decl.symbol] = value
    letter = letters.pop() if letters else "a"
    return entries, names, letter


@dataclass
class BuiltDocument:
    """Everything a document declares, built on its field tower"""

    document: SpecDocument
    tower: Tower
    derivations: Dict[str, Derivation] = field(default_factory=dict)
    endomorphisms: Dict[str, Endomorphism] = field(default_factory=dict)
    kernels: Dict[str, DiffKernel] = field(default_factory=dict)
    ddkernels: Dict[str, DDKernel] = field(default_factory=dict)
    differences: Dict[str, DifferencePresentation] = field(default_factory=dict)

    # -------------------------------------------------------------- lookups
    def _one(self, table: Dict, name: Optional[str], what: str):
        if name is None:
            if len(table) != 1:
                raise ValidationError(f"document has {len(table)} {what} blocks; name one")
            return next(iter(table.values()))
        try:
            return table[name]
        except KeyError:
            raise UnresolvedSymbol(name, f"{what} blocks")

    def kernel(self, name: Optional[str] = None) -> DiffKernel:
        return self._one(self.kernels, name, "kernel")

    def ddkernel(self, name: Optional[str] = None) -> DDKernel:
        return self._one(self.ddkernels, name, "ddkernel")

    def difference(self, name: Optional[str] = None) -> DifferencePresentation:
        return self._one(self.differences, name, "difference")

    def derivation(self, name: Optional[str] = None) -> Derivation:
        return self._one(self.derivations, name, "derivation")

    def endomorphism(self, name: Optional[str] = None) -> Endomorphism:
        return self._one(self.endomorphisms, name, "endomorphism")

    def operators(self) -> DifferenceDifferentialField:
        """(tower, δ, σ) when the document declares exactly one of each"""
        return DifferenceDifferentialField(self.tower, self.derivation(), self.endomorphism())

    def element(self, text: str) -> Element:
        return expr_to_element(parse_expression(text), self.tower)

    # ---------------------------------------------------------------- plans
    def hypothesis(self, name: Optional[str] = None) -> Tuple[DDKernel, HypothesisData]:
        decls = {decl.name: decl for decl in self.document.hypotheses}
        decl = self._one(decls, name, "hypothesis")
        kernel = self.ddkernels[decl.kernel]
        field_ = self.tower.field
        data = HypothesisData(
            M=decl.M,
            I=[GammaIndex(xi, i) for xi, i in decl.I],
            enumeration=[parse_index(symbol, 3)[1] for symbol in decl.x],
            t=decl.t,
            d=decl.d,
            choices={parse_index(c.symbol, 3)[1]: free_element(c.value, field_) for c in decl.choices},
        )
        return kernel, data

    def preimage(self, name: Optional[str] = None) -> Tuple[DifferenceDifferentialField, SurjectivizationPlan]:
        decls = {decl.name: decl for decl in self.document.preimages}
        decl = self._one(decls, name, "preimage")
        F = DifferenceDifferentialField(self.tower, self.derivations[decl.derivation],
                                        self.endomorphisms[decl.endomorphism])
        tower = self.tower
        env: Dict[str, Element] = {}
        steps = []
        for step in decl.steps:
            own = f"{PREIMAGE_LETTER}[{step.n}]"
            if step.kind == "trans":
                steps.append(PlanStep(TRANS))
                tower = tower.extend(GenSpec(own))
            elif step.kind == "alg":
                poly = expr_to_minpoly(step.expr, tower, own, env)
                steps.append(PlanStep(ALG, poly=poly))
                tower = tower.extend(GenSpec(own, poly))
            else:
                value = expr_to_element(step.expr, tower, env)
                steps.append(PlanStep(VALUE, value=value))
                env[own] = value
        plan = SurjectivizationPlan(expr_to_element(decl.b, self.tower), decl.depth, steps, PREIMAGE_LETTER)
        return F, plan

    def perfect(self, name: Optional[str] = None) -> Tuple[DifferenceDifferentialField, PerfectExtensionPlan]:
        decls = {decl.name: decl for decl in self.document.perfects}
        decl = self._one(decls, name, "perfect")
        F = DifferenceDifferentialField(self.tower, self.derivations[decl.derivation],
                                        self.endomorphisms[decl.endomorphism])
        constants = [expr_to_element(c, self.tower) for c in decl.constants]
        return F, PerfectExtensionPlan(constants, decl.depth)


def build_field(document: SpecDocument) -> Tower:
    tower = Tower(BaseField.parse(document.field.name), document.field.indeterminates)
    for gen in document.gens:
        if gen.kind == "trans":
            tower = tower_extend(tower, GenSpec(gen.name))
        else:
            tower = tower_extend(tower, GenSpec(gen.name, expr_to_minpoly(gen.minpoly, tower, gen.name)))
    return tower


def _kernel(decl: KernelDecl, built: BuiltDocument) -> DiffKernel:
    entries, names, letter = _entries(decl.entries, built.tower, 2, f"kernel {decl.name}")
    return DiffKernel(built.tower, built.derivations[decl.derivation], decl.n, decl.r,
                      entries, letter, names)


def _ddkernel(decl: DDKernelDecl, built: BuiltDocument) -> DDKernel:
    entries, names, letter = _entries(decl.entries, built.tower, 3, f"ddkernel {decl.name}")
    return DDKernel(built.tower, built.derivations[decl.derivation], built.endomorphisms[decl.endomorphism],
                    decl.n, decl.r, decl.s, entries, letter, names)


def _difference(decl: DifferenceDecl, built: BuiltDocument) -> DifferencePresentation:
    entries, names, letter = _entries(decl.entries, built.tower, 2, f"difference {decl.name}")
    assume = None if decl.assume is None else decl.assume == "separable"
    return DifferencePresentation(built.tower, built.endomorphisms[decl.endomorphism], decl.n,
                                  decl.depth, entries, letter, assume, names)


def build_document(document: SpecDocument) -> BuiltDocument:
    """
    Build every block of a parsed document

    Operators are built without validation so that commands can report
    their violations; kernels are presented but not verified.

    Raises:
        ValidationError: For malformed presentations (bad minimal polynomials,
            entries out of order, incomplete index sets)
    """
    tower = build_field(document)
    built = BuiltDocument(document, tower)
    for decl in document.derivations:
        base_images, gen_images = _operator_images(decl, tower)
        built.derivations[decl.name] = Derivation(tower, base_images, gen_images)
    for decl in document.endomorphisms:
        base_images, gen_images = _operator_images(decl, tower)
        built.endomorphisms[decl.name] = Endomorphism(tower, tower, base_images, gen_images)
    for decl in document.kernels:
        built.kernels[decl.name] = _kernel(decl, built)
    for decl in document.ddkernels:
        built.ddkernels[decl.name] = _ddkernel(decl, built)
    for decl in document.differences:
        built.differences[decl.name] = _difference(decl, built)
    logger.info("built %s with %d kernel(s), %d dd-kernel(s), %d difference presentation(s)",
                tower, len(built.kernels), len(built.ddkernels), len(built.differences))
    return built
