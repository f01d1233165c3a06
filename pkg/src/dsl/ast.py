"""
Abstract document model for .dk and .dd files
"""

from typing import Annotated, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field


class Node(BaseModel):
    model_config = ConfigDict(frozen=True)


# ----------------------------------------------------------------- expressions
class Num(Node):
    kind: Literal["num"] = "num"
    value: int = Field(ge=0)


class Sym(Node):
    kind: Literal["sym"] = "sym"
    name: str


class Neg(Node):
    kind: Literal["neg"] = "neg"
    operand: "Expr"


class BinOp(Node):
    kind: Literal["bin"] = "bin"
    op: Literal["+", "-", "*", "/"]
    left: "Expr"
    right: "Expr"


class Pow(Node):
    kind: Literal["pow"] = "pow"
    base: "Expr"
    exponent: int = Field(ge=0)


Expr = Annotated[Union[Num, Sym, Neg, BinOp, Pow], Field(discriminator="kind")]

for _model in (Neg, BinOp, Pow):
    _model.model_rebuild()


def expr_symbols(expr) -> set:
    """Every symbol name an expression mentions"""
    if isinstance(expr, Sym):
        return {expr.name}
    if isinstance(expr, Neg):
        return expr_symbols(expr.operand)
    if isinstance(expr, BinOp):
        return expr_symbols(expr.left) | expr_symbols(expr.right)
    if isinstance(expr, Pow):
        return expr_symbols(expr.base)
    return set()


# ------------------------------------------------------------------ sections
class FieldDecl(Node):
    """``field F3(t);`` or ``field Q;``"""

    name: str
    indeterminates: List[str] = Field(default_factory=list)


class GenDecl(Node):
    name: str
    kind: Literal["trans", "alg"]
    minpoly: Optional[Expr] = None


class Assignment(Node):
    """``symbol -> expr`` in an operator table, ``symbol = expr`` elsewhere"""

    symbol: str
    value: Expr


class OperatorDecl(Node):
    name: str
    images: List[Assignment] = Field(default_factory=list)


class EntryDecl(Node):
    """One kernel entry: a transcendental, a root of ``expr``, or the value ``expr``"""

    symbol: str
    kind: Literal["trans", "alg", "value"]
    expr: Optional[Expr] = None


class KernelDecl(Node):
    name: str
    derivation: str
    n: int
    r: int
    entries: List[EntryDecl] = Field(default_factory=list)


class DDKernelDecl(Node):
    name: str
    derivation: str
    endomorphism: str
    n: int
    r: int
    s: int
    entries: List[EntryDecl] = Field(default_factory=list)


class DifferenceDecl(Node):
    name: str
    endomorphism: str
    n: int
    depth: int
    entries: List[EntryDecl] = Field(default_factory=list)
    assume: Optional[Literal["separable", "inseparable"]] = None


class HypothesisDecl(Node):
    name: str
    kernel: str
    M: int = 0
    I: List[Tuple[int, int]] = Field(default_factory=list)
    x: List[str] = Field(default_factory=list)
    t: int = 0
    d: int = 0
    choices: List[Assignment] = Field(default_factory=list)


class StepDecl(Node):
    n: int
    kind: Literal["trans", "alg", "value"]
    expr: Optional[Expr] = None


class PreimageDecl(Node):
    name: str
    derivation: str
    endomorphism: str
    b: Expr
    depth: int
    steps: List[StepDecl] = Field(default_factory=list)


class PerfectDecl(Node):
    name: str
    derivation: str
    endomorphism: str
    constants: List[Expr] = Field(default_factory=list)
    depth: int = 0


class SpecDocument(Node):
    """
    A parsed document. Sections keep their source order within each kind;
    the canonical printer emits the kinds in the order of these fields.
    """

    field: FieldDecl
    gens: List[GenDecl] = Field(default_factory=list)
    derivations: List[OperatorDecl] = Field(default_factory=list)
    endomorphisms: List[OperatorDecl] = Field(default_factory=list)
    kernels: List[KernelDecl] = Field(default_factory=list)
    ddkernels: List[DDKernelDecl] = Field(default_factory=list)
    differences: List[DifferenceDecl] = Field(default_factory=list)
    hypotheses: List[HypothesisDecl] = Field(default_factory=list)
    preimages: List[PreimageDecl] = Field(default_factory=list)
    perfects: List[PerfectDecl] = Field(default_factory=list)

    def block_names(self) -> List[str]:
        blocks = (self.derivations, self.endomorphisms, self.kernels, self.ddkernels,
                  self.differences, self.hypotheses, self.preimages, self.perfects)
        return [block.name for group in blocks for block in group]

    def find(self, name: str):
        """The named block, or None"""
        for group in (self.derivations, self.endomorphisms, self.kernels, self.ddkernels,
                      self.differences, self.hypotheses, self.preimages, self.perfects):
            for block in group:
                if block.name == name:
                    return block
        return None
