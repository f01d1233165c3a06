"""
Canonical printing of documents and expressions
"""

from typing import List

from .ast import BinOp, EntryDecl, Neg, Num, Pow, SpecDocument, Sym
from .grammar import PRECEDENCE

INDENT = "    "


def _precedence(expr) -> int:
    if isinstance(expr, BinOp):
        return PRECEDENCE[expr.op]
    if isinstance(expr, Neg):
        return PRECEDENCE["neg"]
    if isinstance(expr, Pow):
        return PRECEDENCE["^"]
    return PRECEDENCE["atom"]


def _wrap(expr, parenthesize: bool) -> str:
    text = print_expr(expr)
    return f"({text})" if parenthesize else text


def print_expr(expr) -> str:
    """
    Minimal parenthesization for left-associative + - * /, prefix minus and ^

    Parsing the result gives back the same tree.
    """
    if isinstance(expr, Num):
        return str(expr.value)
    if isinstance(expr, Sym):
        return expr.name
    if isinstance(expr, Neg):
        return "-" + _wrap(expr.operand, _precedence(expr.operand) < PRECEDENCE["neg"])
    if isinstance(expr, Pow):
        return _wrap(expr.base, _precedence(expr.base) < PRECEDENCE["atom"]) + f"^{expr.exponent}"
    level = PRECEDENCE[expr.op]
    left = _wrap(expr.left, _precedence(expr.left) < level)
    right = _wrap(expr.right, _precedence(expr.right) <= level)
    if expr.op in "+-":
        return f"{left} {expr.op} {right}"
    return f"{left}{expr.op}{right}"


def _entry(entry: EntryDecl) -> str:
    if entry.kind == "trans":
        return f"{entry.symbol} trans;"
    if entry.kind == "alg":
        return f"{entry.symbol} alg {print_expr(entry.expr)};"
    return f"{entry.symbol} = {print_expr(entry.expr)};"


def _block(header: str, lines: List[str]) -> List[str]:
    if not lines:
        return [f"{header} {{}}"]
    return [f"{header} {{"] + [INDENT + line for line in lines] + ["}"]


def print_spec(doc: SpecDocument) -> str:
    """Canonical text of a document; comments and layout are not preserved"""
    field = doc.field.name
    if doc.field.indeterminates:
        field += "(" + ", ".join(doc.field.indeterminates) + ")"
    out = [f"field {field};"]
    for gen in doc.gens:
        if gen.kind == "trans":
            out.append(f"gen {gen.name} trans;")
        else:
            out.append(f"gen {gen.name} alg {print_expr(gen.minpoly)};")

    blocks: List[List[str]] = []
    for label, group in (("derivation", doc.derivations), ("endomorphism", doc.endomorphisms)):
        for decl in group:
            images = [f"{a.symbol} -> {print_expr(a.value)};" for a in decl.images]
            blocks.append(_block(f"{label} {decl.name}", images))
    for decl in doc.kernels:
        header = f"kernel {decl.name} over {decl.derivation} (n = {decl.n}, r = {decl.r})"
        blocks.append(_block(header, [_entry(e) for e in decl.entries]))
    for decl in doc.ddkernels:
        header = (f"ddkernel {decl.name} over {decl.derivation}, {decl.endomorphism} "
                  f"(n = {decl.n}, r = {decl.r}, s = {decl.s})")
        blocks.append(_block(header, [_entry(e) for e in decl.entries]))
    for decl in doc.differences:
        header = f"difference {decl.name} over {decl.endomorphism} (n = {decl.n}, depth = {decl.depth})"
        lines = [_entry(e) for e in decl.entries]
        if decl.assume:
            lines.append(f"assume {decl.assume};")
        blocks.append(_block(header, lines))
    for decl in doc.hypotheses:
        lines = [f"M = {decl.M};"]
        if decl.I:
            lines.append("I = " + ", ".join(f"({xi},{i})" for xi, i in decl.I) + ";")
        if decl.x:
            lines.append("x = " + ", ".join(decl.x) + ";")
        lines += [f"t = {decl.t};", f"d = {decl.d};"]
        lines += [f"choice {c.symbol} = {print_expr(c.value)};" for c in decl.choices]
        blocks.append(_block(f"hypothesis {decl.name} for {decl.kernel}", lines))
    for decl in doc.preimages:
        lines = [f"b = {print_expr(decl.b)};", f"depth = {decl.depth};"]
        for step in decl.steps:
            if step.kind == "trans":
                lines.append(f"step {step.n} trans;")
            elif step.kind == "alg":
                lines.append(f"step {step.n} alg {print_expr(step.expr)};")
            else:
                lines.append(f"step {step.n} = {print_expr(step.expr)};")
        header = f"preimage {decl.name} over {decl.derivation}, {decl.endomorphism}"
        blocks.append(_block(header, lines))
    for decl in doc.perfects:
        lines = []
        if decl.constants:
            lines.append("constants " + ", ".join(print_expr(c) for c in decl.constants) + ";")
        lines.append(f"depth = {decl.depth};")
        header = f"perfect {decl.name} over {decl.derivation}, {decl.endomorphism}"
        blocks.append(_block(header, lines))

    for block in blocks:
        out.append("")
        out.extend(block)
    return "\n".join(out) + "\n"
