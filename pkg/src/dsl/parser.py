"""
Parsing documents into SpecDocument, with symbol resolution
"""

import logging
import re
from functools import lru_cache
from typing import Dict, Iterable, List, Set, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken, VisitError

from ..utils.validators import (
    ArityMismatch,
    DSLSyntaxError,
    UnresolvedSymbol,
    ValidationError,
    split_indexed_symbol,
    validate_unique_names,
)
from .ast import (
    Assignment,
    BinOp,
    DDKernelDecl,
    DifferenceDecl,
    EntryDecl,
    FieldDecl,
    GenDecl,
    HypothesisDecl,
    KernelDecl,
    Neg,
    Num,
    OperatorDecl,
    PerfectDecl,
    Pow,
    PreimageDecl,
    SpecDocument,
    StepDecl,
    Sym,
    expr_symbols,
)
from .grammar import DOCUMENT_GRAMMAR

logger = logging.getLogger(__name__)

SECTIONS = {
    "gen": "gens",
    "derivation": "derivations",
    "endomorphism": "endomorphisms",
    "kernel": "kernels",
    "ddkernel": "ddkernels",
    "difference": "differences",
    "hypothesis": "hypotheses",
    "preimage": "preimages",
    "perfect": "perfects",
}

HYPOTHESIS_INTS = ("M", "t", "d")
PREIMAGE_LETTER = "c"


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(DOCUMENT_GRAMMAR, start=["document", "expr"], parser="lalr",
                lexer="contextual", maybe_placeholders=True, propagate_positions=False)


def _params(block: str, name: str, pairs: List[Tuple[str, int]], keys: Tuple[str, ...]) -> Dict[str, int]:
    found = {}
    for key, value in pairs:
        if key not in keys:
            raise ValidationError(f"{block} '{name}': unknown parameter '{key}' (expected {', '.join(keys)})")
        if key in found:
            raise ValidationError(f"{block} '{name}': parameter '{key}' given twice")
        found[key] = value
    missing = [key for key in keys if key not in found]
    if missing:
        raise ValidationError(f"{block} '{name}': missing parameter(s) {', '.join(missing)}")
    return found


@v_args(inline=True)
class DocumentTransformer(Transformer):
    """Builds the pydantic document model from the lark tree"""

    # expressions
    def number(self, token):
        return Num(value=int(token))

    def symbol(self, token):
        return Sym(name=str(token))

    def neg(self, operand):
        return Neg(operand=operand)

    def add(self, left, right):
        return BinOp(op="+", left=left, right=right)

    def sub(self, left, right):
        return BinOp(op="-", left=left, right=right)

    def mul(self, left, right):
        return BinOp(op="*", left=left, right=right)

    def div(self, left, right):
        return BinOp(op="/", left=left, right=right)

    def pow(self, base, exponent):
        return Pow(base=base, exponent=int(exponent))

    # header
    def name_list(self, *names):
        return [str(name) for name in names]

    def field_decl(self, name, names):
        return FieldDecl(name=str(name), indeterminates=names or [])

    def gen_trans(self, name):
        return "gen", GenDecl(name=str(name), kind="trans")

    def gen_alg(self, name, minpoly):
        return "gen", GenDecl(name=str(name), kind="alg", minpoly=minpoly)

    # operators
    def image(self, name, value):
        return Assignment(symbol=str(name), value=value)

    def derivation_decl(self, name, *images):
        return "derivation", OperatorDecl(name=str(name), images=list(images))

    def endomorphism_decl(self, name, *images):
        return "endomorphism", OperatorDecl(name=str(name), images=list(images))

    # kernels
    def param(self, key, value):
        return str(key), int(value)

    def params(self, *pairs):
        return list(pairs)

    def entry_trans(self, name):
        return EntryDecl(symbol=str(name), kind="trans")

    def entry_alg(self, name, expr):
        return EntryDecl(symbol=str(name), kind="alg", expr=expr)

    def entry_value(self, name, expr):
        return EntryDecl(symbol=str(name), kind="value", expr=expr)

    def assume(self, word):
        word = str(word)
        if word not in ("separable", "inseparable"):
            raise ValidationError(f"'assume' takes separable or inseparable, not '{word}'")
        return word

    def kernel_decl(self, name, over, params, *entries):
        values = _params("kernel", str(name), params, ("n", "r"))
        return "kernel", KernelDecl(name=str(name), derivation=str(over), entries=list(entries), **values)

    def ddkernel_decl(self, name, over_d, over_s, params, *entries):
        values = _params("ddkernel", str(name), params, ("n", "r", "s"))
        return "ddkernel", DDKernelDecl(name=str(name), derivation=str(over_d),
                                        endomorphism=str(over_s), entries=list(entries), **values)

    def difference_decl(self, name, over, params, *items):
        values = _params("difference", str(name), params, ("n", "depth"))
        assumptions = [item for item in items if isinstance(item, str)]
        if len(assumptions) > 1:
            raise ValidationError(f"difference '{name}': more than one 'assume'")
        entries = [item for item in items if isinstance(item, EntryDecl)]
        return "difference", DifferenceDecl(name=str(name), endomorphism=str(over), entries=entries,
                                            assume=assumptions[0] if assumptions else None, **values)

    # hypothesis data
    def pair(self, first, second):
        return int(first), int(second)

    def hyp_int(self, key, value):
        return str(key), int(value)

    def hyp_pairs(self, key, *pairs):
        return str(key), list(pairs)

    def hyp_names(self, key, names):
        return str(key), names

    def hyp_choice(self, name, value):
        return Assignment(symbol=str(name), value=value)

    def hypothesis_decl(self, name, kernel, *items):
        values = {}
        choices = []
        for item in items:
            if isinstance(item, Assignment):
                choices.append(item)
                continue
            key, value = item
            expected = "int" if key in HYPOTHESIS_INTS else {"I": "pairs", "x": "names"}.get(key)
            if expected is None:
                raise ValidationError(f"hypothesis '{name}': unknown setting '{key}'")
            kind = "int" if isinstance(value, int) else (
                "pairs" if value and isinstance(value[0], tuple) else "names")
            if kind != expected:
                raise ValidationError(f"hypothesis '{name}': '{key}' needs {expected}, got {kind}")
            if key in values:
                raise ValidationError(f"hypothesis '{name}': '{key}' given twice")
            values[key] = value
        return "hypothesis", HypothesisDecl(name=str(name), kernel=str(kernel), choices=choices, **values)

    # construction plans
    def plan_setting(self, key, value):
        return str(key), value

    def step_trans(self, n):
        return StepDecl(n=int(n), kind="trans")

    def step_alg(self, n, expr):
        return StepDecl(n=int(n), kind="alg", expr=expr)

    def step_value(self, n, expr):
        return StepDecl(n=int(n), kind="value", expr=expr)

    def preimage_decl(self, name, over_d, over_s, *items):
        settings = {}
        steps = []
        for item in items:
            if isinstance(item, StepDecl):
                steps.append(item)
                continue
            key, value = item
            if key not in ("b", "depth") or key in settings:
                raise ValidationError(f"preimage '{name}': unexpected setting '{key}'")
            settings[key] = value
        if set(settings) != {"b", "depth"}:
            raise ValidationError(f"preimage '{name}' needs both 'b' and 'depth'")
        if not isinstance(settings["depth"], Num):
            raise ValidationError(f"preimage '{name}': depth must be an integer")
        return "preimage", PreimageDecl(name=str(name), derivation=str(over_d), endomorphism=str(over_s),
                                        b=settings["b"], depth=settings["depth"].value, steps=steps)

    def perfect_constants(self, *exprs):
        return "constants", list(exprs)

    def perfect_setting(self, key, value):
        if str(key) != "depth":
            raise ValidationError(f"unexpected perfect setting '{key}'")
        return "depth", int(value)

    def perfect_decl(self, name, over_d, over_s, *items):
        values = {}
        for key, value in items:
            if key in values:
                raise ValidationError(f"perfect '{name}': '{key}' given twice")
            values[key] = value
        return "perfect", PerfectDecl(name=str(name), derivation=str(over_d),
                                      endomorphism=str(over_s), **values)

    def document(self, field, *statements):
        sections: Dict[str, list] = {key: [] for key in SECTIONS.values()}
        for kind, decl in statements:
            sections[SECTIONS[kind]].append(decl)
        return SpecDocument(field=field, **sections)


_DANGLING = re.compile(r"->|[A-Za-z_][A-Za-z0-9_]*(?:\[[0-9]+\])*|[0-9]+|\S")


def _last_token(text: str) -> Tuple[int, int, str]:
    """Line, column and text of the last token before end of input"""
    best = (1, 1, "")
    for number, line in enumerate(text.splitlines(), start=1):
        code = line.split("#", 1)[0]
        for match in _DANGLING.finditer(code):
            best = (number, match.start() + 1, match.group(0))
    return best


def _syntax_error(text: str, exc: UnexpectedInput) -> DSLSyntaxError:
    if isinstance(exc, UnexpectedToken):
        if exc.token.type == "$END":
            line, column, token = _last_token(text)
            return DSLSyntaxError("unexpected end of input after", line, column, token)
        expected = ", ".join(sorted(exc.expected)[:6])
        return DSLSyntaxError(f"unexpected token (expected one of {expected})",
                              exc.line, exc.column, str(exc.token))
    if isinstance(exc, UnexpectedCharacters):
        return DSLSyntaxError("unexpected character", exc.line, exc.column, exc.char)
    line, column, token = _last_token(text)
    return DSLSyntaxError("unexpected end of input after", line, column, token)


def _transform(text: str, start: str):
    try:
        tree = _parser().parse(text, start=start)
    except UnexpectedInput as exc:
        raise _syntax_error(text, exc) from exc
    try:
        return DocumentTransformer().transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from exc


def parse_expression(text: str):
    """Parse a single expression"""
    return _transform(text, "expr")


def parse_spec(text: str) -> SpecDocument:
    """
    Parse a document and resolve every symbol reference

    Args:
        text: Document text

    Returns:
        SpecDocument

    Raises:
        DSLSyntaxError: With line, column and offending token
        UnresolvedSymbol: When a name is used before it is declared
        ArityMismatch: When an indexed name carries the wrong number of indices
    """
    document = _transform(text, "document")
    resolve(document)
    logger.debug("parsed document over %s with blocks %s", document.field.name, document.block_names())
    return document


# ---------------------------------------------------------------- resolution
def _check(expr, known: Set[str], context: str) -> None:
    for name in sorted(expr_symbols(expr)):
        if name not in known:
            raise UnresolvedSymbol(name, context)


def _check_entries(entries: Iterable[EntryDecl], arity: int, known: Set[str], context: str) -> Set[str]:
    """Entries may use the field symbols and every entry before them"""
    seen = set(known)
    letters = set()
    for entry in entries:
        letter, _ = split_indexed_symbol(entry.symbol, arity)
        letters.add(letter)
        if entry.symbol in seen:
            raise ValidationError(f"{context}: '{entry.symbol}' is declared twice")
        if entry.kind == "alg":
            _check(entry.expr, seen | {entry.symbol}, f"{context}, entry {entry.symbol}")
        elif entry.kind == "value":
            _check(entry.expr, seen, f"{context}, entry {entry.symbol}")
        seen.add(entry.symbol)
    if len(letters) > 1:
        raise ValidationError(f"{context}: entries mix the letters {sorted(letters)}")
    return seen


def _operator(names: Dict[str, str], name: str, wanted: str, context: str) -> None:
    if names.get(name) != wanted:
        raise UnresolvedSymbol(name, f"{context} ({wanted} expected)")


def resolve(document: SpecDocument) -> None:
    """Check that every reference resolves and indexed names have the right arity"""
    field_symbols = list(document.field.indeterminates)
    known: Set[str] = set()
    for name in document.field.indeterminates:
        known.add(name)
    for gen in document.gens:
        if gen.kind == "alg":
            _check(gen.minpoly, known | {gen.name}, f"generator {gen.name}")
        known.add(gen.name)
        field_symbols.append(gen.name)
    validate_unique_names(field_symbols, "field symbol")
    validate_unique_names(document.block_names(), "block name")

    kinds: Dict[str, str] = {}
    for decl in document.derivations:
        kinds[decl.name] = "derivation"
    for decl in document.endomorphisms:
        kinds[decl.name] = "endomorphism"
    for group, label in ((document.derivations, "derivation"), (document.endomorphisms, "endomorphism")):
        for decl in group:
            validate_unique_names([image.symbol for image in decl.images], f"image in {decl.name}")
            for image in decl.images:
                if image.symbol not in known:
                    raise UnresolvedSymbol(image.symbol, f"{label} {decl.name}")
                _check(image.value, known, f"{label} {decl.name}")

    for decl in document.kernels:
        _operator(kinds, decl.derivation, "derivation", f"kernel {decl.name}")
        _check_entries(decl.entries, 2, known, f"kernel {decl.name}")
    ddkernel_entries: Dict[str, Set[str]] = {}
    for decl in document.ddkernels:
        _operator(kinds, decl.derivation, "derivation", f"ddkernel {decl.name}")
        _operator(kinds, decl.endomorphism, "endomorphism", f"ddkernel {decl.name}")
        ddkernel_entries[decl.name] = _check_entries(decl.entries, 3, known, f"ddkernel {decl.name}")
    for decl in document.differences:
        _operator(kinds, decl.endomorphism, "endomorphism", f"difference {decl.name}")
        _check_entries(decl.entries, 2, known, f"difference {decl.name}")

    for decl in document.hypotheses:
        if decl.kernel not in ddkernel_entries:
            raise UnresolvedSymbol(decl.kernel, f"hypothesis {decl.name} (ddkernel expected)")
        for name in decl.x:
            split_indexed_symbol(name, 3)
            if name not in ddkernel_entries[decl.kernel]:
                raise UnresolvedSymbol(name, f"hypothesis {decl.name}")
        for choice in decl.choices:
            split_indexed_symbol(choice.symbol, 3)
            # choices may name entries that only exist after realization
            for name in sorted(expr_symbols(choice.value) - known):
                try:
                    split_indexed_symbol(name, 3)
                except ArityMismatch:
                    raise
                except ValidationError:
                    raise UnresolvedSymbol(name, f"hypothesis {decl.name}, choice {choice.symbol}")

    for decl in document.preimages:
        _operator(kinds, decl.derivation, "derivation", f"preimage {decl.name}")
        _operator(kinds, decl.endomorphism, "endomorphism", f"preimage {decl.name}")
        _check(decl.b, known, f"preimage {decl.name}")
        available = set(known)
        for position, step in enumerate(decl.steps):
            if step.n != position:
                raise ValidationError(f"preimage {decl.name}: step {step.n} out of order, expected {position}")
            own = f"{PREIMAGE_LETTER}[{step.n}]"
            if step.expr is not None:
                _check(step.expr, available | ({own} if step.kind == "alg" else set()),
                       f"preimage {decl.name}, step {step.n}")
            available.add(own)

    for decl in document.perfects:
        _operator(kinds, decl.derivation, "derivation", f"perfect {decl.name}")
        _operator(kinds, decl.endomorphism, "endomorphism", f"perfect {decl.name}")
        for constant in decl.constants:
            _check(constant, known, f"perfect {decl.name}")

