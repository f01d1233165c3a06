"""
Hypothesis strategies for coefficients, tower elements, operator data and documents
"""

from typing import Dict, Tuple

from hypothesis import strategies as st

from src.arith.field import BaseField
from src.dsl.ast import (
    Assignment,
    BinOp,
    DDKernelDecl,
    EntryDecl,
    FieldDecl,
    GenDecl,
    HypothesisDecl,
    KernelDecl,
    Neg,
    Num,
    OperatorDecl,
    Pow,
    SpecDocument,
    Sym,
)
from src.tower.element import Element
from src.tower.tower import Tower

characteristics = st.sampled_from([0, 2, 3, 5, 7])
primes = st.sampled_from([2, 3, 5, 7])
small_ints = st.integers(min_value=-4, max_value=4)

# (i, j) -> coefficient of t^i a^j
Terms = Dict[Tuple[int, int], int]


def terms(max_t: int = 2, max_a: int = 1) -> st.SearchStrategy:
    keys = st.tuples(st.integers(0, max_t), st.integers(0, max_a))
    return st.dictionaries(keys, small_ints, max_size=4)


def element_from_terms(tower: Tower, coefficients: Terms, t: str = "t", a: str = "a") -> Element:
    """Σ c·t^i·a^j in ``tower``; ``a`` is skipped when the tower has no such symbol"""
    value = tower.zero()
    for (i, j), c in coefficients.items():
        if j and not tower.has(a):
            continue
        term = tower.const(c) * tower.gen(t) ** i
        if j:
            term = term * tower.gen(a) ** j
        value = value + term
    return value


def sympy_from_terms(coefficients: Terms, t, a):
    return sum((c * t ** i * a ** j for (i, j), c in coefficients.items()), 0)


@st.composite
def rational_elements(draw, tower: Tower, max_a: int = 1) -> Element:
    """Quotients of small polynomials in t (and a), with a nonzero denominator"""
    num = element_from_terms(tower, draw(terms(max_a=max_a)))
    den_terms = draw(terms(max_t=1, max_a=0))
    den = element_from_terms(tower, den_terms)
    if den.is_zero():
        return num
    return num / den


# ----------------------------------------------------------------- documents
FIELD_SYMBOLS = ["t1", "t2"]
KEYWORD_FREE = ["x", "y"]


def expressions(names) -> st.SearchStrategy:
    leaves = st.one_of(
        st.builds(Num, value=st.integers(0, 12)),
        st.builds(Sym, name=st.sampled_from(sorted(names))),
    )

    def extend(children):
        return st.one_of(
            st.builds(Neg, operand=children),
            st.builds(BinOp, op=st.sampled_from(["+", "-", "*", "/"]), left=children, right=children),
            st.builds(Pow, base=children, exponent=st.integers(0, 4)),
        )

    return st.recursive(leaves, extend, max_leaves=6)


@st.composite
def documents(draw) -> SpecDocument:
    """Resolvable documents: a field, operators, a kernel and a dd-kernel with hypothesis data"""
    p = draw(st.sampled_from([0, 2, 3, 5]))
    indeterminates = FIELD_SYMBOLS[:draw(st.integers(1, 2))]
    field_name = BaseField(p).name
    symbols = set(indeterminates)

    gens = [GenDecl(name="x", kind="trans")]
    symbols.add("x")
    if draw(st.booleans()):
        gens.append(GenDecl(name="y", kind="alg", minpoly=draw(expressions(symbols | {"y"}))))
        symbols.add("y")

    def table(name: str) -> OperatorDecl:
        chosen = draw(st.lists(st.sampled_from(sorted(symbols)), unique=True, max_size=len(symbols)))
        return OperatorDecl(name=name, images=[Assignment(symbol=s, value=draw(expressions(symbols)))
                                               for s in chosen])

    derivation, endomorphism = table("d"), table("s")

    kernel_entries = [EntryDecl(symbol="a[1][0]", kind="trans")]
    second = draw(st.sampled_from(["trans", "alg", "value"]))
    if second == "trans":
        kernel_entries.append(EntryDecl(symbol="a[1][1]", kind="trans"))
    else:
        scope = symbols | {"a[1][0]"} | ({"a[1][1]"} if second == "alg" else set())
        kernel_entries.append(EntryDecl(symbol="a[1][1]", kind=second, expr=draw(expressions(scope))))
    kernel = KernelDecl(name="k", derivation="d", n=1, r=1, entries=kernel_entries)

    dd_entries = []
    seen = set(symbols)
    for xi in range(2):
        for u in range(2):
            name = f"a[1][{xi}][{u}]"
            kind = draw(st.sampled_from(["trans", "value"])) if dd_entries else "trans"
            expr = draw(expressions(seen)) if kind == "value" else None
            dd_entries.append(EntryDecl(symbol=name, kind=kind, expr=expr))
            seen.add(name)
    ddkernel = DDKernelDecl(name="q", derivation="d", endomorphism="s", n=1, r=1, s=1, entries=dd_entries)

    hypothesis = HypothesisDecl(
        name="h", kernel="q",
        M=draw(st.integers(0, 2)),
        I=draw(st.lists(st.tuples(st.integers(0, 2), st.just(1)), max_size=2)),
        x=draw(st.lists(st.sampled_from([e.symbol for e in dd_entries]), unique=True, max_size=3)),
        t=draw(st.integers(0, 3)),
        d=draw(st.integers(0, 3)),
    )
    return SpecDocument(
        field=FieldDecl(name=field_name, indeterminates=indeterminates),
        gens=gens,
        derivations=[derivation],
        endomorphisms=[endomorphism],
        kernels=[kernel],
        ddkernels=[ddkernel],
        hypotheses=[hypothesis],
    )
