import pytest

from src.ddkernels.dd_kernel import dd_verify
from src.ddkernels.difference import MET_WITH_EQUALITY, VIOLATED, difference_leader_classify
from src.dsl.ast import BinOp, Num, Sym
from src.dsl.builder import build_document
from src.dsl.parser import parse_expression, parse_spec
from src.dsl.printer import print_expr, print_spec
from src.kernels.diff_kernel import kernel_verify
from src.kernels.gamma import Gamma2Index
from src.utils.validators import ArityMismatch, DSLSyntaxError, UnresolvedSymbol, ValidationError

MINIMAL = """
field F3(t);
gen x trans;
derivation d { t -> 1; x -> t; }
"""


class TestParser:
    def test_minimal_document(self):
        doc = parse_spec(MINIMAL)
        assert doc.field.name == "F3"
        assert doc.field.indeterminates == ["t"]
        assert [g.name for g in doc.gens] == ["x"]
        (d,) = doc.derivations
        assert d.images[1].value == Sym(name="t")

    def test_precedence(self):
        expr = parse_expression("1 + t*x^2")
        assert isinstance(expr, BinOp) and expr.op == "+"
        assert expr.left == Num(value=1)
        assert expr.right.op == "*"

    def test_comments_are_ignored(self):
        assert parse_spec("# header\nfield Q; # trailing\n") == parse_spec("field Q;")

    def test_dangling_operator(self):
        with pytest.raises(DSLSyntaxError) as info:
            parse_spec("field Q(t);\ngen a alg a^2 -")
        assert info.value.line == 2
        assert info.value.token == "-"
        assert info.value.column == 15

    def test_unexpected_character(self):
        with pytest.raises(DSLSyntaxError) as info:
            parse_spec("field Q;\ngen x trans;\n@")
        assert info.value.line == 3

    def test_unresolved_symbol(self):
        with pytest.raises(UnresolvedSymbol) as info:
            parse_spec("field Q(t);\nderivation d { t -> u; }")
        assert info.value.name == "u"

    def test_operator_kind_is_checked(self):
        text = "field Q;\nendomorphism s {}\nkernel k over s (n = 1, r = 0) { a[1][0] trans; }"
        with pytest.raises(UnresolvedSymbol):
            parse_spec(text)

    def test_arity_mismatch(self):
        text = "field Q;\nderivation d {}\nkernel k over d (n = 1, r = 0) { a[1][0][0] trans; }"
        with pytest.raises(ArityMismatch) as info:
            parse_spec(text)
        assert (info.value.expected, info.value.found) == (2, 3)

    def test_missing_parameter(self):
        with pytest.raises(ValidationError):
            parse_spec("field Q;\nderivation d {}\nkernel k over d (n = 1) { a[1][0] trans; }")

    def test_entry_may_only_use_earlier_entries(self):
        text = ("field Q;\nderivation d {}\n"
                "kernel k over d (n = 1, r = 1) { a[1][0] = a[1][1]; a[1][1] trans; }")
        with pytest.raises(UnresolvedSymbol):
            parse_spec(text)


class TestPrinter:
    @pytest.mark.parametrize("text, expected", [
        ("a - (b - c)", "a - (b - c)"),
        ("(a - b) - c", "a - b - c"),
        ("-(a + b)^2", "-(a + b)^2"),
        ("a/(b*c)", "a/(b*c)"),
        ("(a*b)/c", "a*b/c"),
        ("(-a)^3", "(-a)^3"),
    ])
    def test_minimal_parentheses(self, text, expected):
        assert print_expr(parse_expression(text)) == expected

    def test_shipped_documents_round_trip(self, data_dir):
        paths = sorted(data_dir.glob("*.d[dk]"))
        assert paths
        for path in paths:
            doc = parse_spec(path.read_text(encoding="utf-8"))
            printed = print_spec(doc)
            assert parse_spec(printed) == doc, path.name
            assert print_spec(parse_spec(printed)) == printed, path.name


class TestBuilder:
    def test_riccati_kernel(self, load_document):
        kernel = load_document("riccati.dk").kernel()
        assert (kernel.n, kernel.r) == (1, 1)
        assert kernel_verify(kernel).ok

    def test_element(self, load_document):
        built = load_document("noncommuting.dd")
        t = built.tower.gen("t")
        assert built.element("(t + 1)^3") == t ** 3 + 1

    def test_difference_documents(self, load_document):
        equality = difference_leader_classify(load_document("difference_equality.dd").difference())
        assert equality.verdict == MET_WITH_EQUALITY
        inseparable = difference_leader_classify(load_document("difference_inseparable.dd").difference())
        assert inseparable.verdict == VIOLATED
        assert inseparable.extension_inseparable

    def test_hypothesis_block(self, load_document):
        kernel, data = load_document("free_slot.dd").hypothesis()
        assert data.M == 0
        assert data.enumeration == [Gamma2Index(0, 0, 1)]
        slot = Gamma2Index(1, 2, 1)
        assert slot in data.choices
        assert dd_verify(kernel).ok

    def test_preimage_plan(self, load_document):
        F, plan = load_document("preimage.dd").preimage()
        assert plan.depth == 0
        assert plan.b == F.tower.gen("t")

    def test_unknown_block_name(self, load_document):
        with pytest.raises(UnresolvedSymbol):
            load_document("riccati.dk").kernel("missing")

    def test_bad_minimal_polynomial(self):
        with pytest.raises(ValidationError):
            build_document(parse_spec("field Q(t);\ngen a alg 2*a^2 - t;"))
