from hypothesis import given, settings

from src.dsl.parser import parse_expression, parse_spec
from src.dsl.printer import print_expr, print_spec
from tests.strategies import documents, expressions


@settings(max_examples=200)
@given(documents())
def test_printed_documents_parse_back(doc):
    printed = print_spec(doc)
    assert parse_spec(printed) == doc
    assert print_spec(parse_spec(printed)) == printed


@settings(max_examples=500)
@given(expressions({"t", "x", "a[1][0]"}))
def test_printed_expressions_parse_back(expr):
    assert parse_expression(print_expr(expr)) == expr
