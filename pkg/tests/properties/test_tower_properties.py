import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.arith.field import BaseField
from src.tower.element import normal_form
from src.tower.tower import GenSpec, Tower
from src.tower.upoly import ElementPoly
from src.utils.errors import ReducibleMinPoly
from tests.strategies import element_from_terms, rational_elements, terms

EXAMPLES = 500

BASES = [Tower(BaseField(p), ["t"]) for p in (0, 3, 5)]


def _square_tower(K: Tower, h):
    """K(x) with x^2 = h^2, reducible whatever h is"""
    return K.extend(GenSpec("x", ElementPoly(K, [-(h * h), 0, 1], "x")))


@settings(max_examples=EXAMPLES)
@given(st.data())
def test_normal_form_is_idempotent(data):
    K = data.draw(st.sampled_from(BASES))
    tower = K.extend(GenSpec("a", ElementPoly.monomial(K, 3, 1, "a") - K.gen("t")))
    e = data.draw(rational_elements(tower, max_a=2)) * data.draw(rational_elements(tower, max_a=2))
    once = normal_form(e)
    twice = normal_form(once)
    assert once == e
    assert (twice.num, twice.den) == (once.num, once.den)


@settings(max_examples=EXAMPLES)
@given(st.sampled_from(BASES), terms(max_a=0))
def test_root_of_a_split_minpoly_has_no_inverse(K, h_terms):
    h = element_from_terms(K, h_terms)
    L = _square_tower(K, h)
    with pytest.raises(ReducibleMinPoly) as info:
        (L.gen("x") - L.coerce(h)).inverse()
    _, remainder = L.spec("x").minpoly.divrem(info.value.factor)
    assert info.value.generator == "x"
    assert info.value.factor.degree() >= 1
    assert remainder.is_zero()


@settings(max_examples=EXAMPLES)
@given(st.sampled_from(BASES), terms(max_a=0), terms(max_a=0), terms(max_a=0))
def test_inverse_or_witness(K, h_terms, a_terms, b_terms):
    h = element_from_terms(K, h_terms)
    L = _square_tower(K, h)
    e = element_from_terms(L, a_terms) * L.gen("x") + element_from_terms(L, b_terms)
    assume(not e.is_zero())
    try:
        inverse = e.inverse()
    except ReducibleMinPoly as exc:
        _, remainder = L.spec("x").minpoly.divrem(exc.factor)
        assert remainder.is_zero()
    else:
        assert e * inverse == 1
        assert inverse * e == 1
