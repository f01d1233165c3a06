"""
Field axioms, operator rules and p-th roots on small towers
"""

import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.arith.field import BaseField
from src.operators.derivation import Derivation
from src.operators.endomorphism import Endomorphism
from src.tower.element import Element
from src.tower.pth_power import is_pth_power
from src.tower.tower import GenSpec, Tower
from src.tower.upoly import ElementPoly
from tests.strategies import element_from_terms, rational_elements, terms

EXAMPLES = 500


def _sqrt_tower(p: int) -> Tower:
    K = Tower(BaseField(p), ["t"])
    return K.extend(GenSpec("a", ElementPoly.monomial(K, 2, 1, "a") - K.gen("t")))


SQRT5 = _sqrt_tower(5)
SQRT_Q = _sqrt_tower(0)
F3TU = Tower(BaseField(3), ["t", "u"])

DELTA5 = Derivation(SQRT5, {"t": 1}, {"a": Derivation(SQRT5, {"t": 1}).forced_value("a")})
DELTA_Q = Derivation(SQRT_Q, {"t": 1}, {"a": Derivation(SQRT_Q, {"t": 1}).forced_value("a")})
# Frobenius on F_5(t)(a)
FROB5 = Endomorphism(SQRT5, None, {"t": SQRT5.gen("t") ** 5}, {"a": SQRT5.gen("a") ** 5})

towers = st.sampled_from([SQRT5, SQRT_Q])


@settings(max_examples=EXAMPLES)
@given(st.data())
def test_ring_axioms(data):
    tower = data.draw(towers)
    x, y, z = (data.draw(rational_elements(tower)) for _ in range(3))
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    assert x * 1 == x


@settings(max_examples=EXAMPLES)
@given(st.data())
def test_inverses(data):
    tower = data.draw(towers)
    x = data.draw(rational_elements(tower))
    assume(not x.is_zero())
    assert x * x.inverse() == 1
    assert (1 / x) / (1 / x) == 1
    y = data.draw(rational_elements(tower))
    assert (y / x) * x == y


@settings(max_examples=EXAMPLES)
@given(terms(max_t=3), terms(max_t=3))
def test_products_match_sympy_reduction(left, right):
    a, t = sympy.symbols("a t")
    product = (element_from_terms(SQRT5, left) * element_from_terms(SQRT5, right))
    expanded = sympy.expand(
        sum((c * t ** i * a ** j for (i, j), c in left.items()), sympy.Integer(0))
        * sum((c * t ** i * a ** j for (i, j), c in right.items()), sympy.Integer(0))
    )
    remainder = sympy.Poly(expanded, a, t, modulus=5).rem(sympy.Poly(a ** 2 - t, a, t, modulus=5))
    expected = {(i, j): int(c) for (j, i), c in remainder.terms()}
    assert product == element_from_terms(SQRT5, expected)


@settings(max_examples=EXAMPLES)
@given(st.data())
def test_leibniz_rule(data):
    tower, delta = data.draw(st.sampled_from([(SQRT5, DELTA5), (SQRT_Q, DELTA_Q)]))
    x = data.draw(rational_elements(tower))
    y = data.draw(rational_elements(tower))
    assert delta.apply(x * y) == delta.apply(x) * y + x * delta.apply(y)
    assert delta.apply(x + y) == delta.apply(x) + delta.apply(y)
    if not y.is_zero():
        assert delta.apply(x / y) == (delta.apply(x) * y - x * delta.apply(y)) / y ** 2


@settings(max_examples=EXAMPLES)
@given(rational_elements(SQRT5), rational_elements(SQRT5))
def test_frobenius_is_multiplicative(x, y):
    assert FROB5.apply(x * y) == FROB5.apply(x) * FROB5.apply(y)
    assert FROB5.apply(x + y) == FROB5.apply(x) + FROB5.apply(y)
    assert FROB5.apply(x) == x ** 5
    assert DELTA5.apply(x ** 5) == 0


def _monomial_quotient(coefficients, j):
    num = element_from_terms(F3TU, coefficients, a="u")
    return num / F3TU.gen("t") ** j


@settings(max_examples=EXAMPLES)
@given(terms(max_t=3, max_a=2), st.integers(0, 2))
def test_cubes_have_cube_roots(coefficients, j):
    x = _monomial_quotient(coefficients, j)
    assert is_pth_power(x ** 3) == x


@settings(max_examples=EXAMPLES)
@given(terms(max_t=3, max_a=2), st.integers(0, 2))
def test_twisted_cubes_have_none(coefficients, j):
    x = _monomial_quotient(coefficients, j)
    assume(not x.is_zero())
    assert is_pth_power(x ** 3 * F3TU.gen("t")) is None


def _radical_towers(p: int):
    """F_p(t, u)(a) with a^p = t + 1, then (b) with b^p = t^2 + t·u"""
    K = Tower(BaseField(p), ["t", "u"])
    t, u = K.gen("t"), K.gen("u")
    one = K.extend(GenSpec("a", ElementPoly.monomial(K, p, 1, "a") - (t + 1)))
    two = one.extend(GenSpec("b", ElementPoly.monomial(one, p, 1, "b") - one.coerce(t * t + t * u)))
    return one, two


RADICAL_TOWERS = {p: _radical_towers(p) for p in (2, 3)}


@st.composite
def radical_elements(draw, tower: Tower) -> Element:
    p = tower.field.characteristic
    num = element_from_terms(tower, draw(terms(max_a=p - 1)))
    num = num + element_from_terms(tower, draw(terms(max_t=1, max_a=p - 1)), t="u", a="b")
    den = element_from_terms(tower, draw(terms(max_t=1, max_a=0)))
    return num if den.is_zero() else num / den


@settings(max_examples=50)
@given(st.data())
def test_powers_through_non_monomial_radicands(data):
    p = data.draw(st.sampled_from([2, 3]))
    tower = data.draw(st.sampled_from(RADICAL_TOWERS[p]))
    x = data.draw(radical_elements(tower))
    assert is_pth_power(x ** p) == x


@settings(max_examples=100)
@given(st.data())
def test_u_stays_without_root_over_one_radicand(data):
    p = data.draw(st.sampled_from([2, 3]))
    tower = RADICAL_TOWERS[p][0]
    x = data.draw(radical_elements(tower))
    assume(not x.is_zero())
    assert is_pth_power(x ** p * tower.gen("u")) is None
    assert is_pth_power(tower.gen("t")) is not None
