"""
derivation_define against a sympy reduction of the extension condition.

Towers are F(t)(a) with a^k = t(1 + c·t), which is Eisenstein at t. A choice
δt = D(t), δa = N(t, a) extends iff k·a^(k-1)·N - c'(t)·D vanishes modulo the
minimal polynomial.

The second family adds a transcendental x below a, with a^k = t(x + c·t):
then δx enters the condition through the partial in x.
"""

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arith.field import BaseField
from src.operators.derivation import Derivation, derivation_define
from src.tower.tower import GenSpec, Tower
from src.tower.upoly import ElementPoly
from src.utils.errors import InvalidDerivation
from tests.strategies import element_from_terms, small_ints, sympy_from_terms, terms

A, T = sympy.symbols("a t")


def _tower(p: int, k: int, c: int) -> Tower:
    K = Tower(BaseField(p), ["t"])
    t = K.gen("t")
    return K.extend(GenSpec("a", ElementPoly.monomial(K, k, 1, "a") - t * (1 + c * t)))


def _extends(p: int, k: int, c: int, dt, n) -> bool:
    radicand = T * (1 + c * T)
    condition = sympy.expand(k * A ** (k - 1) * sympy_from_terms(n, T, A)
                             - sympy.diff(radicand, T) * sympy_from_terms(dt, T, A))
    options = {"modulus": p} if p else {"domain": sympy.QQ}
    remainder = sympy.Poly(condition, A, T, **options).rem(sympy.Poly(A ** k - radicand, A, T, **options))
    return remainder.is_zero


@settings(max_examples=250)
@given(st.data())
def test_define_agrees_with_sympy(data):
    p = data.draw(st.sampled_from([0, 2, 3, 5]), label="p")
    k = data.draw(st.sampled_from([2, 3]), label="k")
    c = data.draw(small_ints, label="c")
    dt = data.draw(st.one_of(st.just({}), terms(max_t=2, max_a=0)), label="dt")
    n = data.draw(st.one_of(st.just({}), terms(max_t=2, max_a=k - 1)), label="n")
    tower = _tower(p, k, c)
    base, image = element_from_terms(tower, dt), element_from_terms(tower, n)
    if _extends(p, k, c, dt, n):
        derivation_define(tower, {"t": base}, {"a": image})
    else:
        with pytest.raises(InvalidDerivation) as info:
            derivation_define(tower, {"t": base}, {"a": image})
        assert info.value.generator == "a"


@settings(max_examples=200)
@given(st.sampled_from([0, 3, 5]), st.sampled_from([2, 3]), small_ints, terms(max_t=2, max_a=0))
def test_forced_value_extends(p, k, c, dt):
    if p and k % p == 0:
        return
    tower = _tower(p, k, c)
    base = element_from_terms(tower, dt)
    forced = Derivation(tower, {"t": base}).forced_value("a")
    d = derivation_define(tower, {"t": base}, {"a": forced})
    a = tower.gen("a")
    assert d.apply(a ** k) == d.apply(tower.gen("t") * (1 + c * tower.gen("t")))


X = sympy.Symbol("x")


def _two_generator_tower(p: int, k: int, c: int) -> Tower:
    """F(t)(x)(a) with x transcendental and a^k = t·(x + c·t), Eisenstein at t"""
    K = Tower(BaseField(p), ["t"]).extend(GenSpec("x"))
    t, x = K.gen("t"), K.gen("x")
    return K.extend(GenSpec("a", ElementPoly.monomial(K, k, 1, "a") - t * (x + t * c)))


def _extends_over_two(p: int, k: int, c: int, dt, dx, n_t, n_x) -> bool:
    radicand = T * (X + c * T)
    image = sympy_from_terms(n_t, T, A) + sympy_from_terms(n_x, X, A)
    condition = sympy.expand(k * A ** (k - 1) * image
                             - sympy.diff(radicand, T) * sympy_from_terms(dt, T, A)
                             - sympy.diff(radicand, X) * sympy_from_terms(dx, T, X))
    options = {"modulus": p} if p else {"domain": sympy.QQ}
    divisor = sympy.Poly(A ** k - radicand, A, T, X, **options)
    return sympy.Poly(condition, A, T, X, **options).rem(divisor).is_zero


@settings(max_examples=150)
@given(st.data())
def test_define_over_a_transcendental_generator(data):
    p = data.draw(st.sampled_from([0, 2, 3]), label="p")
    k = data.draw(st.sampled_from([2, 3]), label="k")
    c = data.draw(small_ints, label="c")
    dt = data.draw(st.one_of(st.just({}), terms(max_t=1, max_a=0)), label="dt")
    dx = data.draw(st.one_of(st.just({}), terms(max_t=1, max_a=1)), label="dx")
    n_t = data.draw(st.one_of(st.just({}), terms(max_t=1, max_a=k - 1)), label="n_t")
    n_x = data.draw(st.one_of(st.just({}), terms(max_t=1, max_a=k - 1)), label="n_x")
    tower = _two_generator_tower(p, k, c)
    base = element_from_terms(tower, dt)
    x_image = element_from_terms(tower, dx, t="t", a="x")
    a_image = element_from_terms(tower, n_t) + element_from_terms(tower, n_x, t="x", a="a")
    if _extends_over_two(p, k, c, dt, dx, n_t, n_x):
        d = derivation_define(tower, {"t": base}, {"x": x_image, "a": a_image})
        assert d.apply(tower.gen("x")) == x_image
    else:
        with pytest.raises(InvalidDerivation) as info:
            derivation_define(tower, {"t": base}, {"x": x_image, "a": a_image})
        assert info.value.generator == "a"
