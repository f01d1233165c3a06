import pytest

from src.arith.field import BaseField
from src.tower.element import normal_form
from src.tower.pth_power import is_pth_power
from src.tower.tower import GenSpec, Tower, algebraic, tower_extend
from src.tower.upoly import ElementPoly
from src.utils.errors import ReducibleMinPoly, UnsupportedTower, ZeroElement
from src.utils.validators import UnresolvedSymbol, ValidationError


def test_relation_is_applied(sqrt_t):
    a, t = sqrt_t.gen("a"), sqrt_t.gen("t")
    assert a * a == t
    assert (a ** 3) == t * a
    assert (a + 1) * (a - 1) == t - 1


def test_inverse_of_algebraic_element(sqrt_t):
    a, t = sqrt_t.gen("a"), sqrt_t.gen("t")
    x = a + t
    assert x * x.inverse() == 1
    assert (1 / a) == a / t


def test_zero_has_no_inverse(sqrt_t):
    with pytest.raises((ZeroElement, ZeroDivisionError)):
        sqrt_t.zero().inverse()


def test_denominators_cancel_in_one_variable(f3t):
    t = f3t.gen("t")
    x = (t * t - 1) / (t - 1)
    assert x == t + 1
    assert x.den.is_constant()


def test_characteristic_three_frobenius(f3t):
    t = f3t.gen("t")
    assert (t + 1) ** 3 == t ** 3 + 1


def test_extend_keeps_the_original():
    K = Tower(BaseField(0), ["t"])
    L = tower_extend(K, GenSpec("x"))
    assert not K.has("x")
    assert L.has("x") and L.base == ("t",)
    assert str(L) == "Q(t)(x)"


def test_duplicate_generator_rejected(f3t):
    L = f3t.extend(GenSpec("x"))
    with pytest.raises(ValidationError):
        L.extend(GenSpec("x"))


def test_unknown_symbol(f3t):
    with pytest.raises(UnresolvedSymbol):
        f3t.gen("s")


def test_reducible_minpoly_found_on_inversion():
    K = Tower(BaseField(0), ["t"])
    t = K.gen("t")
    # x^2 - t^2 = (x - t)(x + t)
    L = K.extend(GenSpec("x", ElementPoly(K, [-(t * t), 0, 1], "x")))
    with pytest.raises(ReducibleMinPoly):
        (L.gen("x") - L.gen("t")).inverse()


def test_non_monic_minpoly_rejected():
    K = Tower(BaseField(5), ["t"])
    with pytest.raises(ValidationError):
        GenSpec("x", ElementPoly(K, [-K.gen("t"), 0, 2], "x"))
    with pytest.raises(ValidationError):
        GenSpec("x", ElementPoly(K, [K.gen("t")], "x"))


def test_algebraic_shorthand_and_separability():
    K = Tower(BaseField(2), ["t"])
    inseparable = algebraic("a", K, [-K.gen("t"), 0, 1])
    assert not inseparable.separable
    assert inseparable.kind == "inseparable"
    separable = algebraic("b", K, [K.gen("t"), 1, 1])
    assert separable.separable


def test_restrict_selects_generators(sqrt_t):
    L = sqrt_t.extend(GenSpec("x"))
    assert L.restrict(["x"]).gen_names == ("x",)
    assert L.restrict(["a"]) == sqrt_t


def test_coerce_between_towers(sqrt_t):
    K = sqrt_t.restrict([])
    t = K.gen("t")
    assert sqrt_t.coerce(t) == sqrt_t.gen("t")
    assert sqrt_t.coerce(3) == sqrt_t.const(3)


def test_normal_form_is_idempotent(sqrt_t):
    a, t = sqrt_t.gen("a"), sqrt_t.gen("t")
    x = (a ** 5 + t) / (t + 1)
    assert normal_form(normal_form(x)) == x


class TestPthPower:
    def test_base_field(self):
        K = Tower(BaseField(3), ["t", "u"])
        t, u = K.gen("t"), K.gen("u")
        assert is_pth_power((t * u + 1) ** 3) == t * u + 1
        assert is_pth_power(t ** 3 / u ** 6) == t / u ** 2
        assert is_pth_power(t) is None

    def test_through_root_adjunction(self, root_tower):
        a, t = root_tower.gen("a"), root_tower.gen("t")
        assert is_pth_power(t) == a
        assert is_pth_power(t * t + t) == t + a
        assert is_pth_power(a) is None

    def test_non_monomial_radicand(self):
        K = Tower(BaseField(2), ["t"])
        L = K.extend(GenSpec("a", ElementPoly.monomial(K, 2, 1, "a") - (K.gen("t") + 1)))
        a, t = L.gen("a"), L.gen("t")
        assert is_pth_power((a * t) ** 2) == a * t
        assert is_pth_power((a + t) ** 2) == a + t
        assert is_pth_power((a / t) ** 2) == a / t
        assert is_pth_power(t) == a + 1

    def test_non_monomial_radicand_missing_root(self):
        K = Tower(BaseField(2), ["t", "u"])
        L = K.extend(GenSpec("a", ElementPoly.monomial(K, 2, 1, "a") - (K.gen("t") + 1)))
        assert is_pth_power(L.gen("u")) is None
        assert is_pth_power(L.gen("u") * L.gen("t") ** 2) is None

    def test_other_generators_unsupported(self):
        K = Tower(BaseField(3), ["t"])
        L = K.extend(GenSpec("b", ElementPoly(K, [-K.gen("t"), 0, 1], "b")))
        with pytest.raises(UnsupportedTower):
            is_pth_power(L.gen("b"))
