import pytest

from src.arith.field import BaseField
from src.operators.commutation import DifferenceDifferentialField, commutation_check, r_map
from src.operators.derivation import Derivation, derivation_define, derivation_extend_forced
from src.operators.endomorphism import Endomorphism, endo_define
from src.tower.tower import GenSpec, Tower, algebraic
from src.utils.errors import (
    InvalidDerivation,
    InvalidEndomorphism,
    NotSeparable,
    PRootMissing,
    UnsupportedTower,
)
from src.utils.validators import UnresolvedSymbol


class TestDerivation:
    def test_chain_and_quotient_rule(self, f3t):
        d = Derivation(f3t, {"t": 1})
        t = f3t.gen("t")
        assert d.apply(t ** 2) == 2 * t
        assert d.apply(1 / t) == -1 / t ** 2
        assert d.apply(t ** 3).is_zero()
        assert d.is_constant(t ** 3 + 1)

    def test_leibniz(self, sqrt_t):
        d = derivation_define(sqrt_t, {"t": 1}, {"a": Derivation(sqrt_t, {"t": 1}).forced_value("a")})
        a, t = sqrt_t.gen("a"), sqrt_t.gen("t")
        x, y = a + t, a / (t + 1)
        assert d(x * y) == d(x) * y + x * d(y)

    def test_forced_value_for_square_root(self, sqrt_t):
        a, t = sqrt_t.gen("a"), sqrt_t.gen("t")
        forced = Derivation(sqrt_t, {"t": 1}).forced_value("a")
        assert forced == a / (2 * t)
        derivation_define(sqrt_t, {"t": 1}, {"a": forced})

    def test_wrong_image_rejected(self, sqrt_t):
        with pytest.raises(InvalidDerivation) as info:
            derivation_define(sqrt_t, {"t": 1}, {"a": 1})
        assert info.value.generator == "a"
        assert info.value.case == "separable"

    def test_inseparable_generator_constrains_the_base(self, root_tower):
        # a^2 = t over F_2 forces δ(t) = 0
        with pytest.raises(InvalidDerivation) as info:
            derivation_define(root_tower, {"t": 1}, {})
        assert info.value.case == "inseparable"
        d = derivation_define(root_tower, {}, {"a": root_tower.gen("t")})
        assert d(root_tower.gen("a") ** 2).is_zero()

    def test_forced_value_needs_separability(self, root_tower):
        with pytest.raises(NotSeparable):
            Derivation(root_tower).forced_value("a")

    def test_missing_images_are_zero(self, f3t):
        d = Derivation(f3t)
        assert d.image("t").is_zero()

    def test_unknown_symbol_in_table(self, f3t):
        with pytest.raises(UnresolvedSymbol):
            Derivation(f3t, {"u": 1})

    def test_extend_forced(self):
        K = Tower(BaseField(0), ["t"])
        d = Derivation(K, {"t": 1})
        L = K.extend(algebraic("a", K, [-K.gen("t"), 0, 1]))
        extended = derivation_extend_forced(d, L)
        assert extended.image("a") == L.gen("a") / (2 * L.gen("t"))
        assert not extended.violations()
        transcendental = K.extend(GenSpec("x"))
        with pytest.raises(NotSeparable):
            derivation_extend_forced(d, transcendental)


class TestEndomorphism:
    def test_shift(self, f3t):
        s = endo_define(f3t, None, {"t": f3t.gen("t") + 1}, {})
        t = f3t.gen("t")
        assert s(t ** 2) == t ** 2 + 2 * t + 1
        assert s(1 / t) == 1 / (t + 1)

    def test_missing_image_is_identity(self, sqrt_t):
        s = Endomorphism(sqrt_t)
        assert s.image("a") == sqrt_t.gen("a")
        assert not s.violations()

    def test_relation_must_be_transported(self, sqrt_t):
        t = sqrt_t.gen("t")
        with pytest.raises(InvalidEndomorphism) as info:
            endo_define(sqrt_t, None, {"t": t + 1}, {})
        assert info.value.generator == "a"

    def test_transcendental_to_constant_rejected(self, f3t):
        with pytest.raises(InvalidEndomorphism):
            endo_define(f3t, None, {"t": 2}, {})

    def test_frobenius_of_square_root(self, sqrt_t):
        a, t = sqrt_t.gen("a"), sqrt_t.gen("t")
        s = endo_define(sqrt_t, None, {"t": t ** 5}, {"a": a ** 5})
        assert s(a + t) == a ** 5 + t ** 5

    def test_equal_images_rejected(self):
        K = Tower(BaseField(3), ["t", "t1", "t2"])
        t = K.gen("t")
        with pytest.raises(InvalidEndomorphism) as info:
            endo_define(K, None, {"t1": t, "t2": t}, {})
        assert info.value.generator == "t1"

    def test_dependent_images_rejected_by_jacobian(self):
        K = Tower(BaseField(0), ["t1", "t2"])
        t1, t2 = K.gen("t1"), K.gen("t2")
        s = Endomorphism(K, K, {"t1": t1 * t2, "t2": t1 ** 2 * t2 ** 2})
        assert [v.generator for v in s.violations()] == ["t2"]
        assert not Endomorphism(K, K, {"t1": t1 + t2, "t2": t1 - t2}).violations()

    def test_dependent_images_through_a_root(self):
        K = Tower(BaseField(0), ["t", "u"])
        L = K.extend(algebraic("a", K, [-K.gen("t"), 0, 1]))
        a, u = L.gen("a"), L.gen("u")
        assert Endomorphism(K, L, {"t": a, "u": a + 1}).dependent_image() == "u"
        assert Endomorphism(K, L, {"t": a, "u": u * a}).dependent_image() is None

    def test_frobenius_pair_is_not_flagged(self):
        K = Tower(BaseField(3), ["t1", "t2"])
        t1, t2 = K.gen("t1"), K.gen("t2")
        assert not Endomorphism(K, K, {"t1": t1 ** 3, "t2": t2 ** 3}).violations()


class TestCommutation:
    def test_noncommuting_pair(self, load_document):
        built = load_document("noncommuting.dd")
        field = built.operators()
        violations = field.violations()
        assert [v.symbol for v in violations] == ["y"]
        t = built.tower.gen("t")
        assert violations[0].delta_sigma == t
        assert violations[0].sigma_delta == t + 2
        assert not field.commutes()

    def test_shift_commutes_with_d_dt(self, f3t):
        t = f3t.gen("t")
        field = DifferenceDifferentialField(
            f3t, Derivation(f3t, {"t": 1}), Endomorphism(f3t, None, {"t": t + 1})
        )
        assert field.commutes()

    def test_scaling_does_not_commute(self, f3t):
        t = f3t.gen("t")
        violations = commutation_check(Derivation(f3t, {"t": 1}), Endomorphism(f3t, None, {"t": 2 * t}))
        assert [v.symbol for v in violations] == ["t"]


class TestRMap:
    def test_non_constants_map_to_zero(self, f3t):
        d = Derivation(f3t, {"t": 1})
        assert r_map(d, f3t.gen("t")).is_zero()

    def test_constants_map_to_roots(self, f3t):
        d = Derivation(f3t, {"t": 1})
        t = f3t.gen("t")
        assert r_map(d, t ** 3 + 1) == t + 1

    def test_root_through_adjunction(self, root_tower):
        d = derivation_define(root_tower, {}, {})
        assert r_map(d, root_tower.gen("t")) == root_tower.gen("a")

    def test_missing_root(self):
        K = Tower(BaseField(3), ["t", "u"])
        d = Derivation(K, {"t": 1})
        with pytest.raises(PRootMissing):
            r_map(d, K.gen("u"))

    def test_characteristic_zero(self):
        K = Tower(BaseField(0), ["t"])
        with pytest.raises(UnsupportedTower):
            r_map(Derivation(K, {"t": 1}), K.gen("t"))
