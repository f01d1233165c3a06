import pytest

from src.arith.field import BaseField
from src.cli.suite import riccati_expected, riccati_kernel
from src.kernels.diff_kernel import DiffKernel, classify_leaders, kernel_verify, leader_summary
from src.kernels.gamma import Gamma2Index, GammaIndex, gamma, gamma2, parse_index, product_before
from src.kernels.leaders import LeaderKind
from src.kernels.presentation import Algebraic, Defined, Transcendental
from src.kernels.prolong import finiteness_probe, kernel_prolong
from src.operators.derivation import Derivation
from src.tower.tower import GenSpec, Tower
from src.tower.upoly import ElementPoly
from src.utils.errors import InseparableLeaderTooHigh
from src.utils.validators import ValidationError

X = "a[1][0]"


def sqrt_kernel() -> DiffKernel:
    """Q(t), δt = 1, a[1][0]^2 = t and a[1][1] its forced derivative"""
    K = Tower(BaseField(0), ["t"])
    t = K.gen("t")
    scratch = K.extend(GenSpec(X, ElementPoly.monomial(K, 2, 1, X) - t))
    x = scratch.gen(X)
    entries = {
        GammaIndex(0, 1): Algebraic(scratch.spec(X).minpoly),
        GammaIndex(1, 1): Defined(x / (2 * scratch.gen("t"))),
    }
    return DiffKernel(K, Derivation(K, {"t": 1}), 1, 1, entries)


class TestIndexSets:
    def test_gamma_is_lex_ordered(self):
        indices = gamma(2, 2)
        assert indices == sorted(indices)
        assert len(indices) == 6
        assert indices[0] == GammaIndex(0, 1)

    def test_gamma2_size(self):
        assert len(gamma2(2, 3, 2)) == 3 * 4 * 2

    def test_parse_index(self):
        assert parse_index("a[2][3]", 2) == ("a", GammaIndex(3, 2))
        assert parse_index("a[1][2][0]", 3) == ("a", Gamma2Index(2, 0, 1))
        with pytest.raises(ValidationError):
            parse_index("a[0][1]", 2)

    def test_product_order(self):
        assert product_before(Gamma2Index(0, 0, 1), Gamma2Index(1, 1, 1))
        assert not product_before(Gamma2Index(0, 1, 1), Gamma2Index(1, 0, 1))
        assert not product_before(Gamma2Index(0, 0, 1), Gamma2Index(0, 0, 1))


class TestRiccati:
    def test_verifies(self):
        assert kernel_verify(riccati_kernel()).ok

    def test_leaders(self):
        report = classify_leaders(riccati_kernel())
        assert report.kind(GammaIndex(0, 1)) is LeaderKind.NON_LEADER
        assert report.minimal_separable() == {GammaIndex(1, 1)}

    @pytest.mark.parametrize("p", [0, 3, 5])
    def test_prolonged_values(self, p):
        kernel = kernel_prolong(riccati_kernel(p), 5)
        assert kernel.r == 6
        for k, expected in riccati_expected(kernel, 6).items():
            assert kernel.value(GammaIndex(k, 1)) == expected
        assert kernel_verify(kernel).ok

    def test_leaders_are_stable_under_prolongation(self):
        kernel = kernel_prolong(riccati_kernel(), 4)
        summary = leader_summary(classify_leaders(kernel))
        assert summary == {"minimal-separable": ["(1,1)"], "inseparable": []}

    def test_zero_steps(self):
        kernel = riccati_kernel()
        assert kernel_prolong(kernel, 0) is kernel

    def test_finiteness_report(self):
        report = finiteness_probe(riccati_kernel(), 4)
        assert report.kernel.r == 4
        (column,) = report.columns
        assert column.first_separable == 1
        assert column.defined_above
        assert (column.inseparable, column.transcendental) == (0, 1)


class TestSquareRoot:
    def test_verifies_and_classifies(self):
        kernel = sqrt_kernel()
        assert kernel_verify(kernel).ok
        report = classify_leaders(kernel)
        assert report.minimal_separable() == {GammaIndex(0, 1)}
        assert report.separable() == {GammaIndex(0, 1), GammaIndex(1, 1)}

    def test_prolong_forces_second_derivative(self):
        kernel = kernel_prolong(sqrt_kernel(), 1)
        x, t = kernel.tower.gen(X), kernel.tower.gen("t")
        assert kernel.value(GammaIndex(2, 1)) == -x / (4 * t ** 2)


def test_wrong_defined_value_is_reported():
    kernel = riccati_kernel()
    x = kernel.tower.gen(X)
    broken = DiffKernel(kernel.base, kernel.derivation, 1, 2, {
        GammaIndex(0, 1): Transcendental(),
        GammaIndex(1, 1): Defined(x ** 2),
        GammaIndex(2, 1): Defined(x ** 3),
    })
    result = kernel_verify(broken)
    assert not result.ok
    (violation,) = result.violations
    assert violation.index == GammaIndex(1, 1)
    assert violation.operator == "delta"
    assert violation.expected == x ** 3


def test_entries_must_cover_the_index_set():
    K = Tower(BaseField(0))
    with pytest.raises(ValidationError):
        DiffKernel(K, Derivation(K), 1, 1, {GammaIndex(0, 1): Transcendental()})


def test_inseparable_leader_at_the_top_blocks_prolongation():
    K = Tower(BaseField(2), ["t"])
    scratch = K.extend(GenSpec(X))
    name = "a[1][1]"
    entries = {
        GammaIndex(0, 1): Transcendental(),
        GammaIndex(1, 1): Algebraic(ElementPoly.monomial(scratch, 2, 1, name) - scratch.gen("t")),
    }
    kernel = DiffKernel(K, Derivation(K, {"t": 1}), 1, 1, entries)
    assert classify_leaders(kernel).inseparable() == {GammaIndex(1, 1)}
    with pytest.raises(InseparableLeaderTooHigh):
        kernel_prolong(kernel, 1)
