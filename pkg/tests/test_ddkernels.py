from math import factorial

import pytest

from src.cli.suite import (
    EXAMPLE1_CASES,
    EXAMPLE2_CASES,
    choice_instance,
    example1_presentation,
    example2_presentation,
    noncommuting_ddkernel,
    polynomial_dd_instance,
    riccati_ddkernel,
)
from src.ddkernels.classify import dd_classify
from src.ddkernels.dd_kernel import dd_commutation, dd_verify
from src.ddkernels.difference import MET_WITH_EQUALITY, VIOLATED, difference_leader_classify
from src.ddkernels.hypotheses import dd_hypothesis_check
from src.ddkernels.prolong import dd_prolong_delta, linearize, prolongation_bound
from src.ddkernels.realize import (
    CASE_CHOICE,
    CASE_FORCED,
    CASE_FORCED_LOW,
    HypothesisData,
    dd_realize,
    realize_with_cases,
)
from src.kernels.gamma import Gamma2Index
from src.utils.errors import ChoiceRequired, HypothesisViolation
from src.utils.validators import ValidationError

X = "a[1][0][0]"


class TestNoncommutingKernel:
    def test_sigma_condition_fails(self):
        result = dd_verify(noncommuting_ddkernel())
        sigma_at = {v.index for v in result.violations if v.operator == "sigma"}
        assert Gamma2Index(1, 1, 1) in sigma_at

    def test_commutation_witness(self):
        kernel = noncommuting_ddkernel()
        symbols = [c.symbol for c in dd_commutation(kernel)]
        assert kernel.names[Gamma2Index(0, 1, 1)] in symbols


class TestDifferenceBound:
    @pytest.mark.parametrize("p, m", EXAMPLE1_CASES)
    def test_bound_violated_when_inseparable(self, p, m):
        report = difference_leader_classify(example1_presentation(p, m))
        assert not report.violations
        assert sorted(index.xi for index in report.leaders.inseparable()) == list(range(m))
        assert report.minimal_depths == {1: m}
        assert report.verdict == VIOLATED
        assert report.extension_inseparable
        assert any("inseparable" in note for note in report.notes)

    @pytest.mark.parametrize("p, n", EXAMPLE2_CASES)
    def test_bound_met_with_equality(self, p, n):
        report = difference_leader_classify(example2_presentation(p, n))
        assert not report.violations
        assert report.minimal_depths[1] == n
        assert report.max_minimal_depth == n
        assert report.verdict == MET_WITH_EQUALITY
        assert not report.notes


class TestRiccatiKernel:
    def test_verifies_and_commutes(self):
        kernel, _ = riccati_ddkernel()
        assert dd_verify(kernel).ok
        assert not dd_commutation(kernel)

    def test_hypotheses_hold(self):
        kernel, data = riccati_ddkernel()
        report = dd_hypothesis_check(kernel, data.M, data.I, data.enumeration, data.t, data.d)
        assert report.green, report.failures()

    def test_classification(self):
        kernel, _ = riccati_ddkernel()
        report = dd_classify(kernel)
        assert report.plain.minimal_separable() == {Gamma2Index(1, 0, 1), Gamma2Index(0, 1, 1)}
        assert report.a_side.minimal_separable() == {Gamma2Index(1, 0, 1), Gamma2Index(0, 1, 1)}
        assert report.b_transported == {index for index in kernel.entries if index.u >= 1}
        assert not report.disagreements

    def test_prolong_delta(self):
        kernel, _ = riccati_ddkernel()
        prolonged = dd_prolong_delta(kernel, 2, 1)
        assert (prolonged.r, prolonged.s) == (8, 2)
        x = prolonged.tower.gen(X)
        for u in range(3):
            assert prolonged.value(Gamma2Index(8, u, 1)) == factorial(8) * x ** 9

    def test_prolongation_needs_length(self):
        assert prolongation_bound(1, 2, 1) == 6
        kernel, _ = riccati_ddkernel(r=3)
        with pytest.raises(HypothesisViolation) as info:
            dd_prolong_delta(kernel, 1, 1)
        assert info.value.witness == "r"

    def test_realize(self):
        kernel, data = riccati_ddkernel()
        realization = realize_with_cases(kernel, (8, 3), data)
        realized = realization.kernel
        assert (realized.r, realized.s) == (8, 3)
        assert dd_verify(realized).ok
        assert not dd_commutation(realized)
        assert realization.case_counts() == {CASE_FORCED: 13, CASE_FORCED_LOW: 2}
        x = realized.tower.gen(X)
        assert realized.value(Gamma2Index(8, 3, 1)) == factorial(8) * x ** 9

    def test_realize_below_current_length(self):
        kernel, data = riccati_ddkernel()
        with pytest.raises(ValidationError):
            realize_with_cases(kernel, (5, 3), data)

    def test_realize_short_kernel(self):
        kernel, data = riccati_ddkernel(r=3)
        with pytest.raises(HypothesisViolation):
            realize_with_cases(kernel, (5, 2), data)


class TestLinearize:
    def test_relabels_onto_width_ns(self):
        kernel, _ = riccati_ddkernel()
        lin = linearize(kernel)
        assert (lin.kernel.n, lin.kernel.r, lin.kernel.s) == (2, 6, 1)
        assert lin.original(Gamma2Index(3, 0, 2)) == Gamma2Index(3, 1, 1)
        assert lin.original(Gamma2Index(3, 1, 2)) == Gamma2Index(3, 2, 1)
        assert lin.is_copy(Gamma2Index(3, 1, 1))
        assert not lin.is_copy(Gamma2Index(3, 1, 2))
        for index, old in lin.relabel.items():
            if not lin.is_copy(index):
                assert lin.linear(old) == index
            assert lin.kernel.value(index) == kernel.value(old)

    def test_linearized_kernel_verifies(self):
        kernel, _ = riccati_ddkernel()
        assert dd_verify(linearize(kernel).kernel).ok

    def test_needs_a_sigma_level(self):
        kernel, _ = riccati_ddkernel(r=1, s=0)
        with pytest.raises(ValidationError):
            linearize(kernel)


class TestFreeSlot:
    def test_default_is_refused(self):
        kernel, data = choice_instance()
        with pytest.raises(ChoiceRequired) as info:
            realize_with_cases(kernel, (1, 2), data, strict=False)
        assert info.value.slot == str(Gamma2Index(1, 2, 1))

    def test_constant_choice_is_refused(self):
        kernel, data = choice_instance()
        with pytest.raises(ChoiceRequired):
            dd_realize(kernel, (1, 2), data, {Gamma2Index(1, 2, 1): 1}, strict=False)

    def test_supplied_choice(self):
        kernel, data = choice_instance()
        slot = Gamma2Index(1, 2, 1)
        choice = kernel.value(Gamma2Index(1, 0, 1))
        data = HypothesisData(data.M, data.I, data.enumeration, data.t, data.d, {slot: choice})
        realization = realize_with_cases(kernel, (1, 2), data, strict=False)
        assert realization.cases[slot] == CASE_CHOICE
        assert realization.kernel.value(slot) == choice
        assert dd_verify(realization.kernel).ok


class TestPolynomialInstance:
    @pytest.mark.parametrize("p", [0, 3, 5])
    def test_prolong_and_realize(self, p):
        kernel, data = polynomial_dd_instance(p, [(1, 0), (0, 1), (1, 0)])
        assert dd_verify(kernel).ok
        prolonged = dd_prolong_delta(kernel, 1, data.M)
        assert dd_verify(prolonged).ok
        realized = realize_with_cases(kernel, (3, 2), data, strict=False).kernel
        assert (realized.r, realized.s) == (3, 2)
        assert dd_verify(realized).ok
        assert not dd_commutation(realized)
