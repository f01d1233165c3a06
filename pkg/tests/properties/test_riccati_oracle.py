"""
Prolonged kernels of δx = Q(x) against iterated symbolic differentiation
"""

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arith.field import BaseField
from src.cli.suite import riccati_kernel
from src.kernels.diff_kernel import DiffKernel, kernel_verify
from src.kernels.gamma import GammaIndex
from src.kernels.presentation import Defined, Transcendental
from src.kernels.prolong import kernel_prolong
from src.operators.derivation import Derivation
from src.tower.tower import GenSpec, Tower
from tests.strategies import small_ints

X = sympy.Symbol("x")
NAME = "a[1][0]"


def iterated(q, depth: int):
    """x, δx, δ²x, ... for δx = q(x)"""
    values = [X]
    for _ in range(depth):
        values.append(sympy.expand(sympy.diff(values[-1], X) * q))
    return values


def to_element(tower: Tower, expr):
    x = tower.gen(NAME)
    value = tower.zero()
    for (e,), c in sympy.Poly(expr, X).terms():
        value = value + tower.const(int(c)) * x ** e
    return value


@pytest.mark.parametrize("p", [0, 2, 3, 5, 7])
def test_riccati_factorials(p):
    depth = 7
    kernel = kernel_prolong(riccati_kernel(p), depth - 1)
    for k, expr in enumerate(iterated(X ** 2, depth)):
        assert expr == sympy.factorial(k) * X ** (k + 1)
        assert kernel.value(GammaIndex(k, 1)) == to_element(kernel.tower, expr)


@settings(max_examples=100)
@given(st.sampled_from([0, 2, 3, 5]), st.lists(small_ints, min_size=1, max_size=3))
def test_polynomial_right_hand_side(p, coefficients):
    q = sum((c * X ** j for j, c in enumerate(coefficients)), sympy.Integer(0))
    K = Tower(BaseField(p))
    scratch = K.extend(GenSpec(NAME))
    entries = {
        GammaIndex(0, 1): Transcendental(),
        GammaIndex(1, 1): Defined(to_element(scratch, q)),
    }
    depth = 4
    kernel = kernel_prolong(DiffKernel(K, Derivation(K), 1, 1, entries), depth - 1)
    assert kernel_verify(kernel).ok
    for k, expr in enumerate(iterated(q, depth)):
        assert kernel.value(GammaIndex(k, 1)) == to_element(kernel.tower, expr)
