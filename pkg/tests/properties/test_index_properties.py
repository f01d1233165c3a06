"""
Index enumeration and leader minimality against brute-force scans
"""

from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from src.arith.field import BaseField
from src.kernels.gamma import Gamma2Index, GammaIndex, gamma, gamma2, product_before
from src.kernels.leaders import LeaderKind, classify_entries
from src.kernels.presentation import Defined, Transcendental
from src.tower.tower import Tower

EXAMPLES = 500
ONE = Tower(BaseField(0)).one()


@settings(max_examples=EXAMPLES)
@given(st.integers(0, 6), st.integers(1, 4))
def test_gamma_is_sorted_product(r, n):
    expected = sorted(GammaIndex(xi, i) for xi, i in product(range(r + 1), range(1, n + 1)))
    assert gamma(r, n) == expected


@settings(max_examples=EXAMPLES)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(1, 3))
def test_gamma2_is_sorted_product(r, s, n):
    triples = product(range(r + 1), range(s + 1), range(1, n + 1))
    assert gamma2(r, s, n) == sorted(Gamma2Index(*t) for t in triples)


def _dominated(separable, r, s, n):
    """Indices with a separable index strictly below them, by a sweep over each grid"""
    below = set()
    for i in range(1, n + 1):
        for xi in range(r + 1):
            for u in range(s + 1):
                for dx, du in ((1, 0), (0, 1)):
                    if xi - dx < 0 or u - du < 0:
                        continue
                    prev = Gamma2Index(xi - dx, u - du, i)
                    if prev in separable or prev in below:
                        below.add(Gamma2Index(xi, u, i))
    return below


@settings(max_examples=EXAMPLES)
@given(st.data())
def test_product_order_minimality(data):
    r, s, n = data.draw(st.integers(0, 4)), data.draw(st.integers(0, 3)), data.draw(st.integers(1, 2))
    indices = gamma2(r, s, n)
    flags = data.draw(st.lists(st.booleans(), min_size=len(indices), max_size=len(indices)))
    entries = {index: Defined(ONE) if flag else Transcendental() for index, flag in zip(indices, flags)}
    report = classify_entries(entries, product_before)
    separable = {index for index, flag in zip(indices, flags) if flag}
    assert report.separable() == separable
    assert report.minimal_separable() == separable - _dominated(separable, r, s, n)
    assert all(report.kind(index) is LeaderKind.NON_LEADER for index in set(indices) - separable)
