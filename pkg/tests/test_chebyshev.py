import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosmax.chebyshev import K_MAX, cheb_t, cheb_t_trig, clenshaw_sum
from cosmax.errors import DomainError


def test_degree_zero_is_one():
    assert cheb_t(0, 0.7) == 1.0
    assert cheb_t(0, -1.0) == 1.0


def test_degree_three_anchor():
    # 4*0.125 - 3*0.5
    assert cheb_t(3, 0.5) == pytest.approx(-1.0, abs=1e-15)


def test_degree_five_anchor():
    # hand recurrence at x = 0.3 gives 0.99888; trig oracle agrees
    assert cheb_t(5, 0.3) == pytest.approx(0.99888, abs=1e-12)
    assert cheb_t_trig(5, 0.3) == pytest.approx(0.99888, abs=1e-12)


def test_value_one_at_x_one():
    for k in (0, 1, 2, 7, 100, 12345):
        assert cheb_t(k, 1.0) == 1.0


def test_alternating_at_x_minus_one():
    for k in (0, 1, 2, 3, 10, 11, 500):
        assert cheb_t(k, -1.0) == (-1.0) ** k


def test_trig_anchors():
    assert cheb_t_trig(2, 0.0) == pytest.approx(-1.0, abs=1e-15)  # cos(pi)
    assert cheb_t_trig(4, 1.0) == 1.0  # arccos(1) = 0


def test_recurrence_matches_trig_oracle():
    # full degree sweep on a coarse grid, then a fine grid for a degree sample
    xs_coarse = [-1.0 + 2.0 * i / 100 for i in range(101)]
    for k in range(201):
        for x in xs_coarse:
            assert abs(cheb_t(k, x) - cheb_t_trig(k, x)) <= 1e-11
    xs_fine = [-1.0 + 2.0 * i / 1000 for i in range(1001)]
    for k in (0, 1, 2, 5, 37, 199, 200):
        for x in xs_fine:
            assert abs(cheb_t(k, x) - cheb_t_trig(k, x)) <= 1e-11


def test_bounded_on_interval():
    xs = [-1.0 + 2.0 * i / 1000 for i in range(1001)]
    for k in (0, 1, 3, 17, 100, 200):
        for x in xs:
            assert abs(cheb_t(k, x)) <= 1.0 + 1e-12


@given(
    k=st.integers(min_value=0, max_value=200),
    x=st.floats(min_value=-1.0, max_value=1.0, allow_nan=False),
)
def test_recurrence_vs_trig_property(k, x):
    assert abs(cheb_t(k, x) - cheb_t_trig(k, x)) <= 1e-11


def test_degree_validation():
    with pytest.raises(DomainError):
        cheb_t(-1, 0.5)
    with pytest.raises(DomainError):
        cheb_t(K_MAX + 1, 0.5)
    with pytest.raises(DomainError):
        cheb_t(2.0, 0.5)  # non-integer degree
    with pytest.raises(DomainError):
        cheb_t_trig(-3, 0.5)


def test_x_validation():
    for bad in (-1.0000001, 1.0000001, math.inf, math.nan):
        with pytest.raises(DomainError):
            cheb_t(2, bad)


def test_large_degree_allowed():
    assert cheb_t(K_MAX, 1.0) == 1.0


def test_clenshaw_constant_plus_linear_plus_quadratic():
    # 1 + 0.5 + (2*0.25 - 1)
    assert clenshaw_sum([1.0, 1.0, 1.0], 0.5) == pytest.approx(1.0, abs=1e-15)


def test_clenshaw_single_coefficient():
    assert clenshaw_sum([3.25], 0.9) == 3.25


def test_clenshaw_matches_series_coefficients():
    # the first 30 coefficients of the target series at r = 0.5
    r = 0.5
    coeffs = [0.0] + [(-1.0) ** (k + 1) * r**k / (k + 2) for k in range(1, 30)]
    x = 0.2
    naive = sum(c * cheb_t(k, x) for k, c in enumerate(coeffs))
    assert abs(clenshaw_sum(coeffs, x) - naive) <= 1e-13


def test_clenshaw_vs_naive_representative():
    # decaying and dense-moderate coefficient shapes stay within 1e-13 * sum|c|
    import random

    rng = random.Random(20260817)
    cases = [[(-1.0) ** (k + 1) * 0.5**k / (k + 2) for k in range(60)]]
    for _ in range(40):
        n = rng.randint(1, 101)
        cases.append([rng.uniform(-1e3, 1e3) for _ in range(n)])
    xs = [-1.0, -0.73, 0.0, 0.5, 0.99, 1.0]
    for c in cases:
        allowed = 1e-13 * sum(abs(ck) for ck in c) + 1e-300
        for x in xs:
            naive = sum(ck * cheb_t(k, x) for k, ck in enumerate(c))
            assert abs(clenshaw_sum(c, x) - naive) <= allowed


@given(
    c=st.lists(st.floats(min_value=-1e3, max_value=1e3, allow_nan=False), min_size=1, max_size=101),
    x=st.floats(min_value=-1.0, max_value=1.0, allow_nan=False),
)
@settings(max_examples=200)
def test_clenshaw_vs_naive_property(c, x):
    # near-resonant x with concentrated high-degree coefficients can reach a
    # few N^2*eps*max|c| of genuine disagreement between the two summation
    # orders, so the envelope carries that term on top of the 1e-13 * sum|c|
    # that representative shapes satisfy
    naive = sum(ck * cheb_t(k, x) for k, ck in enumerate(c))
    n = len(c) - 1
    envelope = 1e-13 * sum(abs(ck) for ck in c) + 3e-16 * n * n * max(abs(ck) for ck in c) + 1e-300
    assert abs(clenshaw_sum(c, x) - naive) <= envelope


def test_clenshaw_validation():
    with pytest.raises(DomainError):
        clenshaw_sum([], 0.5)
    with pytest.raises(DomainError):
        clenshaw_sum([1.0, math.nan], 0.5)
    with pytest.raises(DomainError):
        clenshaw_sum([1.0, math.inf], 0.5)
    with pytest.raises(DomainError):
        clenshaw_sum([1.0], 1.5)
