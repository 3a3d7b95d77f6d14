"""Identity engine: frozen examples, an independent brute-force oracle,
x-independence, and the symbolic/pointwise/operator route agreement."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diffwilson.exact import POLY_ZERO, factorial, monomial, poly_const
from diffwilson.identity import (
    backward_difference,
    derivative_collapse_check,
    difference_table,
    eval_difference_sum,
    eval_lower_power_sum,
    sample_rationals,
    symbolic_difference_poly,
    symbolic_lower_power_poly,
    verify_difference_sum,
    verify_lower_power_sum,
)

rationals = st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 1000))


def oracle_sum(n, exponent, x):
    # Independent route: stdlib comb, builtin pow and sum, no shared helpers.
    return sum((-1) ** i * math.comb(n, i) * (x - i) ** exponent for i in range(n + 1))


@pytest.mark.parametrize(
    "n,x,expected",
    [
        (0, 5, 1),
        (1, 9, 1),
        (3, 7, 6),
        (3, 0, 6),
        (4, Fraction(1, 2), 24),
        (5, Fraction(-2, 3), 120),
    ],
)
def test_eval_difference_sum_values(n, x, expected):
    assert eval_difference_sum(n, x) == expected


@pytest.mark.parametrize(
    "n,j,x",
    [(3, 1, 2), (3, 3, 2), (4, 2, 5), (1, 1, Fraction(7, 3)), (6, 4, Fraction(-1, 2))],
)
def test_eval_lower_power_sum_is_zero(n, j, x):
    assert eval_lower_power_sum(n, j, x) == 0


def test_eval_difference_sum_rejects_negative_n():
    with pytest.raises(ValueError, match="non-negative"):
        eval_difference_sum(-1, 0)


@pytest.mark.parametrize("n,j", [(0, 1), (3, 0), (3, 4), (5, -1)])
def test_eval_lower_power_sum_rejects_bad_j(n, j):
    with pytest.raises(ValueError, match="1 <= j <= n"):
        eval_lower_power_sum(n, j, 0)


@given(st.integers(0, 25), rationals)
def test_difference_sum_matches_oracle(n, x):
    assert eval_difference_sum(n, x) == oracle_sum(n, n, x) == factorial(n)


@given(st.integers(1, 25), st.data())
def test_lower_power_sum_matches_oracle(n, data):
    j = data.draw(st.integers(1, n))
    x = data.draw(rationals)
    assert eval_lower_power_sum(n, j, x) == oracle_sum(n, n - j, x) == 0


@given(st.integers(0, 20), rationals, rationals)
def test_difference_sum_is_x_independent(n, x1, x2):
    assert eval_difference_sum(n, x1) == eval_difference_sum(n, x2)


def test_symbolic_difference_poly_is_constant_factorial():
    for n in range(31):
        assert symbolic_difference_poly(n) == poly_const(factorial(n))


def test_symbolic_lower_power_poly_is_zero():
    for n in range(1, 21):
        for j in range(1, n + 1):
            assert symbolic_lower_power_poly(n, j) == POLY_ZERO


def test_symbolic_rejects_bad_arguments():
    with pytest.raises(ValueError):
        symbolic_difference_poly(-1)
    with pytest.raises(ValueError):
        symbolic_lower_power_poly(0, 1)
    with pytest.raises(ValueError):
        symbolic_lower_power_poly(4, 5)


def test_backward_difference_examples():
    # del(X**2) = X**2 - (X-1)**2 = 2X - 1
    assert backward_difference(monomial(2), 1) == (Fraction(-1), Fraction(2))
    assert backward_difference(monomial(2), 0) == monomial(2)
    assert backward_difference(poly_const(9), 1) == POLY_ZERO
    with pytest.raises(ValueError):
        backward_difference(monomial(2), -1)


def test_backward_difference_matches_expansion():
    for n in range(26):
        assert backward_difference(monomial(n), n) == symbolic_difference_poly(n)


def test_backward_difference_annihilates_lower_degree():
    for n in range(1, 16):
        assert backward_difference(monomial(n - 1), n) == POLY_ZERO


def test_verify_difference_sum_result():
    r = verify_difference_sum(3, 7)
    assert r.check == "difference-sum"
    assert (r.n, r.x, r.lhs, r.rhs, r.holds) == (3, 7, 6, 6, True)


def test_verify_lower_power_sum_result():
    r = verify_lower_power_sum(3, 1, 2)
    assert r.check == "lower-power-sum"
    assert (r.n, r.j, r.x, r.lhs, r.rhs, r.holds) == (3, 1, 2, 0, 0, True)


@pytest.mark.parametrize("n,j", [(1, 1), (3, 1), (4, 4), (7, 3), (10, 5)])
def test_derivative_collapse_check(n, j):
    assert derivative_collapse_check(n, j)


def test_derivative_collapse_rejects_bad_j():
    with pytest.raises(ValueError):
        derivative_collapse_check(3, 0)


def test_difference_table_example():
    assert difference_table(2, 5) == [[0, 1, 4, 9, 16], [1, 3, 5, 7], [2, 2, 2]]


def test_difference_table_constant_column():
    for degree in range(8):
        cols = difference_table(degree, degree + 4)
        assert len(cols) == degree + 1
        assert all(len(cols[m]) == degree + 4 - m for m in range(degree + 1))
        assert cols[degree] == [factorial(degree)] * 4


def test_difference_table_rejects_short_sample():
    with pytest.raises(ValueError, match="degree\\+1 sample points"):
        difference_table(3, 3)
    with pytest.raises(ValueError, match="non-negative"):
        difference_table(-1, 5)


def test_sample_rationals_seeded_and_bounded():
    a = sample_rationals(random.Random(7), 20)
    b = sample_rationals(random.Random(7), 20)
    assert a == b
    assert len(a) == 20
    for q in a:
        assert abs(q.numerator) <= 1000 and 1 <= q.denominator <= 1000


@settings(max_examples=25)
@given(st.integers(1, 12), st.data())
def test_derivative_route_agrees_on_random_pairs(n, data):
    j = data.draw(st.integers(1, n))
    assert derivative_collapse_check(n, j)
