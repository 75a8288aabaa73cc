from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from comaxdom.polynomial import ONE, ZERO, X, IntPoly, add, binomial_power, clique_poly, eval_real, mul, shift

coeffs = st.lists(st.integers(-10**6, 10**6), max_size=21)
polys = coeffs.map(IntPoly)


def test_canonical_form():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]) == ZERO
    assert ZERO.coeffs == ()
    assert ZERO.degree == float("-inf")
    assert IntPoly([0, 0, 3]).degree == 2


def test_add_examples():
    assert add(IntPoly([1, 1]), IntPoly([-1, 1])) == IntPoly([0, 2])
    p = IntPoly([3, 0, 1])
    assert add(p, ZERO) == p
    assert add(IntPoly([0, 2, 1]), IntPoly([0, 3])) == IntPoly([0, 5, 1])
    assert add(IntPoly([1, 2]), IntPoly([-1, -2])) == ZERO


def test_mul_examples():
    p = IntPoly([4, -1, 7])
    assert mul(p, ONE) == p
    assert mul(IntPoly([1, 1]), IntPoly([1, 1])) == IntPoly([1, 2, 1])
    assert mul(IntPoly.monomial(2), IntPoly.monomial(3)) == IntPoly.monomial(5)
    assert mul(p, ZERO) == ZERO


def test_binomial_power():
    assert binomial_power(0) == ONE
    assert binomial_power(5) == IntPoly([1, 5, 10, 10, 5, 1])
    # independent factorial formula
    assert binomial_power(32)[16] == factorial(32) // (factorial(16) ** 2) == 601080390
    assert all(binomial_power(200)[i] == comb(200, i) for i in range(201))


def test_clique_poly():
    assert clique_poly(3) == IntPoly([0, 3, 3, 1])
    assert clique_poly(0) == ZERO


def test_shift():
    assert shift(ZERO, 7) == ZERO
    assert shift(ONE, 3) == IntPoly.monomial(3)
    assert shift(IntPoly([0, 2]), 1) == IntPoly([0, 0, 2])


def test_eval_real():
    assert eval_real(clique_poly(5), 1) == 31
    assert eval_real(ZERO, Fraction(7, 3)) == 0
    assert eval_real(IntPoly([1, 1]), Fraction(1, 3)) == Fraction(4, 3)


def test_eval_of_published_n15_list():
    printed = [0, 8, 84, 429, 1346, 2997, 5004, 6435, 6435, 5005, 3003, 1365, 455, 105, 15, 1]
    assert eval_real(IntPoly(printed), 1) == sum(printed) == 32687


def test_string_round_trip():
    p = binomial_power(300)
    assert IntPoly.from_strings(p.to_strings()) == p


def test_operators_match_functions():
    a, b = IntPoly([1, -2, 3]), IntPoly([0, 5])
    assert a + b == add(a, b)
    assert a * b == mul(a, b)
    assert a - a == ZERO
    assert -a + a == ZERO
    assert (X + 1) ** 4 == binomial_power(4)
    assert a.shift(2) == shift(a, 2)


@settings(max_examples=1000)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=300)
@given(polys, polys, st.fractions(min_value=-5, max_value=5, max_denominator=50))
def test_eval_is_multiplicative(a, b, x):
    assert eval_real(a * b, x) == eval_real(a, x) * eval_real(b, x)


@given(st.integers(0, 400))
def test_binomial_log_concave(k):
    c = binomial_power(k).coeffs
    assert all(c[i] ** 2 >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def test_hash_and_eq():
    assert hash(IntPoly([1, 2])) == hash(IntPoly([1, 2, 0]))
    assert IntPoly([1, 2]) != IntPoly([2, 1])
