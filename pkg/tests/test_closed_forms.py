from fractions import Fraction

import pytest

from comaxdom import closed_forms as cf
from comaxdom.domination import comaximal_domination, g2_domination
from comaxdom.errors import ShapeError
from comaxdom.numtheory import euler_phi, factorize, is_prime
from comaxdom.oracle import brute_force_counts
from comaxdom.polynomial import IntPoly, binomial_power
from comaxdom.ringgraph import build_blowup_spec, build_comaximal

from .frozen import G2_N30, G2_N30_PRODUCT

N32_PRINTED = (
    0, 2, 33, 256, 1240, 4200, 10556, 20384, 30888, 37180,
    35750, 27456, 16744, 8008, 2940, 800, 153, 18, 1,
)


def blowup(n):
    return comaximal_domination(n).polynomial


def test_closed_prime():
    assert cf.closed_prime(2) == IntPoly([0, 2, 1])
    assert cf.closed_prime(5) == IntPoly([0, 5, 10, 10, 5, 1])
    assert cf.closed_prime(7) == brute_force_counts(build_comaximal(7))
    with pytest.raises(ShapeError):
        cf.closed_prime(9)


def test_prime_power_examples():
    assert cf.closed_prime_power(2, 2) == IntPoly([0, 2, 6, 4, 1]) == brute_force_counts(build_comaximal(4))
    assert cf.closed_prime_power(2, 5, cf.PUBLISHED).coeffs == N32_PRINTED
    corrected = cf.closed_prime_power(2, 5)
    assert corrected == binomial_power(32) - binomial_power(16) + IntPoly.monomial(16)
    assert corrected.degree == 32 and cf.closed_prime_power(2, 5, cf.PUBLISHED).degree == 18
    with pytest.raises(ShapeError):
        cf.closed_prime_power(2, 1)
    with pytest.raises(ValueError):
        cf.closed_prime_power(2, 3, "other")


def test_prime_power_variants_agree_only_at_4():
    agree = []
    for p in (2, 3, 5, 7):
        for m in range(2, 6):
            if p**m > 2000:
                continue
            if cf.closed_prime_power(p, m) == cf.closed_prime_power(p, m, cf.PUBLISHED):
                agree.append((p, m))
    assert agree == [(2, 2)]
    for p, m in [(2, 3), (2, 4), (2, 5), (3, 3)]:
        assert cf.closed_prime_power(p, m) != cf.closed_prime_power(p, m, cf.PUBLISHED)


@pytest.mark.parametrize("n", [4, 8, 9, 16, 25, 27])
def test_prime_power_corrected_matches_oracle(n):
    f = factorize(n)
    assert cf.closed_prime_power(f.primes[0], f.exponents[0]) == brute_force_counts(build_comaximal(n))


@pytest.mark.parametrize("p, q", [(2, 3), (2, 5), (3, 5), (3, 7), (5, 7)])
def test_closed_pq(p, q):
    assert cf.closed_pq(p, q) == blowup(p * q)
    if p * q <= 24:
        assert cf.closed_pq(p, q) == brute_force_counts(build_comaximal(p * q))


def test_closed_pq_rejects():
    with pytest.raises(ShapeError):
        cf.closed_pq(5, 3)
    with pytest.raises(ShapeError):
        cf.closed_pq(4, 5)


@pytest.mark.parametrize("n", [12, 18, 20, 24, 36, 72])
def test_closed_pq_powers(n):
    (p, q), (a, b) = factorize(n).primes, factorize(n).exponents
    assert cf.closed_pq_powers(p, a, q, b) == blowup(n)
    if n <= 24:
        assert cf.closed_pq_powers(p, a, q, b) == brute_force_counts(build_comaximal(n))


def test_closed_forms_over_all_shapes_to_200():
    for n in range(2, 201):
        f = factorize(n)
        truth = blowup(n)
        if f.is_prime:
            assert cf.closed_prime(n) == truth
        elif f.num_primes == 1:
            assert cf.closed_prime_power(f.primes[0], f.exponents[0]) == truth
        elif f.num_primes == 2:
            (p, q), (a, b) = f.primes, f.exponents
            assert cf.closed_pq_powers(p, a, q, b) == truth
            assert cf.closed_pq_powers(p, a, q, b, cf.PUBLISHED) != truth


def test_pqr_product_against_truth():
    truth = g2_domination(build_blowup_spec(30))
    assert truth == IntPoly(G2_N30)
    product = cf.g2_pqr_published(2, 3, 5)
    assert product.coeffs[: len(G2_N30_PRODUCT)] == G2_N30_PRODUCT
    assert product != truth
    assert product == cf.pqr_case_polynomial(2, 3, 5)


def test_pqr_case_counts():
    assert cf.pqr_case_counts(2, 3, 5, 21) == 1
    assert cf.pqr_case_counts(2, 3, 5, 2) == 0
    parts = cf.pqr_case_breakdown(2, 3, 5, 3)
    # transversals of the three big classes, plus A_p with A_pq and A_pr
    assert parts["a"] == euler_phi(6) * euler_phi(10) * euler_phi(15) == 64
    assert parts["b"] == 8
    assert sum(parts.values()) == 72 == IntPoly(G2_N30)[3]


def test_pqr_shape_errors():
    with pytest.raises(ShapeError):
        cf.g2_pqr_published(3, 2, 5)
    with pytest.raises(ShapeError):
        cf.pqr_case_breakdown(2, 4, 5, 3)


@pytest.mark.parametrize("n", [7, 9, 32, 49])
def test_lower_bound_equality_for_prime_powers(n):
    rep = cf.lower_bound_check(n, [Fraction(1, 3), 1, 5], blowup(n))
    assert rep.equality_holds and rep.consistent
    assert all(pt.difference == 0 for pt in rep.points)


def test_lower_bound_n15():
    rep = cf.lower_bound_check(15, [1, Fraction(1, 10)], blowup(15))
    assert rep.points[0].difference == 46 and rep.points[0].sign == 1
    assert rep.points[1].sign == -1  # x coefficient of the difference is -1
    assert rep.difference[1] == -1
    assert not rep.equality_holds and rep.consistent


def test_lower_bound_rejects_nonpositive():
    with pytest.raises(ValueError):
        cf.lower_bound_check(15, [0], blowup(15))
