"""Closed-form domination polynomials for special shapes of n.

Two kinds of formula live here.  "Corrected" forms are the ones that hold
for every n of the given shape and are expected to match the oracle.
"Published" forms reproduce the formulas exactly as they were printed,
including their flaws, so that a verification sweep can report where they
break.  Nothing in this module consults a graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import ShapeError
from .numtheory import euler_phi, factorize, require_prime
from .polynomial import X, IntPoly, binomial_power, clique_poly, eval_real, shift

CORRECTED = "corrected"
PUBLISHED = "published"


def _check_variant(variant: str) -> None:
    if variant not in (CORRECTED, PUBLISHED):
        raise ValueError(f"variant must be {CORRECTED!r} or {PUBLISHED!r}, got {variant!r}")


def x_pow(k: int) -> IntPoly:
    return IntPoly.monomial(k)


def closed_prime(p: int) -> IntPoly:
    """Gamma(Z_p) is K_p, so D = (1+x)^p - 1."""
    require_prime(p)
    return clique_poly(p)


def closed_prime_power(p: int, m: int, variant: str = CORRECTED) -> IntPoly:
    """n = p^m, m >= 2.

    corrected: (1+x)^(p^m) - (1+x)^(p^(m-1)) + x^(p^(m-1))
    published: (1+x)^(p^(m-1)) ((1+x)^p - 1) + x^(p^(m-1))

    The two agree only when p^(m-1) + p = p^m, which forces p = 2, m = 2.
    """
    _check_variant(variant)
    require_prime(p)
    if m < 2:
        raise ShapeError(f"prime power form needs m >= 2, got m={m}")
    alpha = p ** (m - 1)
    if variant == CORRECTED:
        return binomial_power(p**m) - binomial_power(alpha) + x_pow(alpha)
    return binomial_power(alpha) * clique_poly(p) + x_pow(alpha)


def closed_pq(p: int, q: int) -> IntPoly:
    """n = pq with primes p < q."""
    require_prime(p, q)
    if not p < q:
        raise ShapeError(f"need p < q, got p={p}, q={q}")
    return (
        binomial_power(p * q)
        - binomial_power(p + q - 1)
        + shift(clique_poly(p - 1) * clique_poly(q - 1), 1)
        + x_pow(p)
        + x_pow(q)
    )


def closed_pq_powers(p: int, n1: int, q: int, n2: int, variant: str = CORRECTED) -> IntPoly:
    """n = p^n1 q^n2 with primes p < q.

    Write s = n/(pq), a = n(q-1)/(pq) (the p-power classes) and
    b = n(p-1)/(pq) (the q-power classes).  The non-unit part of the graph
    is s isolated vertices (0 and the multiples of pq) next to K_{a,b}, so

        corrected: (1+x)^n - (1+x)^(n-phi(n)) + x^s [((1+x)^a-1)((1+x)^b-1) + x^a + x^b]

    The published statement leaves the trailing x^a + x^b outside the
    x^s factor.
    """
    _check_variant(variant)
    require_prime(p, q)
    if not p < q:
        raise ShapeError(f"need p < q, got p={p}, q={q}")
    if n1 < 1 or n2 < 1:
        raise ShapeError("both exponents must be positive")
    if variant == CORRECTED and n1 == n2 == 1:
        return closed_pq(p, q)
    n = p**n1 * q**n2
    s = n // (p * q)
    a = s * (q - 1)
    b = s * (p - 1)
    head = binomial_power(n) - binomial_power(n - euler_phi(n))
    k_ab = clique_poly(a) * clique_poly(b)
    if variant == CORRECTED:
        return head + shift(k_ab + x_pow(a) + x_pow(b), s)
    return head + shift(k_ab, s) + x_pow(a) + x_pow(b)


def g2_pqr_published(p: int, q: int, r: int) -> IntPoly:
    """Three-factor product printed for D(G_2, x) when n = pqr.

    Each factor pairs a big class with the small class hanging off it:
    A_r (size phi(pq)) with A_pq (size phi(r)), and so on.
    """
    require_prime(p, q, r)
    if not p < q < r:
        raise ShapeError(f"need p < q < r, got {p}, {q}, {r}")
    out = IntPoly([1])
    for big, small in ((p * q, r), (p * r, q), (q * r, p)):
        fb, fs = euler_phi(big), euler_phi(small)
        out = out * (clique_poly(fb) * binomial_power(fs) + x_pow(fs))
    return out


def _composition_sum(k: int, sizes: Sequence[int], mins: Sequence[int]) -> int:
    """Sum of prod C(sizes[i], a_i) over a_1 + ... + a_t = k with a_i >= mins[i]."""
    if k < 0:
        return 0
    if len(sizes) == 1:
        return comb(sizes[0], k) if k >= mins[0] else 0
    total = 0
    for a in range(mins[0], min(k, sizes[0]) + 1):
        total += comb(sizes[0], a) * _composition_sum(k - a, sizes[1:], mins[1:])
    return total


def pqr_case_breakdown(p: int, q: int, r: int, k: int) -> dict[str, int]:
    """The eight printed case sums (a)-(h) for size-k dominating sets of G_2.

    Case (h), where none of A_p, A_q, A_r is hit, forces all three small
    classes in and is counted at k = phi(p) + phi(q) + phi(r).
    """
    require_prime(p, q, r)
    if not p < q < r:
        raise ShapeError(f"need p < q < r, got {p}, {q}, {r}")
    fp, fq, fr = euler_phi(p), euler_phi(q), euler_phi(r)
    fpq, fpr, fqr = euler_phi(p * q), euler_phi(p * r), euler_phi(q * r)
    return {
        "a": _composition_sum(k, [fpq, fpr, fqr, fp + fq + fr], [1, 1, 1, 0]),
        "b": _composition_sum(k - fp, [fpq, fpr, fq + fr], [1, 1, 0]),
        "c": _composition_sum(k - fq, [fpq, fqr, fp + fr], [1, 1, 0]),
        "d": _composition_sum(k - fr, [fpr, fqr, fp + fq], [1, 1, 0]),
        "e": _composition_sum(k - fp - fq, [fpq, fr], [1, 0]),
        "f": _composition_sum(k - fp - fr, [fpr, fq], [1, 0]),
        "g": _composition_sum(k - fq - fr, [fqr, fp], [1, 0]),
        "h": 1 if k == fp + fq + fr else 0,
    }


def pqr_case_counts(p: int, q: int, r: int, k: int) -> int:
    return sum(pqr_case_breakdown(p, q, r, k).values())


def pqr_case_polynomial(p: int, q: int, r: int) -> IntPoly:
    """sum_k pqr_case_counts(k) x^k over k = 0..|V(G_2)|."""
    n = p * q * r
    top = n - euler_phi(n) - 1
    return IntPoly(pqr_case_counts(p, q, r, k) for k in range(top + 1))


def lower_bound_rhs(n: int) -> IntPoly:
    """Right-hand side of the published lower bound on D(Gamma(Z_n), x)."""
    f = factorize(n)
    head = binomial_power(n) - binomial_power(n - euler_phi(f))
    if f.is_squarefree:
        return head + X
    p1, e1 = f.factors[0]
    return head + x_pow(p1 ** (e1 - 1))


@dataclass(frozen=True)
class LowerBoundPoint:
    x: Fraction
    difference: Fraction
    sign: int


@dataclass(frozen=True)
class LowerBoundReport:
    n: int
    num_primes: int
    squarefree: bool
    points: tuple[LowerBoundPoint, ...]
    difference: IntPoly
    equality_expected: bool

    @property
    def equality_holds(self) -> bool:
        return self.difference.is_zero()

    @property
    def consistent(self) -> bool:
        """Equality exactly when n has one prime factor."""
        return self.equality_holds == self.equality_expected


def lower_bound_check(n: int, sample_points: Sequence, polynomial: IntPoly) -> LowerBoundReport:
    """Sign of D(x) - RHS(x) at each (positive, exact) sample point."""
    f = factorize(n)
    diff = polynomial - lower_bound_rhs(n)
    rows = []
    for x in sample_points:
        x = Fraction(x)
        if x <= 0:
            raise ValueError("sample points must be positive")
        v = Fraction(eval_real(diff, x))
        rows.append(LowerBoundPoint(x, v, (v > 0) - (v < 0)))
    return LowerBoundReport(n, f.num_primes, f.is_squarefree, tuple(rows), diff, f.num_primes == 1)
