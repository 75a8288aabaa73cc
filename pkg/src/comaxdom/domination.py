"""Domination polynomials of Gamma(Z_n) by composition over divisor classes.

The graph is K_phi(n) joined to ({0} union G_2), where G_2 is the blow-up
of the proper-divisor coprimality graph.  D(G_2, x) is a sum over the set
T of classes that meet the dominating set:

* every class outside T needs a neighbor class inside T;
* a class in T with a neighbor in T may contribute any nonempty subset,
  (1+x)^m - 1; one without must be taken whole, x^m.

Classes with the same neighborhood in G_n (same prime support) are
interchangeable, so they are merged before summing.  That keeps the sum
at 2^6 terms or fewer for n < 210 instead of 2^(tau(n)-2).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from . import closed_forms as cf
from .errors import ClassCountError, ShapeError
from .numtheory import euler_phi, factorize
from .oracle import MAX_ORDER, brute_force_counts
from .polynomial import X, IntPoly, binomial_power, clique_poly, shift
from .ringgraph import BlowupSpec, build_blowup_spec, build_comaximal

MAX_CLASSES = 24

METHODS = (
    "brute",
    "blowup",
    "closed_prime",
    "closed_prime_power",
    "closed_prime_power_published",
    "closed_pq",
    "closed_pq_powers",
    "closed_pq_powers_published",
    "g2_pqr_published",
)


@dataclass(frozen=True)
class DominationResult:
    n: int
    method: str
    polynomial: IntPoly

    @property
    def gamma(self) -> int | None:
        return self.polynomial.low_degree


def union_compose(d1: IntPoly, d2: IntPoly) -> IntPoly:
    """D(G1 u G2) = D(G1) D(G2).  The order-0 graph has D = 1."""
    return d1 * d2


def join_compose(d1: IntPoly, order1: int, d2: IntPoly, order2: int) -> IntPoly:
    """D(G1 v G2) = ((1+x)^n1 - 1)((1+x)^n2 - 1) + D(G1) + D(G2)."""
    if order1 == 0:
        return d2
    if order2 == 0:
        return d1
    return clique_poly(order1) * clique_poly(order2) + d1 + d2


def _class_types(
    spec: BlowupSpec, merge_twins: bool = True, keep: list[int] | None = None
) -> tuple[list[int], list[int]]:
    """(sizes, neighbor bitmasks over types) for the subset sum.

    ``keep`` restricts to a subset of divisor-class indices.
    """
    rows = spec.base.graph.rows
    if keep is None:
        keep = list(range(len(rows)))
    reps: list[int] = []
    sizes: list[int] = []
    seen: dict[int, int] = {}
    for i in keep:
        key = rows[i] if merge_twins else -1 - i
        if key not in seen:
            seen[key] = len(reps)
            reps.append(i)
            sizes.append(0)
        sizes[seen[key]] += spec.class_sizes[i]
    masks = []
    for i in reps:
        m = 0
        for t, j in enumerate(reps):
            if rows[i] >> j & 1:
                m |= 1 << t
        masks.append(m)
    return sizes, masks


def _subset_sum(sizes: list[int], masks: list[int]) -> IntPoly:
    t = len(sizes)
    if t > MAX_CLASSES:
        raise ClassCountError(f"{t} divisor classes exceed the cap of {MAX_CLASSES}")
    # (isolated part exponent a, binomial exponent b) -> coefficient of x^a (1+x)^b
    terms: dict[tuple[int, int], int] = defaultdict(int)
    for T in range(1 << t):
        if any(not (T >> i & 1) and not (masks[i] & T) for i in range(t)):
            continue
        forced = 0
        expansion = {0: 1}
        for i in range(t):
            if not T >> i & 1:
                continue
            if masks[i] & T:
                m = sizes[i]
                nxt: dict[int, int] = defaultdict(int)
                for b, c in expansion.items():
                    nxt[b + m] += c
                    nxt[b] -= c
                expansion = nxt
            else:
                forced += sizes[i]
        for b, c in expansion.items():
            if c:
                terms[(forced, b)] += c
    out = IntPoly()
    for (a, b), c in sorted(terms.items()):
        if c:
            out = out + shift(binomial_power(b), a) * c
    return out


def g2_domination(spec: BlowupSpec, merge_twins: bool = True) -> IntPoly:
    """D(G_2, x) for the blow-up part of ``spec`` (1 when G_2 is empty)."""
    sizes, masks = _class_types(spec, merge_twins)
    return _subset_sum(sizes, masks)


def g2_connected_domination(spec: BlowupSpec) -> IntPoly:
    """D of G_2 with its isolated divisor classes removed."""
    keep = [i for i, row in enumerate(spec.base.graph.rows) if row]
    return _subset_sum(*_class_types(spec, keep=keep))


def blowup_domination(spec: BlowupSpec) -> IntPoly:
    """D(Gamma(Z_n), x) = D(K_phi(n) v ({0} u G_2))."""
    g2 = g2_domination(spec)
    h = union_compose(X, g2)
    return join_compose(clique_poly(spec.unit_count), spec.unit_count, h, 1 + spec.g2_order)


def structure_formula(n: int) -> IntPoly:
    """(1+x)^n - (1+x)^(n - phi(n)) + x^(n / rad n) D(G_2 without isolated classes)."""
    f = factorize(n)
    spec = build_blowup_spec(n)
    isolated = n // f.radical
    return (
        binomial_power(n)
        - binomial_power(n - euler_phi(f))
        + shift(g2_connected_domination(spec), isolated)
    )


def _shape(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    f = factorize(n)
    return f.primes, f.exponents


def _closed(n: int, method: str) -> IntPoly:
    primes, exps = _shape(n)
    if method == "closed_prime":
        if exps != (1,):
            raise ShapeError(f"{n} is not prime")
        return cf.closed_prime(n)
    if method in ("closed_prime_power", "closed_prime_power_published"):
        if len(primes) != 1 or exps[0] < 2:
            raise ShapeError(f"{n} is not a prime power p^m with m >= 2")
        variant = cf.PUBLISHED if method.endswith("published") else cf.CORRECTED
        return cf.closed_prime_power(primes[0], exps[0], variant)
    if method == "closed_pq":
        if exps != (1, 1):
            raise ShapeError(f"{n} is not a product of two distinct primes")
        return cf.closed_pq(*primes)
    if method in ("closed_pq_powers", "closed_pq_powers_published"):
        if len(primes) != 2:
            raise ShapeError(f"{n} is not of the form p^a q^b with two distinct primes")
        variant = cf.PUBLISHED if method.endswith("published") else cf.CORRECTED
        (p, q), (a, b) = primes, exps
        return cf.closed_pq_powers(p, a, q, b, variant)
    if method == "g2_pqr_published":
        if exps != (1, 1, 1):
            raise ShapeError(f"{n} is not a product of three distinct primes")
        g2 = cf.g2_pqr_published(*primes)
        return binomial_power(n) - binomial_power(n - euler_phi(n)) + shift(g2, 1)
    raise ValueError(f"unknown method {method!r}")


def comaximal_domination(n: int, method: str = "auto") -> DominationResult:
    """D(Gamma(Z_n), x) by the requested method ("auto" means blowup)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if method == "auto":
        method = "blowup"
    if method == "blowup":
        poly = blowup_domination(build_blowup_spec(n))
    elif method == "brute":
        if n > MAX_ORDER:
            raise ShapeError(f"brute force needs n <= {MAX_ORDER}, got {n}")
        poly = brute_force_counts(build_comaximal(n))
    elif method in METHODS:
        poly = _closed(n, method)
    else:
        raise ValueError(f"unknown method {method!r}; choose from auto, {', '.join(METHODS)}")
    return DominationResult(n, method, poly)


def applicable_methods(n: int) -> list[str]:
    """Closed-form methods whose shape precondition n satisfies."""
    primes, exps = _shape(n)
    out = []
    if exps == (1,):
        out.append("closed_prime")
    if len(primes) == 1 and exps[0] >= 2:
        out += ["closed_prime_power", "closed_prime_power_published"]
    if exps == (1, 1):
        out.append("closed_pq")
    if len(primes) == 2:
        out += ["closed_pq_powers", "closed_pq_powers_published"]
    if exps == (1, 1, 1):
        out.append("g2_pqr_published")
    return out
