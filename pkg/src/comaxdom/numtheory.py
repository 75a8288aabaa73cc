"""Integer arithmetic behind the divisor-class structure of Z_n.

Everything here is exact and deterministic: factorization is plain trial
division, which is plenty for the n <= 10**9 range this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import isqrt, prod

from .errors import ShapeError


@dataclass(frozen=True)
class FactoredInteger:
    """``n`` together with its canonical factorization ``((p1, e1), ...)``."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        primes = [p for p, _ in self.factors]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")
        if prod(p**e for p, e in self.factors) != self.n:
            raise ValueError("factorization does not multiply back to n")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    @property
    def num_primes(self) -> int:
        return len(self.factors)

    @property
    def is_prime(self) -> bool:
        return self.factors == ((self.n, 1),)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    @property
    def radical(self) -> int:
        return prod(self.primes)


def _as_factored(f: FactoredInteger | int) -> FactoredInteger:
    return f if isinstance(f, FactoredInteger) else factorize(f)


@lru_cache(maxsize=4096)
def factorize(n: int) -> FactoredInteger:
    """Canonical factorization of ``n >= 2`` by trial division."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 2:
        raise ValueError(f"n must be >= 2 (Z_0 and Z_1 are excluded), got {n}")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return FactoredInteger(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def require_prime(*ps: int) -> None:
    for p in ps:
        if not is_prime(p):
            raise ShapeError(f"{p} is not prime")


def euler_phi(f: FactoredInteger | int) -> int:
    """Euler's totient, prod p^(e-1) * (p-1)."""
    f = _as_factored(f)
    return prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


def tau(f: FactoredInteger | int) -> int:
    """Number of positive divisors, prod (e+1)."""
    f = _as_factored(f)
    return prod(e + 1 for e in f.exponents)


def divisors(f: FactoredInteger | int) -> list[int]:
    """All positive divisors of n, ascending."""
    f = _as_factored(f)
    powers = [[p**i for i in range(e + 1)] for p, e in f.factors]
    return sorted(prod(combo) for combo in product(*powers))


def proper_divisors(f: FactoredInteger | int) -> list[int]:
    """Divisors d with 1 < d < n, ascending. Empty for prime n."""
    return divisors(f)[1:-1]


def class_size(f: FactoredInteger | int, d: int) -> int:
    """Size of A_d = {x in Z_n : gcd(x, n) = d}, which is phi(n/d)."""
    f = _as_factored(f)
    if not (1 < d < f.n) or f.n % d:
        raise ValueError(f"{d} is not a proper divisor of {f.n}")
    return euler_phi(f.n // d)
