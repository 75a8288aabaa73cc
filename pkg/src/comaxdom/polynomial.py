"""Dense univariate polynomials over the integers.

Coefficients are stored low degree first, so ``IntPoly([0, 2, 1])`` is
``2x + x^2``.  Trailing zeros are always stripped and the zero polynomial
is the empty tuple, which makes ``==`` a plain structural comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Number = Union[int, Fraction]


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = []
        for v in coeffs:
            if isinstance(v, bool) or not isinstance(v, int):
                if isinstance(v, Fraction) and v.denominator == 1:
                    v = v.numerator
                else:
                    raise TypeError(f"coefficients must be integers, got {v!r}")
            c.append(int(v))
        self._c = _trim(c)

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "IntPoly":
        # caller guarantees canonical form
        p = object.__new__(cls)
        p._c = coeffs
        return p

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * k + [coeff])

    @classmethod
    def from_strings(cls, coeffs: Iterable[str]) -> "IntPoly":
        return cls(int(s) for s in coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> float | int:
        """Degree; ``-math.inf`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else -math.inf

    @property
    def low_degree(self) -> int | None:
        """Index of the lowest nonzero coefficient, or None for zero."""
        for i, c in enumerate(self._c):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return not self._c

    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self._c[i] if i < len(self._c) else 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._c)})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __neg__(self) -> "IntPoly":
        return IntPoly._raw(tuple(-c for c in self._c))

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self._c)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: Number) -> Number:
        return eval_real(self, x)

    def shift(self, k: int) -> "IntPoly":
        return shift(self, k)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._c]


ZERO = IntPoly()
ONE = IntPoly([1])
X = IntPoly([0, 1])


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return IntPoly._raw(_trim(out))


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Schoolbook convolution with exact integers."""
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return ZERO
    if len(ac) < len(bc):
        ac, bc = bc, ac
    out = [0] * (len(ac) + len(bc) - 1)
    for j, bj in enumerate(bc):
        if not bj:
            continue
        for i, ai in enumerate(ac, j):
            out[i] += ai * bj
    return IntPoly._raw(_trim(out))


def shift(p: IntPoly, k: int) -> IntPoly:
    """Multiply by x**k."""
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    if p.is_zero():
        return ZERO
    return IntPoly._raw((0,) * k + p.coeffs)


@lru_cache(maxsize=1024)
def binomial_power(k: int) -> IntPoly:
    """(1 + x)**k, built along the Pascal row C(k, i+1) = C(k, i) (k - i) / (i + 1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    row = [1] * (k + 1)
    c = 1
    for i in range(k):
        c = c * (k - i) // (i + 1)
        row[i + 1] = c
    return IntPoly._raw(tuple(row))


def clique_poly(k: int) -> IntPoly:
    """(1 + x)**k - 1, the domination polynomial of K_k."""
    return binomial_power(k) - ONE


def eval_real(p: IntPoly, x: Number) -> Number:
    """Exact Horner evaluation at an integer or Fraction."""
    if isinstance(x, float):
        x = Fraction(x)
    acc: Number = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
