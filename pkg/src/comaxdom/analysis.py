"""Coefficient-shape checks and root-location bounds.

Shape checks run on exact integers throughout; the coefficients of the
polynomials we care about run to hundreds of digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ShapeError
from .numtheory import require_prime
from .polynomial import IntPoly

OSCILLATION_CONVENTION = (
    "oscillations = number of peaks of the plateau-compressed coefficient "
    "sequence (1 + number of fall-to-rise reversals); monotone and unimodal "
    "sequences score 1, unimodal iff oscillations <= 1"
)


@dataclass(frozen=True)
class ShapeReport:
    unimodal: bool
    mode_indices: tuple[int, ...]
    oscillations: int
    direction_reversals: int
    log_concave: bool
    first_log_concavity_violation: int | None
    newton_satisfied: bool
    first_newton_violation: int | None

    def as_dict(self) -> dict:
        return {
            "unimodal": self.unimodal,
            "mode_indices": list(self.mode_indices),
            "oscillations": self.oscillations,
            "direction_reversals": self.direction_reversals,
            "log_concave": self.log_concave,
            "first_log_concavity_violation": self.first_log_concavity_violation,
            "newton_satisfied": self.newton_satisfied,
            "first_newton_violation": self.first_newton_violation,
        }


def _coefficients(p) -> list[int]:
    seq = list(p.coeffs) if isinstance(p, IntPoly) else [int(v) for v in p]
    if not seq:
        raise ValueError("shape analysis needs a nonzero polynomial")
    if any(v < 0 for v in seq):
        raise ValueError("shape analysis needs nonnegative coefficients")
    return seq


def _direction_runs(seq: list[int]) -> list[int]:
    """Signs (+1/-1) of consecutive differences with plateaus removed, runs merged."""
    runs: list[int] = []
    for a, b in zip(seq, seq[1:]):
        if a == b:
            continue
        s = 1 if b > a else -1
        if not runs or runs[-1] != s:
            runs.append(s)
    return runs


def _peak_indices(seq: list[int]) -> tuple[int, ...]:
    """Every index lying on a local maximum plateau (endpoints included)."""
    out = []
    i, n = 0, len(seq)
    while i < n:
        j = i
        while j + 1 < n and seq[j + 1] == seq[i]:
            j += 1
        left_ok = i == 0 or seq[i - 1] < seq[i]
        right_ok = j == n - 1 or seq[j + 1] < seq[i]
        if left_ok and right_ok:
            out.extend(range(i, j + 1))
        i = j + 1
    return tuple(out)


def first_log_concavity_violation(seq: list[int]) -> int | None:
    for i in range(1, len(seq) - 1):
        if seq[i] * seq[i] < seq[i - 1] * seq[i + 1]:
            return i
    return None


def first_newton_violation(seq: list[int]) -> int | None:
    """e_i^2 i (d-i) >= e_(i-1) e_(i+1) (i+1) (d-i+1), cross-multiplied."""
    d = len(seq) - 1
    for i in range(1, d):
        if seq[i] ** 2 * i * (d - i) < seq[i - 1] * seq[i + 1] * (i + 1) * (d - i + 1):
            return i
    return None


def shape_analyze(p) -> ShapeReport:
    """Unimodality, oscillations, log-concavity and Newton's inequalities.

    Accepts an IntPoly or a plain coefficient sequence (index = degree).
    """
    seq = _coefficients(p)
    runs = _direction_runs(seq)
    reversals = max(0, len(runs) - 1)
    valleys = sum(1 for a, b in zip(runs, runs[1:]) if a < 0 < b)
    oscillations = 1 + valleys
    lc = first_log_concavity_violation(seq)
    nw = first_newton_violation(seq)
    return ShapeReport(
        unimodal=oscillations <= 1,
        mode_indices=_peak_indices(seq),
        oscillations=oscillations,
        direction_reversals=reversals,
        log_concave=lc is None,
        first_log_concavity_violation=lc,
        newton_satisfied=nw is None,
        first_newton_violation=nw,
    )


@dataclass(frozen=True)
class AnnulusBounds:
    """Enestrom-Kakeya annulus r <= |z| <= R for the nonzero roots.

    The x^gamma factor is split off first; ``window`` is the half-open
    index range of strictly positive coefficients the ratios were taken
    over.  The bound is only a theorem for the polynomial when
    ``window_is_full``.
    """

    r: Fraction
    R: Fraction
    gamma_multiplicity: int
    window: tuple[int, int]
    window_is_full: bool

    def as_dict(self) -> dict:
        return {
            "r": str(self.r),
            "R": str(self.R),
            "r_float": float(self.r),
            "R_float": float(self.R),
            "gamma_multiplicity": self.gamma_multiplicity,
            "window": list(self.window),
            "window_is_full": self.window_is_full,
        }


def enestrom_kakeya(p: IntPoly) -> AnnulusBounds:
    seq = _coefficients(p)
    gamma = p.low_degree if isinstance(p, IntPoly) else next(i for i, v in enumerate(seq) if v)
    stop = gamma
    while stop < len(seq) and seq[stop] > 0:
        stop += 1
    if stop - gamma < 2:
        raise ValueError("annulus undefined: fewer than two consecutive positive coefficients")
    ratios = [Fraction(seq[i], seq[i + 1]) for i in range(gamma, stop - 1)]
    return AnnulusBounds(min(ratios), max(ratios), gamma, (gamma, stop), stop == len(seq))


def prime_power_R(p: int, m: int) -> Fraction:
    """(p(p-1) + 2 alpha p + alpha(alpha-1)) / (2 (alpha + p)) with alpha = p^(m-1).

    This is the ratio of the x^(alpha+p-2) and x^(alpha+p-1) coefficients
    of the published prime-power polynomial.
    """
    require_prime(p)
    if m < 2:
        raise ShapeError(f"need m >= 2, got {m}")
    a = p ** (m - 1)
    return Fraction(p * (p - 1) + 2 * a * p + a * (a - 1), 2 * (a + p))


def cauchy_bound(p: IntPoly) -> Fraction:
    """1 + max_{i<d} |a_i| / |a_d|; every root has modulus at most this."""
    if p.is_zero():
        raise ValueError("Cauchy bound undefined for the zero polynomial")
    c = p.coeffs
    lead = abs(c[-1])
    return 1 + max((Fraction(abs(a), lead) for a in c[:-1]), default=Fraction(0))


def cauchy_radius(p: IntPoly, rel_tol: float = 1e-12) -> float:
    """Unique positive root of |a_d| x^d - sum_{i<d} |a_i| x^i.

    Sharper than ``cauchy_bound`` (which it never exceeds) and still an
    upper bound on every root modulus.  Found by bisection in log space
    so huge coefficients cannot overflow.
    """
    c = p.coeffs
    d = len(c) - 1
    if d < 1:
        raise ValueError("need degree >= 1")
    logs = [(i, math.log(abs(a))) for i, a in enumerate(c[:-1]) if a]
    if not logs:
        return 0.0
    log_lead = math.log(abs(c[-1]))

    def excess(t: float) -> float:
        # log(sum |a_i| x^i) - log(|a_d| x^d) at x = e^t
        vals = [la + i * t for i, la in logs]
        top = max(vals)
        s = top + math.log(sum(math.exp(v - top) for v in vals))
        return s - (log_lead + d * t)

    cb = cauchy_bound(p)
    hi = math.log(cb.numerator) - math.log(cb.denominator)
    lo = hi
    while excess(lo) <= 0:
        lo -= max(1.0, abs(lo))
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < rel_tol:
            break
    return math.exp(hi)
