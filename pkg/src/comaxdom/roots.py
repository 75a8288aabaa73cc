"""Numerical roots of integer polynomials and checks on them.

The solver is Aberth-Ehrlich simultaneous iteration in double precision.
Each sweep computes every correction from the previous sweep's estimates
(Jacobi order), so the output is a deterministic function of the input.
Points outside the unit disk are evaluated through the reversed
polynomial in 1/z, which keeps degree ~1000 evaluations finite.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .analysis import AnnulusBounds, cauchy_radius
from .polynomial import IntPoly

MAX_DEGREE = 2000
ANGLE_OFFSET = 0.4
POLISH_SWEEPS = 8
STEP_FLOOR = 1e-14


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    iterations_used: int
    converged: bool
    gamma: int
    note: str = ""

    @property
    def nonzero_roots(self) -> tuple[complex, ...]:
        return self.roots[self.gamma :]

    def as_rows(self) -> list[dict]:
        return [
            {"re": z.real, "im": z.imag, "residual": r}
            for z, r in zip(self.roots, self.residuals)
        ]


def _eval_all(a: np.ndarray, z: np.ndarray):
    """Newton correction p/p' and normwise backward error at every z.

    ``a`` holds ascending coefficients.
    """
    m = len(a) - 1
    absa = np.abs(a)
    inside = np.abs(z) <= 1.0
    newton = np.empty_like(z)
    resid = np.empty(z.shape, dtype=float)

    zi = z[inside]
    if zi.size:
        p = np.full(zi.shape, a[-1], dtype=complex)
        dp = np.zeros(zi.shape, dtype=complex)
        s = np.full(zi.shape, absa[-1])
        az = np.abs(zi)
        for c, ac in zip(a[-2::-1], absa[-2::-1]):
            dp = dp * zi + p
            p = p * zi + c
            s = s * az + ac
        newton[inside] = p / dp
        resid[inside] = np.abs(p) / s

    zo = z[~inside]
    if zo.size:
        w = 1.0 / zo
        q = np.full(zo.shape, a[0], dtype=complex)
        dq = np.zeros(zo.shape, dtype=complex)
        s = np.full(zo.shape, absa[0])
        aw = np.abs(w)
        for c, ac in zip(a[1:], absa[1:]):
            dq = dq * w + q
            q = q * w + c
            s = s * aw + ac
        # p(z) = z^m q(w),  p'(z) = z^(m-1) (m q(w) - w q'(w))
        newton[~inside] = zo * q / (m * q - w * dq)
        resid[~inside] = np.abs(q) / s
    return newton, resid


def find_roots(
    p: IntPoly, tol: float = 1e-12, max_iter: int = 1000, refine: bool = False
) -> RootSet:
    """All complex roots of ``p``, the root at 0 split off exactly first.

    With ``refine`` the double-precision estimates are polished by further
    sweeps at a working precision sized to the polynomial, and residuals are
    recomputed there.  Without it, a small backward error does not guarantee
    accurate roots once the degree passes ~30: the binomial-type
    coefficients make the monomial basis badly conditioned.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if p.degree > MAX_DEGREE:
        raise ValueError(f"degree {p.degree} exceeds {MAX_DEGREE}")
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be positive and max_iter at least 1")

    gamma = p.low_degree
    cof = p.coeffs[gamma:]
    m = len(cof) - 1
    zeros = (0j,) * gamma
    if m == 0:
        return RootSet(zeros, (0.0,) * gamma, 0, True, gamma)

    big = max(abs(c) for c in cof)
    a = np.array([c / big for c in cof], dtype=float)
    rho = cauchy_radius(IntPoly(cof))
    angles = 2 * np.pi * np.arange(m) / m + ANGLE_OFFSET
    z = 0.5 * rho * np.exp(1j * angles)

    if any(c != 0 and s == 0.0 for c, s in zip(cof, a)):
        resid = (math.inf,) * m
        return RootSet(
            zeros + tuple(complex(v) for v in z),
            (0.0,) * gamma + resid,
            0,
            False,
            gamma,
            "coefficient underflow after scaling; not attempted",
        )

    iters = 0
    polish = 0
    off_diag = ~np.eye(m, dtype=bool)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        newton, resid = _eval_all(a, z)
        while iters < max_iter:
            done = bool(np.all(resid < tol))
            if done and polish >= POLISH_SWEEPS:
                break
            diff = z[:, None] - z[None, :]
            inv = np.where(off_diag, 1.0 / np.where(off_diag, diff, 1.0), 0.0)
            step = newton / (1.0 - newton * inv.sum(axis=1))
            step = np.where(np.isfinite(step), step, 0.0)
            z = z - step
            iters += 1
            newton, resid = _eval_all(a, z)
            if done:
                # a small backward error can hide a clustered root that is
                # still moving; keep sweeping until the steps settle
                polish += 1
                if np.all(np.abs(step) <= STEP_FLOOR * np.maximum(np.abs(z), 1.0)):
                    polish = POLISH_SWEEPS

    if refine and np.all(np.isfinite(z)):
        z, resid, extra = _refine(cof, z, max_iter - iters)
        iters += extra

    order = sorted(range(m), key=lambda k: (z[k].real, z[k].imag))
    roots = zeros + tuple(complex(z[k]) for k in order)
    residuals = (0.0,) * gamma + tuple(float(resid[k]) for k in order)
    converged = bool(np.all(resid < tol))
    return RootSet(roots, residuals, iters, converged, gamma)


def _working_digits(cof: Sequence[int], rho: float) -> int:
    # enough digits to absorb the cancellation in sum a_i z^i near |z| = rho
    size = sum(abs(c) for c in cof) * max(1.0, rho) ** (len(cof) - 1)
    return 30 + int(math.log10(size / abs(cof[-1]) + 1))


def _refine(cof: Sequence[int], z0: np.ndarray, budget: int):
    """Aberth sweeps in mpmath starting from ``z0``; returns (roots, residuals, sweeps).

    Stops once the steps fall to the working precision, or once the
    backward error is tiny and the steps have stopped shrinking (the
    remaining motion is rounding noise on an ill-conditioned root).
    """
    rho = float(max(abs(v) for v in z0))
    dps = _working_digits(cof, rho)
    sweeps = 0
    with mpmath.workdps(dps):
        a = [mpmath.mpf(c) for c in reversed(cof)]  # descending
        absa = [abs(c) for c in a]
        z = [mpmath.mpc(complex(v)) for v in z0]
        m = len(z)
        floor = mpmath.mpf(10) ** (-(dps - 10))
        tiny = mpmath.mpf(10) ** (-(dps // 2))

        def horner(w):
            p, dp, s, aw = a[0], mpmath.mpc(0), absa[0], abs(w)
            for c, ac in zip(a[1:], absa[1:]):
                dp = dp * w + p
                p = p * w + c
                s = s * aw + ac
            return p, dp, abs(p) / s

        evals = [horner(w) for w in z]
        prev = None
        while sweeps < budget:
            steps = []
            for i in range(m):
                p, dp, _ = evals[i]
                if p == 0:
                    steps.append(mpmath.mpc(0))
                    continue
                ratio = p / dp if dp != 0 else mpmath.mpc(0)
                s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(m) if j != i)
                den = 1 - ratio * s
                steps.append(ratio / den if den != 0 else mpmath.mpc(0))
            z = [w - st for w, st in zip(z, steps)]
            sweeps += 1
            evals = [horner(w) for w in z]
            worst = max(abs(st) / max(1, abs(w)) for st, w in zip(steps, z))
            if worst <= floor:
                break
            if prev is not None and worst >= prev / 2 and max(e[2] for e in evals) < tiny:
                break
            prev = worst

        resid = np.array([float(e[2]) for e in evals])
        out = np.array([complex(w) for w in z])
    return out, resid, sweeps


@dataclass
class RootClaims:
    annulus_checked: bool
    annulus_violations: list[int] = field(default_factory=list)
    vieta_sum: complex = 0j
    vieta_sum_expected: float = 0.0
    vieta_sum_ok: bool = False
    vieta_product_ok: bool = False
    vieta_product_detail: str = ""
    conjugates_ok: bool = False
    unpaired: list[int] = field(default_factory=list)

    @property
    def annulus_ok(self) -> bool:
        return not self.annulus_violations

    @property
    def all_ok(self) -> bool:
        return self.annulus_ok and self.vieta_sum_ok and self.vieta_product_ok and self.conjugates_ok


def _conjugate_unpaired(roots: Sequence[complex], rel: float) -> list[int]:
    used = [False] * len(roots)
    bad = []
    for i, z in enumerate(roots):
        if used[i]:
            continue
        scale = max(1.0, abs(z))
        if abs(z.imag) <= rel * scale:
            used[i] = True
            continue
        best, best_d = None, math.inf
        for j in range(len(roots)):
            if j != i and not used[j]:
                d = abs(roots[j] - z.conjugate())
                if d < best_d:
                    best, best_d = j, d
        if best is None or best_d > rel * scale:
            bad.append(i)
            used[i] = True
        else:
            used[i] = used[best] = True
    return bad


def _log_abs(x: Fraction) -> float:
    x = abs(x)
    return math.log(x.numerator) - math.log(x.denominator)


def verify_root_claims(
    p: IntPoly, roots: RootSet, bounds: AnnulusBounds | None, rel: float = 1e-6
) -> RootClaims:
    """Annulus containment, Vieta sum and product, conjugate pairing."""
    c = p.coeffs
    d = len(c) - 1
    nz = roots.nonzero_roots
    out = RootClaims(annulus_checked=bool(bounds and bounds.window_is_full))

    if out.annulus_checked:
        lo, hi = float(bounds.r), float(bounds.R)
        eps = 1e-9 * hi
        out.annulus_violations = [
            k for k, z in enumerate(nz, roots.gamma) if not (lo - eps <= abs(z) <= hi + eps)
        ]

    total = complex(sum(roots.roots))
    expected = float(Fraction(-c[d - 1], c[d])) if d >= 1 else 0.0
    out.vieta_sum = total
    out.vieta_sum_expected = expected
    out.vieta_sum_ok = abs(total - expected) <= rel * max(1.0, abs(expected))

    # product of the nonzero roots is (-1)^k a_gamma / a_d, compared in log form
    k = len(nz)
    target = Fraction((-1) ** k * c[roots.gamma], c[d])
    if k and all(z != 0 for z in nz):
        log_mod = sum(math.log(abs(z)) for z in nz)
        arg = sum(cmath.phase(z) for z in nz)
        want_arg = 0.0 if target > 0 else math.pi
        d_mod = log_mod - _log_abs(target)
        d_arg = math.remainder(arg - want_arg, 2 * math.pi)
        out.vieta_product_ok = abs(d_mod) <= rel and abs(d_arg) <= rel
        out.vieta_product_detail = f"log-modulus error {d_mod:.3e}, argument error {d_arg:.3e}"
    else:
        out.vieta_product_ok = k == 0
        out.vieta_product_detail = "no nonzero roots" if k == 0 else "a nonzero root estimate is exactly 0"

    out.unpaired = _conjugate_unpaired(list(roots.roots), rel)
    out.conjugates_ok = not out.unpaired
    return out


@dataclass(frozen=True)
class ListMatch:
    matched: bool
    max_error: float
    detail: str


def match_root_list(computed: Sequence[complex], reference: Sequence[complex], tol: float) -> ListMatch:
    """Pair each reference value with a distinct computed root, per-coordinate error <= tol."""
    if len(computed) != len(reference):
        return ListMatch(False, math.inf, f"{len(computed)} computed roots vs {len(reference)} listed")
    free = list(range(len(computed)))
    worst = 0.0
    for ref in reference:
        j = min(free, key=lambda k: abs(computed[k] - ref))
        err = max(abs(computed[j].real - ref.real), abs(computed[j].imag - ref.imag))
        worst = max(worst, err)
        free.remove(j)
    ok = worst <= tol
    return ListMatch(ok, worst, f"max per-coordinate error {worst:.3e} (tolerance {tol:g})")
