"""Command-line entry point: compute, verify, analyze, roots.

Exit codes: 0 success, 1 a corrected claim is discrepant, 2 invalid
arguments, 3 a shape or size precondition failed, 4 the root solver did
not converge.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import published as pub
from .analysis import enestrom_kakeya, prime_power_R, shape_analyze
from .domination import comaximal_domination
from .errors import ClassCountError, OracleSizeError, ShapeError
from .numtheory import factorize
from .report import RunReport, atomic_write, dumps, report_csv, roots_svg, sweep_csv
from .roots import find_roots, match_root_list, verify_root_claims
from .verify import DISCREPANT, VERIFIED, sweep

EXIT_OK = 0
EXIT_DISCREPANT = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_NO_CONVERGENCE = 4

METHOD_NAMES = (
    "auto",
    "blowup",
    "brute",
    "closed-prime",
    "closed-prime-power",
    "closed-pq",
    "closed-pq-powers",
    "g2-pqr",
)

ZERO_LIST_TOL = 1e-4


class UsageError(Exception):
    pass


def resolve_method(n: int, method: str, published: bool) -> str:
    """Map a CLI method name (plus --published) to a domination method id."""
    if method == "g2-pqr":
        return "g2_pqr_published"
    internal = method.replace("-", "_")
    if not published:
        return internal
    if internal in ("closed_prime_power", "closed_pq_powers"):
        return internal + "_published"
    if internal == "auto":
        f = factorize(n)
        if f.num_primes == 1 and f.exponents[0] >= 2:
            return "closed_prime_power_published"
        if f.num_primes == 2 and not f.is_squarefree:
            return "closed_pq_powers_published"
        if f.exponents == (1, 1, 1):
            return "g2_pqr_published"
    return internal


def parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text.strip())
    if not m:
        raise UsageError(f"range must look like a..b, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if not 2 <= a <= b <= 200:
        raise UsageError(f"range must satisfy 2 <= a <= b <= 200, got {a}..{b}")
    return a, b


def _emit(text: str, output: str | None) -> None:
    if output:
        atomic_write(output, text)
    else:
        sys.stdout.write(text)


def _render(report: RunReport, fmt: str) -> str:
    return dumps(report.as_dict()) if fmt == "json" else report_csv(report)


def _polynomial(n: int, method: str, published: bool):
    return comaximal_domination(n, resolve_method(n, method, published))


def cmd_compute(args) -> int:
    res = _polynomial(args.n, args.method, args.published)
    report = RunReport(args.n, [res.method], res.polynomial, res.gamma)
    _emit(_render(report, args.format), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    res = _polynomial(args.n, args.method, args.published)
    p = res.polynomial
    report = RunReport(args.n, [res.method], p, res.gamma, shape_analyze(p), enestrom_kakeya(p))
    _emit(_render(report, args.format), args.output)
    return EXIT_OK


def _claim(claim_id: str, ok: bool, detail: str) -> dict:
    return {"claim_id": claim_id, "status": VERIFIED if ok else DISCREPANT, "detail": detail}


def _root_claims(n: int, method: str, p, rs, bounds) -> list[dict]:
    c = verify_root_claims(p, rs, bounds)
    rows = []
    if c.annulus_checked:
        detail = (
            f"all nonzero moduli in [{float(bounds.r):.6g}, {float(bounds.R):.6g}]"
            if c.annulus_ok
            else f"{len(c.annulus_violations)} root(s) outside the annulus"
        )
        rows.append(_claim("roots.annulus", c.annulus_ok, detail))
    rows.append(
        _claim(
            "roots.vieta_sum",
            c.vieta_sum_ok,
            f"sum {c.vieta_sum.real:.12g}{c.vieta_sum.imag:+.3g}i, expected {c.vieta_sum_expected:.12g}",
        )
    )
    rows.append(_claim("roots.vieta_product", c.vieta_product_ok, c.vieta_product_detail))
    rows.append(
        _claim(
            "roots.conjugate_pairs",
            c.conjugates_ok,
            "all non-real roots paired" if c.conjugates_ok else f"{len(c.unpaired)} unpaired root(s)",
        )
    )

    f = factorize(n)
    moduli = [abs(z) for z in rs.nonzero_roots]
    top = max(moduli, default=0.0)
    if method == "closed_prime_power_published":
        R = prime_power_R(f.primes[0], f.exponents[0])
        ok = all(0 < m < R for m in moduli)
        rows.append(_claim("roots.prime_power_radius.published", ok, f"max modulus {top:.6g} vs {R} = {float(R)}"))
        if n == 32:
            m = match_root_list(rs.roots, pub.expand_pairs(pub.ZEROS_Z32), ZERO_LIST_TOL)
            rows.append(_claim("roots.zero_list.published", m.matched, m.detail))
    if f.exponents == (1, 1):
        bound = Fraction(n - 1, 2)
        ok = all(0 < m < bound for m in moduli)
        rows.append(_claim("roots.pq_radius.published", ok, f"max modulus {top:.6g} vs (pq-1)/2 = {float(bound)}"))
    if n in (15, 21) and method == "blowup":
        m = match_root_list(rs.roots, pub.expand_pairs(pub.ZEROS_PQ_LIST), ZERO_LIST_TOL)
        rows.append(_claim("roots.pq_zero_list.published", m.matched, f"n={n}: {m.detail}"))
    return rows


def cmd_roots(args) -> int:
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    if args.max_iter < 1:
        raise UsageError("--max-iter must be at least 1")
    res = _polynomial(args.n, args.method, args.published)
    p = res.polynomial
    bounds = enestrom_kakeya(p)
    rs = find_roots(p, args.tol, args.max_iter, refine=not args.no_refine)
    claims = _root_claims(args.n, res.method, p, rs, bounds)
    report = RunReport(args.n, [res.method], p, res.gamma, shape_analyze(p), bounds, rs, claims)
    if args.svg:
        title = f"zeros of D(Gamma(Z_{args.n}), x) [{res.method}]"
        atomic_write(args.svg, roots_svg(rs, bounds, title))
    _emit(_render(report, args.format), args.output)
    return EXIT_OK if rs.converged else EXIT_NO_CONVERGENCE


def cmd_verify(args) -> int:
    a, b = parse_range(args.range)
    result = sweep(a, b, brute=args.brute, brute_g2=args.brute_g2)
    d = result.as_dict()
    _emit(dumps(d) if args.format == "json" else sweep_csv(d), args.output)
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comaxdom",
        description="Domination polynomials of co-maximal graphs of Z_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_n=True):
        if with_n:
            sp.add_argument("--n", type=int, required=True, help="modulus n >= 2")
            sp.add_argument("--method", choices=METHOD_NAMES, default="auto")
            sp.add_argument("--published", action="store_true", help="use formulas exactly as printed")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--output", help="write here (atomically) instead of stdout")

    sp = sub.add_parser("compute", help="compute D(Gamma(Z_n), x)")
    common(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("analyze", help="shape and Enestrom-Kakeya bounds")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("roots", help="complex roots with residual and Vieta checks")
    common(sp)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--max-iter", type=int, default=2000)
    sp.add_argument("--svg", help="also write a scatter plot of the roots")
    sp.add_argument(
        "--no-refine",
        action="store_true",
        help="skip the extended-precision polish (double precision only)",
    )
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("verify", help="arbitrate every formula over a range of n")
    common(sp, with_n=False)
    sp.add_argument("--range", required=True, help="a..b within 2..200")
    sp.add_argument("--brute", action="store_true", help="include the brute-force oracle (n <= 24)")
    sp.add_argument("--brute-g2", action="store_true", help="brute-force G_2 where it has <= 30 vertices")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    if getattr(args, "n", 2) < 2:
        print(f"error: n must be >= 2, got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ShapeError, OracleSizeError, ClassCountError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
