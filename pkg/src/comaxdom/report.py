"""Serialization of run reports: JSON, CSV and an SVG root plot.

JSON is written with sorted keys and fixed separators so the same run
gives the same bytes.  Big coefficients are decimal strings.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import AnnulusBounds, ShapeReport
from .polynomial import IntPoly
from .roots import RootSet


@dataclass
class RunReport:
    n: int
    methods_run: list[str]
    polynomial: IntPoly
    gamma: int
    shape: ShapeReport | None = None
    bounds: AnnulusBounds | None = None
    roots: RootSet | None = None
    discrepancies: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "methods_run": list(self.methods_run),
            "polynomial": self.polynomial.to_strings(),
            "gamma": self.gamma,
            "shape": self.shape.as_dict() if self.shape else None,
            "bounds": self.bounds.as_dict() if self.bounds else None,
            "roots": self.roots.as_rows() if self.roots else [],
            "discrepancies": list(self.discrepancies),
        }
        if self.roots is not None:
            out["solver"] = {
                "converged": self.roots.converged,
                "iterations_used": self.roots.iterations_used,
                "note": self.roots.note,
            }
        return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


def _float_text(v: float) -> str:
    return repr(float(v))


def report_csv(report: RunReport) -> str:
    """Metadata as ``# key=value`` lines, then the coefficient and root tables."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    d = report.as_dict()
    meta = {"n": d["n"], "gamma": d["gamma"], "methods_run": ";".join(d["methods_run"])}
    if d["shape"]:
        for k, v in d["shape"].items():
            meta[f"shape.{k}"] = json.dumps(v)
    if d["bounds"]:
        for k, v in d["bounds"].items():
            meta[f"bounds.{k}"] = json.dumps(v)
    if "solver" in d:
        for k, v in d["solver"].items():
            meta[f"solver.{k}"] = json.dumps(v)
    for i, row in enumerate(d["discrepancies"]):
        meta[f"discrepancy.{i}"] = json.dumps(row, sort_keys=True)
    for k, v in meta.items():
        buf.write(f"# {k}={v}\n")
    w.writerow(["index", "coefficient"])
    for i, c in enumerate(d["polynomial"]):
        w.writerow([i, c])
    if report.roots is not None:
        w.writerow([])
        w.writerow(["re", "im", "residual"])
        for r in d["roots"]:
            w.writerow([_float_text(r["re"]), _float_text(r["im"]), _float_text(r["residual"])])
    return buf.getvalue()


def parse_csv(text: str) -> dict:
    """Inverse of ``report_csv`` for the parts that round-trip exactly."""
    meta, coeffs, roots = {}, [], []
    section = None
    for line in text.splitlines():
        if line.startswith("# "):
            k, _, v = line[2:].partition("=")
            meta[k] = v
        elif line == "index,coefficient":
            section = "coeffs"
        elif line == "re,im,residual":
            section = "roots"
        elif not line:
            section = None
        elif section == "coeffs":
            _, c = line.split(",")
            coeffs.append(c)
        elif section == "roots":
            re, im, res = line.split(",")
            roots.append({"re": float(re), "im": float(im), "residual": float(res)})
    return {"meta": meta, "polynomial": coeffs, "roots": roots}


def sweep_csv(sweep: dict) -> str:
    buf = io.StringIO()
    buf.write(f"# range={sweep['range'][0]}..{sweep['range'][1]}\n")
    buf.write(f"# brute={json.dumps(sweep['brute'])}\n# brute_g2={json.dumps(sweep['brute_g2'])}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "claim_id", "status", "detail"])
    for r in sweep["rows"]:
        w.writerow([r["n"], r["claim_id"], r["status"], r["detail"]])
    return buf.getvalue()


def atomic_write(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


SVG_SIZE = 800
SVG_MARGIN = 40


def roots_svg(roots: RootSet, bounds: AnnulusBounds | None, title: str) -> str:
    """Static scatter of the roots with the unit circle and the annulus."""
    pts = list(roots.roots)
    extent = max([abs(z.real) for z in pts] + [abs(z.imag) for z in pts] + [1.0])
    if bounds is not None:
        extent = max(extent, float(bounds.R))
    extent *= 1.05
    half = SVG_SIZE / 2
    scale = (half - SVG_MARGIN) / extent

    def px(z: complex) -> tuple[float, float]:
        return half + z.real * scale, half - z.imag * scale

    def f(v: float) -> str:
        return f"{v:.3f}"

    radii = f"r={float(bounds.r):.6g} R={float(bounds.R):.6g}" if bounds else "no annulus"
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}" '
        f'width="{SVG_SIZE}" height="{SVG_SIZE}">',
        f"<!-- {title}: complex plane, origin at ({half:g},{half:g}), "
        f"scale {scale:.6g} px per unit, imaginary axis up; annulus {radii} -->",
        f'<rect x="0" y="0" width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
        f'<line x1="{SVG_MARGIN}" y1="{f(half)}" x2="{SVG_SIZE - SVG_MARGIN}" y2="{f(half)}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{f(half)}" y1="{SVG_MARGIN}" x2="{f(half)}" y2="{SVG_SIZE - SVG_MARGIN}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for t in range(-math.floor(extent), math.floor(extent) + 1):
        if t == 0:
            continue
        x, _ = px(complex(t, 0))
        _, y = px(complex(0, t))
        lines.append(f'<line x1="{f(x)}" y1="{f(half - 4)}" x2="{f(x)}" y2="{f(half + 4)}" stroke="black"/>')
        lines.append(f'<line x1="{f(half - 4)}" y1="{f(y)}" x2="{f(half + 4)}" y2="{f(y)}" stroke="black"/>')
    lines.append(
        f'<circle cx="{f(half)}" cy="{f(half)}" r="{f(scale)}" fill="none" '
        'stroke="gray" stroke-dasharray="4 4"/>'
    )
    if bounds is not None:
        for rad, colour in ((float(bounds.r), "steelblue"), (float(bounds.R), "firebrick")):
            lines.append(
                f'<circle cx="{f(half)}" cy="{f(half)}" r="{f(rad * scale)}" fill="none" '
                f'stroke="{colour}" stroke-width="1.5"/>'
            )
    for z in pts:
        x, y = px(z)
        lines.append(f'<circle cx="{f(x)}" cy="{f(y)}" r="4" fill="black"/>')
    lines.append(f'<text x="{SVG_MARGIN}" y="24" font-family="sans-serif" font-size="16">{title}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
