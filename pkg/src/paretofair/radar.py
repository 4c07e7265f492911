"""Radar-chart aggregation: polygon area score, SVG rendering and tables."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Any, Mapping, Sequence
from xml.sax.saxutils import escape

from ._io import csv_text, fmt_float, metadata_lines, write_text
from .errors import EvaluationError, GeometryError
from .indicators import IndicatorReport

# Axis order is part of the score: the area depends on which radii are adjacent.
RADAR_AXES = ("HV", "ONVG_hat", "ONVGR", "UD", "AS")
AXIS_LABELS = {"HV": "HV", "ONVG_hat": "ONVĜ", "ONVGR": "ONVGR", "UD": "UD", "AS": "AS"}

PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
)
MAX_SYSTEMS = len(PALETTE)


@dataclass(frozen=True)
class RadarGeometry:
    axis_names: tuple[str, ...]
    radii: tuple[float, ...]
    angles: tuple[float, ...]

    @classmethod
    def regular(cls, axis_names: Sequence[str], radii: Sequence[float]) -> "RadarGeometry":
        names, radii = tuple(axis_names), tuple(float(r) for r in radii)
        if len(names) != len(radii):
            raise GeometryError(f"{len(names)} axes but {len(radii)} radii")
        n = len(names)
        return cls(names, radii, tuple(2.0 * math.pi * i / n for i in range(n)))


@dataclass(frozen=True)
class AreaScore:
    raw_area: float
    normalized_area: float


def area_max(n: int) -> float:
    """Area of the regular n-gon with unit circumradius."""
    return 0.5 * n * math.sin(2.0 * math.pi / n)


def radar_geometry(report: IndicatorReport) -> RadarGeometry:
    if report.onvg_hat is None:
        raise EvaluationError(
            f"system {report.system!r}: ONVG_hat missing; normalize the session first"
        )
    return RadarGeometry.regular(
        RADAR_AXES, (report.hv, report.onvg_hat, report.onvgr, report.ud, report.as_)
    )


def radar_from_values(values: Sequence[float]) -> RadarGeometry:
    """Geometry from the five indicator values given in table order."""
    return RadarGeometry.regular(RADAR_AXES, values)


def surveyor_area(geom: RadarGeometry) -> AreaScore:
    """Shoelace area of the closed polygon through the radar vertices."""
    n = len(geom.radii)
    if n < 3:
        raise GeometryError(f"radar polygon needs at least 3 axes, got {n}")
    xs = [r * math.cos(t) for r, t in zip(geom.radii, geom.angles)]
    ys = [r * math.sin(t) for r, t in zip(geom.radii, geom.angles)]
    twice = 0.0
    for i in range(n):
        j = (i + 1) % n
        twice += xs[i] * ys[j] - xs[j] * ys[i]
    raw = 0.5 * abs(twice)
    # equal spacing: area / area_max reduces to sum(r_i * r_{i+1}) / n, which is
    # exact for unit radii where the trigonometric ratio is off by an ulp
    ring = sum(geom.radii[i] * geom.radii[(i + 1) % n] for i in range(n))
    return AreaScore(raw_area=raw, normalized_area=ring / n)


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def emit_radar_svg(
    session: Sequence[tuple[str, RadarGeometry]],
    path: str | os.PathLike | None = None,
    *,
    meta: Mapping[str, Any] | None = None,
    title: str = "Trade-off radar",
) -> str:
    """Render the session as a standalone SVG; writes it to ``path`` if given."""
    session = list(session)
    if not session:
        raise GeometryError("no systems to draw")
    if len(session) > MAX_SYSTEMS:
        raise GeometryError(f"at most {MAX_SYSTEMS} systems per chart, got {len(session)}")
    axes = session[0][1].axis_names
    for name, geom in session:
        if geom.axis_names != axes:
            raise GeometryError(f"system {name!r} uses a different axis set")

    n = len(axes)
    cx, cy, radius = 240.0, 250.0, 170.0

    def xy(r: float, theta: float) -> tuple[float, float]:
        # axis 0 points up; angles run counterclockwise on screen
        a = theta + math.pi / 2.0
        return cx + radius * r * math.cos(a), cy - radius * r * math.sin(a)

    angles = session[0][1].angles
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="680" height="500" '
        'viewBox="0 0 680 500" font-family="sans-serif" font-size="13">',
    ]
    for line in metadata_lines(meta or {}):
        out.append(f"<!-- {escape(line[2:])} -->")
    out.append(f"<title>{escape(title)}</title>")
    out.append('<rect width="680" height="500" fill="#ffffff"/>')

    out.append('<g id="grid" fill="none" stroke="#bbbbbb" stroke-width="1">')
    for ring in (0.2, 0.4, 0.6, 0.8, 1.0):
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (xy(ring, t) for t in angles))
        out.append(f'<polygon class="ring" data-r="{ring:.1f}" points="{pts}"/>')
    for t in angles:
        x, y = xy(1.0, t)
        out.append(f'<line x1="{_fmt(cx)}" y1="{_fmt(cy)}" x2="{_fmt(x)}" y2="{_fmt(y)}"/>')
    out.append("</g>")

    out.append('<g id="labels" fill="#333333" text-anchor="middle">')
    for name, t in zip(axes, angles):
        x, y = xy(1.12, t)
        out.append(f'<text x="{_fmt(x)}" y="{_fmt(y + 4.0)}">{escape(AXIS_LABELS.get(name, name))}</text>')
    out.append("</g>")

    out.append('<g id="systems">')
    areas = []
    for idx, (name, geom) in enumerate(session):
        color = PALETTE[idx]
        area = surveyor_area(geom).normalized_area
        areas.append(area)
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (xy(r, t) for r, t in zip(geom.radii, geom.angles)))
        out.append(
            f'<polygon class="system" data-system="{escape(name)}" points="{pts}" fill="{color}" '
            f'fill-opacity="0.25" stroke="{color}" stroke-width="2"/>'
        )
    out.append("</g>")

    out.append('<g id="legend">')
    for idx, ((name, _), area) in enumerate(zip(session, areas)):
        y = 40.0 + 24.0 * idx
        out.append(f'<rect x="480" y="{_fmt(y - 11.0)}" width="14" height="14" fill="{PALETTE[idx]}" fill-opacity="0.6"/>')
        out.append(f'<text x="502" y="{_fmt(y)}">{escape(name)} (Δ̂ = {area:.2f})</text>')
    out.append("</g>")
    out.append("</svg>")
    svg = "\n".join(out) + "\n"
    if path is not None:
        write_text(path, svg)
    return svg


TABLE_COLUMNS = ("HV", "ONVG_hat", "ONVGR", "UD", "AS", "Area_hat")
CSV_COLUMNS = (
    "system", "HV", "ONVG", "ONVG_hat", "ONVGR", "UD", "OS", "AS",
    "area", "area_norm", "n_points", "n_front",
)


def emit_table(
    session: Sequence[tuple[IndicatorReport, AreaScore]],
    *,
    meta: Mapping[str, Any] | None = None,
) -> tuple[str, str]:
    """Return (aligned text table rounded to 2 decimals, full-precision CSV)."""
    session = list(session)
    for rep, _ in session:
        if rep.onvg_hat is None:
            raise EvaluationError(f"system {rep.system!r} has not been session-normalized")

    name_w = max([len("system")] + [len(rep.system) for rep, _ in session])
    lines = metadata_lines(meta or {})
    lines.append("  ".join(["system".ljust(name_w)] + [c.rjust(8) for c in TABLE_COLUMNS]))
    for rep, area in session:
        vals = (rep.hv, rep.onvg_hat, rep.onvgr, rep.ud, rep.as_, area.normalized_area)
        lines.append("  ".join([rep.system.ljust(name_w)] + [f"{v:.2f}".rjust(8) for v in vals]))
    text = "\n".join(lines) + "\n"

    rows = [
        [
            rep.system, fmt_float(rep.hv), str(rep.onvg), fmt_float(rep.onvg_hat),
            fmt_float(rep.onvgr), fmt_float(rep.ud), fmt_float(rep.os), fmt_float(rep.as_),
            fmt_float(area.raw_area), fmt_float(area.normalized_area),
            str(rep.n_points), str(rep.n_nondominated),
        ]
        for rep, area in session
    ]
    return text, csv_text(list(CSV_COLUMNS), rows, meta)


def emit_pareto_svg(
    fronts: Sequence[tuple[str, Sequence[Sequence[float]], Sequence[Sequence[float]]]],
    axis_names: Sequence[str],
    path: str | os.PathLike | None = None,
    *,
    meta: Mapping[str, Any] | None = None,
) -> str:
    """Scatter of two-objective systems in canonical space.

    ``fronts`` holds (system, non-dominated points, dominated points);
    the front is drawn as a step line, dominated points hollow.
    """
    if len(axis_names) != 2:
        raise GeometryError("Pareto scatter is only drawn for two objectives")
    fronts = list(fronts)
    if len(fronts) > MAX_SYSTEMS:
        raise GeometryError(f"at most {MAX_SYSTEMS} systems per chart, got {len(fronts)}")
    x0, y0, size = 60.0, 430.0, 380.0

    def xy(p) -> tuple[float, float]:
        return x0 + size * p[0], y0 - size * p[1]

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="640" height="480" '
        'viewBox="0 0 640 480" font-family="sans-serif" font-size="13">',
    ]
    for line in metadata_lines(meta or {}):
        out.append(f"<!-- {escape(line[2:])} -->")
    out.append('<rect width="640" height="480" fill="#ffffff"/>')
    out.append(
        f'<rect x="{_fmt(x0)}" y="{_fmt(y0 - size)}" width="{_fmt(size)}" height="{_fmt(size)}" '
        'fill="none" stroke="#888888"/>'
    )
    out.append(f'<text x="{_fmt(x0 + size / 2)}" y="465" text-anchor="middle">{escape(axis_names[0])} (canonical)</text>')
    out.append(
        f'<text x="20" y="{_fmt(y0 - size / 2)}" text-anchor="middle" '
        f'transform="rotate(-90 20 {_fmt(y0 - size / 2)})">{escape(axis_names[1])} (canonical)</text>'
    )
    for idx, (name, front, dominated) in enumerate(fronts):
        color = PALETTE[idx]
        ordered = sorted((tuple(p) for p in front), key=lambda p: (-p[0], p[1]))
        if ordered:
            step = []
            for p in ordered:
                x, y = xy(p)
                if step:
                    step.append(f"{_fmt(x)},{step[-1].split(',')[1]}")
                step.append(f"{_fmt(x)},{_fmt(y)}")
            out.append(f'<polyline points="{" ".join(step)}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        for p in ordered:
            x, y = xy(p)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{color}"/>')
        for p in dominated:
            x, y = xy(p)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="none" stroke="{color}"/>')
        ly = 40.0 + 24.0 * idx
        out.append(f'<circle cx="470" cy="{_fmt(ly - 4.0)}" r="5" fill="{color}"/>')
        out.append(f'<text x="482" y="{_fmt(ly)}">{escape(name)}</text>')
    out.append("</svg>")
    svg = "\n".join(out) + "\n"
    if path is not None:
        write_text(path, svg)
    return svg
