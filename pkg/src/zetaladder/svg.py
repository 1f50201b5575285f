"""Minimal SVG line charts written as plain text (axes, ticks, polylines, legend)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

WIDTH, HEIGHT = 720, 440
MARGIN = dict(left=80, right=20, top=40, bottom=60)
COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]


@dataclass
class Series:
    label: str
    x: list
    y: list
    dashed: bool = False
    markers: bool = False


@dataclass
class Chart:
    title: str
    xlabel: str
    ylabel: str
    series: list = field(default_factory=list)
    logy: bool = False

    def add(self, label, x, y, dashed=False, markers=False) -> "Chart":
        self.series.append(Series(label, [float(v) for v in x], [float(v) for v in y], dashed, markers))
        return self


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 5, 10) if m * mag >= raw), default=raw)
    first = math.ceil(lo / step) * step
    out = []
    v = first
    while v <= hi + 1e-9 * step:
        out.append(round(v, 12))
        v += step
    return out


def _fmt(v: float) -> str:
    return f"{v:.4g}"


def render(chart: Chart) -> str:
    """SVG document text for ``chart``; output depends only on the data."""
    tr = (lambda v: math.log10(v)) if chart.logy else (lambda v: v)
    pts = [(x, tr(y)) for s in chart.series for x, y in zip(s.x, s.y) if not chart.logy or y > 0]
    xs = [p[0] for p in pts] or [0.0, 1.0]
    ys = [p[1] for p in pts] or [0.0, 1.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pad = 0.05 * (y1 - y0)
    y0, y1 = y0 - pad, y1 + pad
    L, R, T, B = MARGIN["left"], WIDTH - MARGIN["right"], MARGIN["top"], HEIGHT - MARGIN["bottom"]

    def px(x):
        return L + (x - x0) / (x1 - x0) * (R - L)

    def py(y):
        return B - (y - y0) / (y1 - y0) * (B - T)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="15">{_esc(chart.title)}</text>',
        f'<line x1="{L}" y1="{B}" x2="{R}" y2="{B}" stroke="black"/>',
        f'<line x1="{L}" y1="{B}" x2="{L}" y2="{T}" stroke="black"/>',
    ]
    for t in _ticks(x0, x1):
        out.append(f'<line x1="{px(t):.2f}" y1="{B}" x2="{px(t):.2f}" y2="{B + 5}" stroke="black"/>')
        out.append(f'<text x="{px(t):.2f}" y="{B + 18}" text-anchor="middle">{_fmt(t)}</text>')
    for t in _ticks(y0, y1):
        label = _fmt(10**t) if chart.logy else _fmt(t)
        out.append(f'<line x1="{L - 5}" y1="{py(t):.2f}" x2="{L}" y2="{py(t):.2f}" stroke="black"/>')
        out.append(f'<text x="{L - 8}" y="{py(t) + 4:.2f}" text-anchor="end">{label}</text>')
    out.append(f'<text x="{(L + R) / 2:.1f}" y="{HEIGHT - 18}" text-anchor="middle">{_esc(chart.xlabel)}</text>')
    out.append(
        f'<text x="18" y="{(T + B) / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {(T + B) / 2:.1f})">{_esc(chart.ylabel)}</text>'
    )
    for i, s in enumerate(chart.series):
        color = COLORS[i % len(COLORS)]
        coords = [(px(x), py(tr(y))) for x, y in zip(s.x, s.y) if not chart.logy or y > 0]
        if not coords:
            continue
        dash = ' stroke-dasharray="6 4"' if s.dashed else ""
        poly = " ".join(f"{a:.2f},{b:.2f}" for a, b in coords)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{poly}"/>')
        if s.markers:
            out += [f'<circle cx="{a:.2f}" cy="{b:.2f}" r="2.5" fill="{color}"/>' for a, b in coords]
        ly = T + 16 * (i + 1)
        out.append(f'<line x1="{R - 150}" y1="{ly - 4}" x2="{R - 125}" y2="{ly - 4}" stroke="{color}"{dash}/>')
        out.append(f'<text x="{R - 120}" y="{ly}">{_esc(s.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
