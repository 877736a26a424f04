"""Deterministic SVG rendering of drawings. Presentation only."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .drawing import MultigraphDrawing

WIDTH = 800
HEIGHT = 480
MARGIN = 40
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"]


def _num(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _sample(e, samples: int):
    span = e.hi - e.lo
    xs = [e.lo + span * Fraction(i, samples - 1) for i in range(samples)]
    return [(float(x), float(e.curve(x))) for x in xs]


def render_svg(d, samples: int = 64) -> str:
    if samples < 16:
        raise ValueError("need at least 16 samples per edge")
    if isinstance(d, MultigraphDrawing):
        paths = [(e.label, _sample(e, samples), e.tail) for e in d.edges]
        verts = [(float(x), 0.0) for x in d.vertices]
    else:
        paths = [(e.label, [(float(x), float(y)) for x, y in e.points], e.tail) for e in d.edges]
        verts = [(float(x), float(y)) for x, y in d.vertices]

    pts = verts + [p for _, ps, _ in paths for p in ps]
    xmin, xmax = min(p[0] for p in pts), max(p[0] for p in pts)
    ymin, ymax = min(p[1] for p in pts), max(p[1] for p in pts)
    sx = (WIDTH - 2 * MARGIN) / ((xmax - xmin) or 1.0)
    sy = (HEIGHT - 2 * MARGIN) / ((ymax - ymin) or 1.0)

    def tx(x):
        return MARGIN + (x - xmin) * sx

    def ty(y):
        return HEIGHT - MARGIN - (y - ymin) * sy

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    if isinstance(d, MultigraphDrawing):
        out.append(
            f'<line x1="{_num(tx(xmin))}" y1="{_num(ty(0))}" x2="{_num(tx(xmax))}" y2="{_num(ty(0))}" '
            'stroke="#999999" stroke-width="0.5" stroke-dasharray="4 3"/>'
        )
    out.append('<g fill="none" stroke-width="1.2" stroke-opacity="0.8">')
    for label, ps, tail in paths:
        d_attr = "M " + " L ".join(f"{_num(tx(x))} {_num(ty(y))}" for x, y in ps)
        colour = PALETTE[tail % len(PALETTE)]
        out.append(f'<path d="{d_attr}" stroke="{colour}"><title>{escape(label)}</title></path>')
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="11" text-anchor="middle">')
    for i, (x, y) in enumerate(verts, start=1):
        out.append(f'<circle cx="{_num(tx(x))}" cy="{_num(ty(y))}" r="4" fill="black"/>')
        out.append(f'<text x="{_num(tx(x))}" y="{_num(ty(y) + 16)}">{i}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(d, path, samples: int = 64) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg(d, samples))

