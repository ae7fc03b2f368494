"""Render a scale on the regular c-gon as a standalone SVG 1.1 document."""

from __future__ import annotations

import math
from typing import List, Optional, Tuple
from xml.sax.saxutils import escape

from .errors import GenScaleError
from .generation import enumerate_generators
from .scale import Scale, format_scale

SIZE = 512
CENTER = SIZE / 2
RADIUS = 200.0
LABEL_RADIUS = RADIUS + 26


def _point(k: int, c: int, r: float = RADIUS) -> Tuple[float, float]:
    # vertex 0 at the top, increasing clockwise (SVG y axis points down)
    theta = 2 * math.pi * k / c
    return CENTER + r * math.sin(theta), CENTER - r * math.cos(theta)


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def generation_path(s: Scale, step: int) -> List[int]:
    """Terms a, a+step, ... enumerating s, from the smallest valid start."""
    report = enumerate_generators(s)
    starts = report.starts(step)
    if not starts:
        raise GenScaleError(f"{step} does not generate {format_scale(s)}")
    a = starts[0]
    return [(a + k * step) % s.c for k in range(len(s))]


def render_polygon_svg(s: Scale, generator: Optional[int] = None) -> str:
    c = s.c
    members = s.as_set()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(format_scale(s))}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<circle cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" r="{_fmt(RADIUS)}" '
        'fill="none" stroke="#bbbbbb" stroke-width="1"/>',
    ]

    if generator is not None:
        path = generation_path(s, generator % c)
        for x, y in zip(path, path[1:]):
            (x1, y1), (x2, y2) = _point(x, c), _point(y, c)
            out.append(
                f'<line class="chord" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                f'y2="{_fmt(y2)}" stroke="#c0392b" stroke-width="2"/>'
            )
    elif len(s) >= 2:
        pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (_point(k, c) for k in s.pcs))
        out.append(
            f'<polygon class="outline" points="{pts}" fill="#d6e4f0" '
            'fill-opacity="0.6" stroke="#2c3e50" stroke-width="2"/>'
        )

    for k in range(c):
        px, py = _point(k, c)
        fill = "#2c3e50" if k in members else "white"
        out.append(
            f'<circle class="{"note" if k in members else "site"}" cx="{_fmt(px)}" cy="{_fmt(py)}" '
            f'r="7" fill="{fill}" stroke="#2c3e50" stroke-width="1.5"/>'
        )
        lx, ly = _point(k, c, LABEL_RADIUS)
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-family="sans-serif" font-size="14" '
            f'text-anchor="middle" dominant-baseline="middle">{k}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
