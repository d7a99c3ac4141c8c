"""Deterministic SVG drawings of planar closed paths on their lines."""

from __future__ import annotations

import string
from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

from .geometry import Line

SIZE = 800
MARGIN = Fraction(5, 100)


def _label(i: int) -> str:
    letters = string.ascii_uppercase
    return letters[i] if i < 26 else letters[i // 26 - 1] + letters[i % 26]


def _clip(line: Line, lo, hi):
    """Segment of ``line`` inside the box ``lo..hi`` (Liang-Barsky, exact)."""
    t0, t1 = None, None
    for k in range(2):
        c, d = line.base[k], line.dir[k]
        if d == 0:
            if not lo[k] <= c <= hi[k]:
                return None
            continue
        ta, tb = (lo[k] - c) / d, (hi[k] - c) / d
        if ta > tb:
            ta, tb = tb, ta
        t0 = ta if t0 is None else max(t0, ta)
        t1 = tb if t1 is None else min(t1, tb)
    if t0 is None or t0 >= t1:
        return None
    return line.at(t0), line.at(t1)


def _num(x: Fraction) -> str:
    s = f"{float(x):.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(points: Sequence, lines: Sequence[Line] = (), title: str = "") -> str:
    """SVG 1.1 document with the lines, the path edges and labelled vertices.

    The world box is the bounding box of the vertices and line base points,
    squared up and padded by 5% on each side, mapped onto an 800x800 canvas.
    """
    pts = [tuple(Fraction(c) for c in p) for p in points]
    anchors = pts + [ln.base for ln in lines]
    if not anchors:
        anchors = [(Fraction(0), Fraction(0))]
    xs = [p[0] for p in anchors]
    ys = [p[1] for p in anchors]
    cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
    half = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1)) / 2
    half = half / (1 - 2 * MARGIN)
    lo, hi = (cx - half, cy - half), (cx + half, cy + half)
    scale = Fraction(SIZE) / (2 * half)

    def px(p):
        return _num((p[0] - lo[0]) * scale), _num((hi[1] - p[1]) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
    ]
    if title:
        out.append(f"  <title>{escape(title)}</title>")
    out.append(f'  <rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>')

    out.append('  <g stroke="#888888" stroke-width="1.5">')
    for i, ln in enumerate(lines):
        seg = _clip(ln, lo, hi)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = px(seg[0]), px(seg[1])
        out.append(f'    <line class="ridge-line" data-line="{i + 1}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("  </g>")

    edges = []
    k = len(pts)
    for i in range(k):
        a, b = pts[i], pts[(i + 1) % k]
        if a != b and (b, a) not in edges and (a, b) not in edges:
            edges.append((a, b))
    out.append('  <g stroke="#c0392b" stroke-width="2.5">')
    for a, b in edges:
        (x1, y1), (x2, y2) = px(a), px(b)
        out.append(f'    <line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("  </g>")

    out.append('  <g fill="#1f4e79" font-family="sans-serif" font-size="16">')
    for i, p in enumerate(pts):
        x, y = px(p)
        out.append(f'    <circle class="vertex" cx="{x}" cy="{y}" r="5"/>')
        out.append(f'    <text class="label" x="{x}" y="{y}" dx="8" dy="-8">{_label(i)}</text>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
