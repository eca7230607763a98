"""Deterministic SVG drawings of norm balls and Newton polygons."""

from __future__ import annotations

import math
import os
import tempfile
from fractions import Fraction
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 800, 600
MARGIN = 60


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _lo(v: Fraction) -> int:
    # one grid cell of margin when the extreme sits on a grid line
    f = math.floor(v)
    return f - 1 if f == v else f


def _hi(v: Fraction) -> int:
    c = math.ceil(v)
    return c + 1 if c == v else c


def _label(v) -> str:
    return f"({v[0]}, {v[1]})"


def svg_string(polygon, title: str = "", guides=()) -> str:
    """SVG source for a NormBallPolygon or LatticePolygon.

    ``guides`` is an iterable of y-values drawn as dashed horizontal lines
    (e.g. ``[Fraction(1, 2)]`` to show the ball lies below y = 1/2).
    """
    verts = list(polygon.vertices)
    xs = [Fraction(v[0]) for v in verts] + [Fraction(0)]
    ys = [Fraction(v[1]) for v in verts] + [Fraction(0)] + [Fraction(g) for g in guides]
    gx0, gx1 = _lo(min(xs)), _hi(max(xs))
    gy0, gy1 = _lo(min(ys)), _hi(max(ys))
    scale = min((WIDTH - 2 * MARGIN) / (gx1 - gx0), (HEIGHT - 2 * MARGIN) / (gy1 - gy0))
    ox = (WIDTH - scale * (gx1 - gx0)) / 2
    oy = (HEIGHT - scale * (gy1 - gy0)) / 2

    def px(x):
        return ox + scale * (float(x) - gx0)

    def py(y):
        return HEIGHT - oy - scale * (float(y) - gy0)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{WIDTH // 2}" y="30" font-family="sans-serif" font-size="16" '
            f'text-anchor="middle">{escape(title)}</text>'
        )
    out.append('<g stroke="#dddddd" stroke-width="1">')
    for gx in range(gx0, gx1 + 1):
        out.append(f'<line x1="{_fmt(px(gx))}" y1="{_fmt(py(gy0))}" x2="{_fmt(px(gx))}" y2="{_fmt(py(gy1))}"/>')
    for gy in range(gy0, gy1 + 1):
        out.append(f'<line x1="{_fmt(px(gx0))}" y1="{_fmt(py(gy))}" x2="{_fmt(px(gx1))}" y2="{_fmt(py(gy))}"/>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="1.5">')
    out.append(f'<line x1="{_fmt(px(gx0))}" y1="{_fmt(py(0))}" x2="{_fmt(px(gx1))}" y2="{_fmt(py(0))}"/>')
    out.append(f'<line x1="{_fmt(px(0))}" y1="{_fmt(py(gy0))}" x2="{_fmt(px(0))}" y2="{_fmt(py(gy1))}"/>')
    out.append("</g>")
    for g in guides:
        out.append(
            f'<line x1="{_fmt(px(gx0))}" y1="{_fmt(py(g))}" x2="{_fmt(px(gx1))}" y2="{_fmt(py(g))}" '
            f'stroke="#cc3333" stroke-width="1" stroke-dasharray="6,4"/>'
        )
        out.append(
            f'<text x="{_fmt(px(gx1) - 4)}" y="{_fmt(py(g) - 4)}" font-family="sans-serif" '
            f'font-size="11" text-anchor="end" fill="#cc3333">y = {g}</text>'
        )
    pts = " ".join(f"{_fmt(px(v[0]))},{_fmt(py(v[1]))}" for v in verts)
    tag = "polygon" if len(verts) > 2 else "polyline"
    out.append(f'<{tag} points="{pts}" fill="#4477aa" fill-opacity="0.25" stroke="#224488" stroke-width="2"/>')
    cx = sum(float(v[0]) for v in verts) / len(verts)
    cy = sum(float(v[1]) for v in verts) / len(verts)
    for v in verts:
        dx, dy = float(v[0]) - cx, float(v[1]) - cy
        n = math.hypot(dx, dy) or 1.0
        lx = px(v[0]) + 14 * dx / n
        ly = py(v[1]) - 14 * dy / n
        anchor = "start" if dx > 1e-12 else ("end" if dx < -1e-12 else "middle")
        out.append(f'<circle cx="{_fmt(px(v[0]))}" cy="{_fmt(py(v[1]))}" r="3" fill="#224488"/>')
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly + 4)}" font-family="sans-serif" font-size="12" '
            f'text-anchor="{anchor}">{escape(_label(v))}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(polygon, path, title: str = "", guides=()) -> str:
    """Write the drawing to ``path`` atomically; returns the path."""
    text = svg_string(polygon, title=title, guides=guides)
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".csnorm-", suffix=".svg")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
            os.chmod(tmp, 0o644)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as e:
        raise OSError(e.errno, f"cannot write SVG ({e.strerror})", path) from e
    return path
