"""Standalone SVG rendering: contour plots by marching squares and line plots."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

__all__ = ["marching_squares", "contour_levels", "contour_svg", "line_svg", "grid_to_array"]

WIDTH, HEIGHT = 560, 480
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 110, 40, 60

# edges: 0 bottom (v0-v1), 1 right (v1-v2), 2 top (v2-v3), 3 left (v3-v0)
_SEGMENTS = {
    1: ((3, 0),),
    2: ((0, 1),),
    3: ((3, 1),),
    4: ((1, 2),),
    6: ((0, 2),),
    7: ((3, 2),),
    8: ((2, 3),),
    9: ((0, 2),),
    11: ((1, 2),),
    12: ((1, 3),),
    13: ((0, 1),),
    14: ((3, 0),),
}


def marching_squares(xs, ys, z, level):
    """Line segments of the level set ``z == level``.

    ``z[j, i]`` is the value at ``(xs[i], ys[j])``.  Cells touching a NaN are
    skipped, which is how points outside the parameter domain are left out.
    Saddle cells are resolved with the cell-centre average.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    z = np.asarray(z, dtype=float)
    segments = []
    for j in range(len(ys) - 1):
        for i in range(len(xs) - 1):
            v = (z[j, i], z[j, i + 1], z[j + 1, i + 1], z[j + 1, i])
            if any(math.isnan(c) for c in v):
                continue
            case = sum(1 << k for k, c in enumerate(v) if c > level)
            if case in (0, 15):
                continue
            corners = ((xs[i], ys[j]), (xs[i + 1], ys[j]), (xs[i + 1], ys[j + 1]), (xs[i], ys[j + 1]))

            def point(edge):
                a, b = edge, (edge + 1) % 4
                t = (level - v[a]) / (v[b] - v[a])
                (xa, ya), (xb, yb) = corners[a], corners[b]
                return (xa + t * (xb - xa), ya + t * (yb - ya))

            if case in (5, 10):
                centre_above = sum(v) / 4.0 > level
                if (case == 5) == centre_above:
                    pairs = ((0, 1), (2, 3))
                else:
                    pairs = ((3, 0), (1, 2))
            else:
                pairs = _SEGMENTS[case]
            for e1, e2 in pairs:
                segments.append((point(e1), point(e2)))
    return segments


def contour_levels(values, count=12):
    """``count`` equally spaced levels strictly between the min and max."""
    finite = [v for v in values if v is not None and math.isfinite(v)]
    if not finite:
        return []
    lo, hi = min(finite), max(finite)
    if hi <= lo:
        return []
    step = (hi - lo) / (count + 1)
    return [lo + step * k for k in range(1, count + 1)]


def grid_to_array(cells):
    """Arrange grid cells on their (gamma1, gamma2) lattice; outside cells become NaN."""
    xs = sorted({c.gamma1 for c in cells})
    ys = sorted({c.gamma2 for c in cells})
    xi = {x: i for i, x in enumerate(xs)}
    yi = {y: j for j, y in enumerate(ys)}
    z = np.full((len(ys), len(xs)), np.nan)
    for c in cells:
        if c.inside_domain and c.mu3 is not None:
            z[yi[c.gamma2], xi[c.gamma1]] = c.mu3
    return np.array(xs), np.array(ys), z


class _Frame:
    def __init__(self, xlim, ylim):
        self.x0, self.x1 = xlim
        self.y0, self.y1 = ylim
        self.w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        self.h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(self, x):
        return MARGIN_LEFT + (x - self.x0) / (self.x1 - self.x0) * self.w

    def py(self, y):
        return MARGIN_TOP + (1.0 - (y - self.y0) / (self.y1 - self.y0)) * self.h


def _f(v):
    return f"{v:.2f}"


def _ticks(lo, hi, n=5):
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def _axes(frame, xlabel, ylabel, title):
    out = [
        f'<rect class="frame" x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{frame.w}" height="{frame.h}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    ]
    for t in _ticks(frame.x0, frame.x1):
        x = frame.px(t)
        yb = MARGIN_TOP + frame.h
        out.append(f'<line x1="{_f(x)}" y1="{_f(yb)}" x2="{_f(x)}" y2="{_f(yb + 5)}" stroke="black"/>')
        out.append(f'<text x="{_f(x)}" y="{_f(yb + 18)}" text-anchor="middle" font-size="11">{t:.3f}</text>')
    for t in _ticks(frame.y0, frame.y1):
        y = frame.py(t)
        out.append(
            f'<line x1="{MARGIN_LEFT - 5}" y1="{_f(y)}" x2="{MARGIN_LEFT}" y2="{_f(y)}" stroke="black"/>'
        )
        out.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{_f(y + 4)}" text-anchor="end" font-size="11">{t:.3f}</text>'
        )
    cx = MARGIN_LEFT + frame.w / 2
    out.append(f'<text x="{_f(cx)}" y="{HEIGHT - 15}" text-anchor="middle" font-size="13">{escape(xlabel)}</text>')
    cy = MARGIN_TOP + frame.h / 2
    out.append(
        f'<text x="18" y="{_f(cy)}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 18 {_f(cy)})">{escape(ylabel)}</text>'
    )
    out.append(f'<text x="{_f(cx)}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')
    return out


def _document(body):
    head = (
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">\n'
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _colour(k, n):
    t = 0.0 if n <= 1 else k / (n - 1)
    r = round(40 + 200 * t)
    b = round(220 - 190 * t)
    return f"rgb({r},60,{b})"


def contour_svg(cells, count=12, title="Standardized third moment M3(gamma1, gamma2)"):
    """Contour plot of grid cells with the three domain boundary lines."""
    frame = _Frame((-1.0, -0.5), (-1.0, -0.5))
    body = _axes(frame, "gamma1", "gamma2", title)
    levels = contour_levels([c.mu3 for c in cells if c.inside_domain])
    if levels:
        xs, ys, z = grid_to_array(cells)
        for k, level in enumerate(levels):
            segs = marching_squares(xs, ys, z, level)
            if not segs:
                continue
            d = " ".join(
                f"M{_f(frame.px(a[0]))},{_f(frame.py(a[1]))} L{_f(frame.px(b[0]))},{_f(frame.py(b[1]))}"
                for a, b in segs
            )
            colour = _colour(k, len(levels))
            body.append(
                f'<path class="contour" data-level="{level:.6g}" d="{d}" fill="none" '
                f'stroke="{colour}" stroke-width="1.2"/>'
            )
            ly = MARGIN_TOP + 14 * (k + 1)
            lx = WIDTH - MARGIN_RIGHT + 12
            body.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 16}" y2="{ly - 4}" stroke="{colour}" stroke-width="2"/>')
            body.append(f'<text x="{lx + 20}" y="{ly}" font-size="10">{level:.3f}</text>')
    corner = (-0.5, -0.5)
    lines = [((-0.5, -1.0), corner), ((-1.0, -0.5), corner), ((-0.5, -1.0), (-1.0, -0.5))]
    for (xa, ya), (xb, yb) in lines:
        body.append(
            f'<line class="boundary" x1="{_f(frame.px(xa))}" y1="{_f(frame.py(ya))}" '
            f'x2="{_f(frame.px(xb))}" y2="{_f(frame.py(yb))}" stroke="black" stroke-width="1.5" '
            'stroke-dasharray="5,3"/>'
        )
    return _document(body)


def line_svg(rows, title=None):
    """M3 against gamma1 along a fixed-alpha sweep."""
    if not rows:
        frame = _Frame((-0.75, -0.5), (0.0, 1.0))
        return _document(_axes(frame, "gamma1", "M3", title or "M3 against gamma1"))
    xs = [r.gamma1 for r in rows]
    ys = [r.m3 for r in rows]
    xlo, xhi = min(xs), max(xs)
    if xhi == xlo:
        xlo, xhi = xlo - 0.01, xhi + 0.01
    ylo, yhi = min(ys), max(ys)
    pad = 0.05 * (yhi - ylo) if yhi > ylo else 0.1
    frame = _Frame((xlo, xhi), (ylo - pad, yhi + pad))
    alpha = rows[0].gamma1 + rows[0].gamma2
    body = _axes(frame, "gamma1", "M3", title or f"M3(gamma1, alpha - gamma1), alpha = {alpha:.3g}")
    pts = " ".join(f"{_f(frame.px(x))},{_f(frame.py(y))}" for x, y in zip(xs, ys))
    body.append(f'<polyline class="series" points="{pts}" fill="none" stroke="rgb(40,60,220)" stroke-width="1.5"/>')
    for x, y in zip(xs, ys):
        body.append(f'<circle cx="{_f(frame.px(x))}" cy="{_f(frame.py(y))}" r="3" fill="rgb(40,60,220)"/>')
    return _document(body)
