"""Schematic SVG drawings of the line arrangement.

The tetrahedron is drawn from the exact vertex coordinates (real parts of
(Z, W, Y) in canonical scale) under a fixed cabinet projection.  The R points
are complex, so they are placed schematically: evenly spaced along the edge
that carries them.  Only incidences, labels and marker types are meaningful.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .exactfield import embed_complex

__all__ = ["FIGURES", "cabinet", "render_figure", "render_all"]

# figure name -> (vertices whose Z4-lines are drawn, edge carrying their R points)
FIGURES = {
    "arrangement_q0_q3": ((0, 3), (1, 2)),
    "arrangement_q1_q2": ((1, 2), (0, 3)),
}

WIDTH, HEIGHT, MARGIN = 480, 420, 50
_ANGLE = math.radians(35)


def cabinet(p3: tuple[float, float, float]) -> tuple[float, float]:
    """Cabinet projection: depth axis drawn at 35 degrees with half length."""
    x, y, z = p3
    return x + 0.5 * z * math.cos(_ANGLE), y + 0.5 * z * math.sin(_ANGLE)


def _vertex_3d(p) -> tuple[float, float, float]:
    c = [complex(embed_complex(v)).real for v in p.coords]
    return c[2], c[3], c[1]


def _screen(points2d):
    xs = [p[0] for p in points2d.values()]
    ys = [p[1] for p in points2d.values()]
    sx = (WIDTH - 2 * MARGIN) / (max(xs) - min(xs) or 1.0)
    sy = (HEIGHT - 2 * MARGIN) / (max(ys) - min(ys) or 1.0)
    s = min(sx, sy)

    def f(p):
        return (round(MARGIN + (p[0] - min(xs)) * s, 2), round(HEIGHT - MARGIN - (p[1] - min(ys)) * s, 2))
    return f


def _lerp(a, b, t):
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def _extend(a, b, t=1.25):
    return _lerp(a, b, t)


def render_figure(arrangement, name: str) -> str:
    verts, edge = FIGURES[name]
    q2d = {i: cabinet(_vertex_3d(p)) for i, p in enumerate(arrangement.vertices)}
    to_screen = _screen(q2d)
    Q = {i: to_screen(p) for i, p in q2d.items()}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<title>{escape(name)}</title>',
        '<g id="v4-lines" stroke="black" stroke-width="1.5">',
    ]
    for (i, j) in arrangement.v4_lines:
        (x1, y1), (x2, y2) = Q[i], Q[j]
        out.append(f'<line class="v4-line" data-line="l{i}{j}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    rpts = sorted((r for r in arrangement.r_points if r.vertex in verts), key=lambda r: r.label)
    a, b = Q[edge[0]], Q[edge[1]]
    placed = {r.label: _lerp(a, b, (k + 1) / (len(rpts) + 1)) for k, r in enumerate(rpts)}
    out.append('<g id="z4-lines" stroke="gray" stroke-width="1.2" stroke-dasharray="6,4">')
    for r in rpts:
        start = Q[r.vertex]
        x2, y2 = (round(v, 2) for v in _extend(start, placed[r.label]))
        out.append(f'<line class="z4-line" data-generator="{r.generator}" '
                   f'x1="{start[0]}" y1="{start[1]}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append('<g id="markers" stroke="black" stroke-width="1.5">')
    for i, (x, y) in Q.items():
        out.append(f'<circle class="vertex-marker" cx="{x}" cy="{y}" r="5" fill="black"/>')
    for r in rpts:
        x, y = (round(v, 2) for v in placed[r.label])
        out.append(f'<circle class="r-marker" data-label="{r.label}" cx="{x}" cy="{y}" r="5" fill="white"/>')
    out.append("</g>")
    out.append('<g id="labels" font-family="serif" font-size="15">')
    for i, (x, y) in Q.items():
        out.append(f'<text x="{x + 8}" y="{y - 8}">Q{i}</text>')
    for r in rpts:
        x, y = placed[r.label]
        out.append(f'<text x="{round(x + 8, 2)}" y="{round(y + 16, 2)}" font-size="12">{r.label}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_all(arrangement) -> dict[str, str]:
    return {name: render_figure(arrangement, name) for name in FIGURES}
