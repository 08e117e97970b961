"""Static SVG pictures of two-dimensional polygons living in a plane
x_1 + x_2 + x_3 = const (the n = 3 zonotopes and the N = 4 associahedra)."""

from __future__ import annotations

import math
from typing import Sequence

from .rational import fmt

# e_1 - e_2 horizontal, (e_1 + e_2 - 2 e_3) vertical; both orthonormal in the plane
_U = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_W = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))


def project(v: Sequence) -> tuple:
    f = [float(x) for x in v]
    return (sum(a * b for a, b in zip(f, _U)), sum(a * b for a, b in zip(f, _W)))


def cyclic_order(points: Sequence[Sequence]) -> list:
    """Vertices sorted by angle about their centroid in the projected plane."""
    pts = list(points)
    if len(pts) < 3:
        return pts
    proj = [project(p) for p in pts]
    cx = sum(p[0] for p in proj) / len(proj)
    cy = sum(p[1] for p in proj) / len(proj)
    order = sorted(range(len(pts)), key=lambda k: math.atan2(proj[k][1] - cy, proj[k][0] - cx))
    return [pts[k] for k in order]


def polygon_svg(vertices: Sequence[Sequence], title: str = "", size: int = 400) -> str:
    ring = cyclic_order(vertices)
    proj = [project(v) for v in ring]
    xs = [p[0] for p in proj] or [0.0]
    ys = [p[1] for p in proj] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    pad = 60
    scale = (size - 2 * pad) / span

    def screen(p):
        # SVG y grows downward
        return (pad + (p[0] - min(xs)) * scale, size - pad - (p[1] - min(ys)) * scale)

    pts = [screen(p) for p in proj]
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>{title}</title>",
    ]
    if len(pts) >= 2:
        path = " ".join(f"{x:.3f},{y:.3f}" for x, y in pts)
        lines.append(f'<polygon points="{path}" fill="#dde8f6" stroke="#1f3b70" stroke-width="2"/>')
    for (x, y), v in zip(pts, ring):
        label = "(" + ",".join(fmt(c) for c in v) + ")"
        lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4" fill="#1f3b70"/>')
        lines.append(
            f'<text x="{x + 6:.3f}" y="{y - 6:.3f}" font-family="monospace" font-size="12">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
