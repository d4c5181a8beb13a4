"""DOT and SVG renderings of quivers, translation quivers and angulations."""

from __future__ import annotations

import math

from .polygon import Angulation, TranslationQuiver, diagonal_label
from .quiver import ColouredQuiver


def _dot_id(label) -> str:
    text = str(label).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def quiver_to_dot(Q: ColouredQuiver) -> str:
    """One edge per coloured arrow, labelled with its colour."""
    lines = ["digraph quiver {"]
    for v in Q.vertices:
        lines.append(f"  {_dot_id(v)};")
    for i, j, c, k in Q.arrows:
        for _ in range(k):
            lines.append(f"  {_dot_id(i)} -> {_dot_id(j)} [label=\"({c})\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def translation_quiver_to_dot(tq: TranslationQuiver) -> str:
    """Arrows solid, the translation drawn as dotted edges."""
    lines = ["digraph translation_quiver {"]
    for d in tq.vertices:
        lines.append(f"  {_dot_id(diagonal_label(d))};")
    for src, tgt in tq.arrows:
        lines.append(f"  {_dot_id(diagonal_label(src))} -> {_dot_id(diagonal_label(tgt))};")
    for d in tq.vertices:
        lines.append(
            f"  {_dot_id(diagonal_label(d))} -> {_dot_id(diagonal_label(tq.tau(d)))} [style=dotted];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _vertex_xy(k: int, N: int) -> tuple[float, float]:
    # vertex 1 at the top, labels proceeding clockwise on the unit circle
    theta = math.pi / 2 - 2 * math.pi * (k - 1) / N
    return (round(math.cos(theta), 6), round(-math.sin(theta), 6))


def angulation_to_svg(a: Angulation, candidates=()) -> str:
    """Regular polygon with the angulation's chords; candidates dashed."""
    N = a.polygon.vertex_count
    pts = {k: _vertex_xy(k, N) for k in range(1, N + 1)}
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.25 -1.25 2.5 2.5">',
        '  <g stroke="#222" stroke-width="0.015" fill="none">',
    ]
    ring = " ".join(f"{pts[k][0]},{pts[k][1]}" for k in range(1, N + 1))
    out.append(f'    <polygon points="{ring}" stroke="#999"/>')
    for i, j in sorted(a.diagonals):
        x1, y1 = pts[i]
        x2, y2 = pts[j]
        out.append(
            f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'data-diagonal="{diagonal_label((i, j))}"/>'
        )
    for i, j in candidates:
        x1, y1 = pts[i]
        x2, y2 = pts[j]
        out.append(
            f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke-dasharray="0.05,0.04" '
            f'stroke="#c22" data-candidate="{diagonal_label((i, j))}"/>'
        )
    out.append("  </g>")
    out.append('  <g font-size="0.12" fill="#222" text-anchor="middle">')
    for k in range(1, N + 1):
        x, y = pts[k]
        out.append(f'    <text x="{round(x * 1.13, 6)}" y="{round(y * 1.13 + 0.04, 6)}">{k}</text>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
