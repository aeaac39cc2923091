"""Deterministic SVG pictures of matchings, webs, and arc diagrams.

Layout is cosmetic only: boundary vertices sit on a circle, internal vertices
relax to the barycenter of their neighbors (Tutte-style, from the rotation
system's adjacency).  Identical input yields identical bytes.
"""
from __future__ import annotations

import math

from .bijection import ArcDiagram
from .webcore import BLACK, Matching, Web

_SIZE = 420
_CENTER = _SIZE / 2
_RADIUS = 160
_ITERATIONS = 300


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _svg(elements: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">'
    )
    return "\n".join([head, *elements, "</svg>"]) + "\n"


def _boundary_positions(count: int) -> list[tuple[float, float]]:
    out = []
    for i in range(count):
        theta = math.pi / 2 + 2 * math.pi * (i + 0.5) / count
        out.append((_CENTER + _RADIUS * math.cos(theta), _CENTER - _RADIUS * math.sin(theta)))
    return out


def _dot(x: float, y: float, color: str) -> str:
    fill = "#000000" if color == BLACK else "#ffffff"
    return (
        f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="{fill}" '
        f'stroke="#000000" stroke-width="1.5"/>'
    )


def _label(x: float, y: float, text: str) -> str:
    return (
        f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="12" font-family="monospace" '
        f'text-anchor="middle" dominant-baseline="middle">{text}</text>'
    )


def _boundary_label_pos(i: int, count: int) -> tuple[float, float]:
    theta = math.pi / 2 + 2 * math.pi * (i + 0.5) / count
    r = _RADIUS + 16
    return _CENTER + r * math.cos(theta), _CENTER - r * math.sin(theta)


def render_matching_svg(m: Matching) -> str:
    points = max(1, 2 * m.n)
    pos = _boundary_positions(points)
    elements = [
        f'<circle cx="{_fmt(_CENTER)}" cy="{_fmt(_CENTER)}" r="{_fmt(_RADIUS)}" '
        f'fill="none" stroke="#bbbbbb" stroke-dasharray="4 3"/>'
    ]
    for i, j in m.pairs:
        (x1, y1), (x2, y2) = pos[i - 1], pos[j - 1]
        elements.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#000000" stroke-width="1.5"/>'
        )
    for i in range(2 * m.n):
        elements.append(_dot(*pos[i], BLACK))
        elements.append(_label(*_boundary_label_pos(i, points), str(i + 1)))
    return _svg(elements)


def render_web_svg(web: Web) -> str:
    b = web.n_boundary
    pos: list[tuple[float, float]] = list(_boundary_positions(max(1, b)))[:b]
    # internal vertices start just off-center (distinct seeds keep degenerate
    # configurations from stacking) and relax to neighbor barycenters
    for i in range(len(web.internal_colors)):
        angle = 2 * math.pi * (i + 1) / max(1, len(web.internal_colors) + 1)
        pos.append((_CENTER + 10 * math.cos(angle), _CENTER + 10 * math.sin(angle)))

    neighbors: list[list[int]] = [[] for _ in range(web.n_vertices)]
    for e, (x, y) in enumerate(web.edges):
        neighbors[x].append(y)
        neighbors[y].append(x)
    for _ in range(_ITERATIONS):
        for v in range(b, web.n_vertices):
            nbrs = neighbors[v]
            if nbrs:
                pos[v] = (
                    sum(pos[w][0] for w in nbrs) / len(nbrs),
                    sum(pos[w][1] for w in nbrs) / len(nbrs),
                )

    elements = [
        f'<circle cx="{_fmt(_CENTER)}" cy="{_fmt(_CENTER)}" r="{_fmt(_RADIUS)}" '
        f'fill="none" stroke="#bbbbbb" stroke-dasharray="4 3"/>'
    ]
    for x, y in web.edges:
        (x1, y1), (x2, y2) = pos[x], pos[y]
        elements.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#000000" stroke-width="1.5"/>'
        )
    for v in range(web.n_vertices):
        elements.append(_dot(*pos[v], web.color(v)))
    for i in range(b):
        elements.append(_label(*_boundary_label_pos(i, b), str(i + 1)))
    return _svg(elements)


def render_mdiagram_svg(diagram: ArcDiagram) -> str:
    margin = 40.0
    baseline = _SIZE - 80.0
    m = diagram.points
    step = (_SIZE - 2 * margin) / (m - 1) if m > 1 else 0.0
    xs = [margin + (i - 1) * step if m > 1 else _CENTER for i in range(1, m + 1)]
    elements = [
        f'<line x1="{_fmt(margin - 15)}" y1="{_fmt(baseline)}" x2="{_fmt(_SIZE - margin + 15)}" '
        f'y2="{_fmt(baseline)}" stroke="#bbbbbb"/>'
    ]
    for arc in diagram.arcs:
        x1, x2 = xs[arc.left - 1], xs[arc.right - 1]
        r = (x2 - x1) / 2
        elements.append(
            f'<path d="M {_fmt(x1)} {_fmt(baseline)} A {_fmt(r)} {_fmt(r)} 0 0 1 '
            f'{_fmt(x2)} {_fmt(baseline)}" fill="none" stroke="#000000" stroke-width="1.5"/>'
        )
    for i, x in enumerate(xs, start=1):
        elements.append(_dot(x, baseline, BLACK))
        elements.append(_label(x, baseline + 20, str(i)))
    return _svg(elements)
