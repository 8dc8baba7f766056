"""Byte-stable SVG and ASCII renderings of a loop decomposition.

The fundamental domain [0,M] x [0,N] is drawn with every undirected grid
edge colored by the loop that owns it; loops continuing across the domain
boundary reappear on the opposite side, matching the torus picture.  Output
bytes depend only on the inputs.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass

from .loops import LoopDecomposition
from .pattern import EAST, NORTH, SOUTH, WEST, ToroidalPattern


@dataclass(frozen=True)
class RenderSpec:
    target: str = "svg"  # svg | ascii
    cell_size: int = 24
    domain_outline: bool = True
    diagonal_guide: bool = False


def palette_color(index: int) -> str:
    """Deterministic per-loop color: golden-angle hue walk."""
    hue = (index * 0.6180339887498949) % 1.0
    r, g, b = colorsys.hsv_to_rgb(hue, 0.72, 0.82)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def _edge_ownership(d: LoopDecomposition) -> tuple[dict, dict]:
    """Map each undirected edge (keyed by its west/south vertex) to a loop index."""
    p = d.pattern
    horizontal: dict[tuple[int, int], int] = {}
    vertical: dict[tuple[int, int], int] = {}
    for idx, loop in enumerate(d.loops):
        for e in loop.edges:
            if e.d == EAST:
                horizontal[(e.i, e.j)] = idx
            elif e.d == WEST:
                horizontal[((e.i - 1) % p.m, e.j)] = idx
            elif e.d == NORTH:
                vertical[(e.i, e.j)] = idx
            elif e.d == SOUTH:
                vertical[(e.i, (e.j - 1) % p.n)] = idx
    return horizontal, vertical


def render_svg(p: ToroidalPattern, d: LoopDecomposition, spec: RenderSpec) -> str:
    cell = spec.cell_size
    margin = cell
    width = p.m * cell + 2 * margin
    height = p.n * cell + 2 * margin

    def px(x: float) -> float:
        return margin + x * cell

    def py(y: float) -> float:
        return margin + (p.n - y) * cell

    horizontal, vertical = _edge_ownership(d)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if spec.domain_outline:
        lines.append(
            f'<rect x="{px(0)}" y="{py(p.n)}" width="{p.m * cell}" height="{p.n * cell}" '
            'fill="none" stroke="black" stroke-width="1" stroke-dasharray="5 4"/>'
        )
    if spec.diagonal_guide and p.is_symmetric:
        lines.append(
            f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(p.m)}" y2="{py(p.n)}" '
            'stroke="gray" stroke-width="1" stroke-dasharray="2 3"/>'
        )
    groups: dict[int, list[str]] = {}
    for (i, j), idx in sorted(horizontal.items()):
        groups.setdefault(idx, []).append(
            f'<line x1="{px(i)}" y1="{py(j)}" x2="{px(i + 1)}" y2="{py(j)}"/>'
        )
    for (i, j), idx in sorted(vertical.items()):
        groups.setdefault(idx, []).append(
            f'<line x1="{px(i)}" y1="{py(j)}" x2="{px(i)}" y2="{py(j + 1)}"/>'
        )
    for idx in sorted(groups):
        lines.append(
            f'<g stroke="{palette_color(idx)}" stroke-width="3" stroke-linecap="round">'
        )
        lines.extend(groups[idx])
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


_ASCII_ALPHABET = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"


def render_ascii(p: ToroidalPattern, d: LoopDecomposition) -> str:
    """Text grid with 2N+1 rows; edges carry the letter of their loop."""
    horizontal, vertical = _edge_ownership(d)

    def letter(idx: int) -> str:
        return _ASCII_ALPHABET[idx % len(_ASCII_ALPHABET)]

    rows = []
    for r in range(2 * p.n + 1):
        y2 = 2 * p.n - r  # doubled y coordinate, top row is y = N
        row = []
        for c in range(2 * p.m + 1):
            x2 = c
            if x2 % 2 == 0 and y2 % 2 == 0:
                row.append("+")
            elif y2 % 2 == 0:
                i = (x2 - 1) // 2
                idx = horizontal[(i % p.m, (y2 // 2) % p.n)]
                row.append(letter(idx))
            elif x2 % 2 == 0:
                j = (y2 - 1) // 2
                idx = vertical[((x2 // 2) % p.m, j % p.n)]
                row.append(letter(idx))
            else:
                row.append(" ")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def render(p: ToroidalPattern, d: LoopDecomposition, spec: RenderSpec) -> str:
    if spec.target == "svg":
        return render_svg(p, d, spec)
    if spec.target == "ascii":
        return render_ascii(p, d)
    raise ValueError(f"unknown render target {spec.target!r}")
