"""Matplotlib figures for the report path.

Verification runs write these PNG files next to the line-delimited report:
a bar summary of instances/violations per theorem, and loop diagrams for
violation witnesses.  Byte stability is not promised here (that is the SVG
renderer's job); the PNG metadata is pinned so identical environments
produce identical files.
"""

from __future__ import annotations

from typing import Iterable

from .loops import LoopDecomposition
from .pattern import EAST, NORTH, ToroidalPattern
from .render import _edge_ownership, palette_color

_PNG_METADATA = {"Software": "hitomezashi"}


def _mpl():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def save_pattern_figure(p: ToroidalPattern, d: LoopDecomposition, path: str) -> None:
    """Fundamental-domain picture with loops colored by canonical index."""
    plt = _mpl()
    horizontal, vertical = _edge_ownership(d)
    fig, ax = plt.subplots(figsize=(max(3.0, p.m * 0.5), max(3.0, p.n * 0.5)))
    for (i, j), idx in sorted(horizontal.items()):
        ax.plot([i, i + 1], [j, j], color=palette_color(idx), linewidth=2.5)
    for (i, j), idx in sorted(vertical.items()):
        ax.plot([i, i], [j, j + 1], color=palette_color(idx), linewidth=2.5)
    ax.add_patch(
        plt.Rectangle((0, 0), p.m, p.n, fill=False, linestyle=":", edgecolor="black")
    )
    ax.set_xlim(-0.7, p.m + 0.7)
    ax.set_ylim(-0.7, p.n + 0.7)
    ax.set_aspect("equal")
    ax.set_title(p.pattern_id)
    ax.set_xticks(range(p.m + 1))
    ax.set_yticks(range(p.n + 1))
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_PNG_METADATA)
    plt.close(fig)


def save_sweep_summary(reports: Iterable, path: str) -> None:
    """Bar chart of instances checked and violations found per theorem."""
    plt = _mpl()
    reports = list(reports)
    names = [r.theorem for r in reports]
    instances = [r.instances for r in reports]
    violations = [len(r.violations) for r in reports]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.2))
    pos = range(len(names))
    ax1.barh(list(pos), instances, color="#4a90d9")
    ax1.set_yticks(list(pos), names)
    ax1.set_xlabel("instances checked")
    ax1.invert_yaxis()
    ax2.barh(list(pos), violations, color="#d9534f")
    ax2.set_yticks(list(pos), ["" for _ in names])
    ax2.set_xlabel("violations")
    ax2.set_xlim(0, max(1, max(violations) if violations else 1))
    ax2.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_PNG_METADATA)
    plt.close(fig)
