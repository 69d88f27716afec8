"""Figures written next to the line-oriented reports."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .polygons import PolygonClass  # noqa: E402
from .polytope import LatticePolytope, lattice_points  # noqa: E402
from .skeleton import k_skeleton_points  # noqa: E402
from .verify import VerificationReport  # noqa: E402


def _ccw(vertices: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return sorted(vertices, key=lambda v: math.atan2(v[1], v[0]))


def draw_polygon(ax, P: LatticePolytope, highlight: bool = False) -> None:
    """Polygon outline, vertex-lattice points filled, other boundary points hollow."""
    ring = _ccw(P.vertices)
    ring.append(ring[0])
    color = "tab:red" if highlight else "tab:blue"
    ax.fill(*zip(*ring), alpha=0.15, color=color)
    ax.plot(*zip(*ring), color=color, lw=1.5)
    interior, boundary = lattice_points(P)
    verts = set(k_skeleton_points(P, 0))
    others = [p for p in boundary if p not in verts]
    ax.plot(*zip(*verts), "o", color=color, ms=5)
    if others:
        ax.plot(*zip(*others), "o", mfc="white", mec=color, ms=5)
    ax.plot(*zip(*interior), "x", color="k", ms=5)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])


def plot_polygon_gallery(classes: Sequence[PolygonClass], path: str | Path, ncols: int = 4) -> Path:
    nrows = max(1, math.ceil(len(classes) / ncols))
    fig, axes = plt.subplots(nrows, ncols, figsize=(2.4 * ncols, 2.4 * nrows), squeeze=False)
    for ax in axes.flat[len(classes):]:
        ax.axis("off")
    for i, (ax, c) in enumerate(zip(axes.flat, classes)):
        draw_polygon(ax, c.representative, highlight=c.lambda0_index > 1)
        ax.set_title(f"#{i}  index {c.lambda0_index}", fontsize=9)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_lambda_indices(reports: Sequence[VerificationReport], path: str | Path) -> Path:
    """Index of each skeleton lattice against k, one line per polytope."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for rep in reports:
        if not rep.reflexive:
            continue
        ks = [info.k for info in rep.lambdas if info.index is not None]
        idx = [info.index for info in rep.lambdas if info.index is not None]
        ax.plot(ks, idx, marker="o", alpha=0.7, label=rep.id if len(reports) <= 10 else None)
    ax.set_xticks(range(max((r.n for r in reports), default=0) + 1))
    ax.set_xlabel("k")
    ax.set_ylabel("index of lattice generated by the k-skeleton")
    ax.set_yscale("log", base=2)
    if 0 < len(reports) <= 10:
        ax.legend(fontsize=7)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
