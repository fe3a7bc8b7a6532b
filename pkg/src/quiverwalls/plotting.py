"""Wall diagrams for quivers whose stability space ``C(d)`` is a plane.

Points of ``C(d)`` are drawn in the coordinates of the remaining vertices
after eliminating ``theta_p`` with ``theta . d = 0``. On three vertices with
the first one projected away this is the ``(b, c)`` plane.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .linalg import IntVec, primitive
from .quiver import DimVector, Quiver
from .walls import _nonzero, all_walls, codim_one_walls, sst_cone

__all__ = ["WallDiagram", "wall_diagram", "plot_2d", "project"]


@dataclass(frozen=True)
class WallDiagram:
    """Everything drawn in a wall diagram, in projected primitive coordinates."""

    d: DimVector
    project_vertex: int
    axes: tuple[int, int]  # the two surviving vertices (0-based)
    sigma_rays: tuple[IntVec, ...]
    sigma_lineality: tuple[IntVec, ...]
    sigma_normals: tuple[tuple[Fraction, Fraction], ...]
    hyperplanes: tuple[IntVec, ...]
    wall_rays: tuple[IntVec, ...]


def project(v: Sequence[int], vertex: int) -> IntVec:
    """Drop coordinate ``vertex`` and make the result primitive."""
    return primitive(x for i, x in enumerate(v) if i != vertex)


def _sign_free(v: IntVec) -> IntVec:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def wall_diagram(q: Quiver, d: Sequence[int], project_vertex: int) -> WallDiagram:
    """Collect the rays of ``Sigma(d)``, the lines ``H_e`` and the codimension-one walls.

    Args:
        q: quiver with exactly three vertices.
        d: nonzero dimension vector.
        project_vertex: 0-based vertex whose coordinate is eliminated;
            ``d`` must be nonzero there.
    """
    d = _nonzero(q, d)
    if q.n - 1 != 2:
        raise PreconditionError(f"stability space has dimension {q.n - 1}, plotting needs 2")
    if not 0 <= project_vertex < q.n:
        raise ValueError(f"project vertex {project_vertex + 1} is out of range 1..{q.n}")
    p = project_vertex
    if d[p] == 0:
        raise PreconditionError(f"d is zero at vertex {p + 1}; cannot eliminate that coordinate")
    axes = tuple(i for i in range(q.n) if i != p)

    sigma = sst_cone(q, d)
    normals = []
    for a in sigma.inequalities:
        normals.append(tuple(Fraction(a[j]) - Fraction(a[p] * d[j], d[p]) for j in axes))

    lines = set()
    for e, w in all_walls(q, d):
        if w.dim == 0:
            continue
        # H_e is the line orthogonal to d and e; its direction is d x e
        cross = (
            d[1] * e[2] - d[2] * e[1],
            d[2] * e[0] - d[0] * e[2],
            d[0] * e[1] - d[1] * e[0],
        )
        if any(cross):
            lines.add(_sign_free(project(cross, p)))

    heavy = set()
    for w in codim_one_walls(q, d).values():
        for r in w.rays:
            heavy.add(project(r, p))
        for l in w.lineality:
            heavy.add(project(l, p))
            heavy.add(project([-x for x in l], p))

    return WallDiagram(
        d=d,
        project_vertex=p,
        axes=axes,
        sigma_rays=tuple(sorted(project(r, p) for r in sigma.rays)),
        sigma_lineality=tuple(project(l, p) for l in sigma.lineality),
        sigma_normals=tuple(normals),
        hyperplanes=tuple(sorted(lines)),
        wall_rays=tuple(sorted(heavy)),
    )


def _unit(v) -> tuple[float, float]:
    x, y = float(v[0]), float(v[1])
    r = math.hypot(x, y)
    return x / r, y / r


def _sigma_polygon(diag: WallDiagram, radius: float) -> list[tuple[float, float]]:
    """Vertices of ``Sigma(d)`` clipped to the disc-like square of half-width ``radius``."""
    gens = list(diag.sigma_rays)
    gens += list(diag.sigma_lineality) + [tuple(-x for x in l) for l in diag.sigma_lineality]
    if not gens:
        return []

    def inside(pt):
        return all(float(a) * pt[0] + float(b) * pt[1] <= 1e-9 for a, b in diag.sigma_normals)

    pts = [(0.0, 0.0)] if not diag.sigma_lineality else []
    for g in gens:
        ux, uy = _unit(g)
        s = radius / max(abs(ux), abs(uy))
        pts.append((ux * s, uy * s))
    for cx in (-radius, radius):
        for cy in (-radius, radius):
            if inside((cx, cy)):
                pts.append((cx, cy))
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    return sorted(pts, key=lambda pt: math.atan2(pt[1] - my, pt[0] - mx))


def plot_2d(q: Quiver, d: Sequence[int], project_vertex: int, title: str | None = None) -> bytes:
    """Render :func:`wall_diagram` as an SVG document.

    The output is byte-for-byte reproducible: element ids are derived from
    a fixed salt and no timestamp is written.
    """
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib import pyplot as plt
    from matplotlib.patches import Polygon

    diag = wall_diagram(q, d, project_vertex)
    radius = 1.0
    with matplotlib.rc_context({"svg.hashsalt": "quiverwalls", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(5, 5))
        ax.set_xlim(-1.25 * radius, 1.25 * radius)
        ax.set_ylim(-1.25 * radius, 1.25 * radius)
        ax.set_aspect("equal")
        ax.set_xlabel(f"theta_{diag.axes[0] + 1}")
        ax.set_ylabel(f"theta_{diag.axes[1] + 1}")
        ax.axhline(0, color="0.85", lw=0.5, zorder=0)
        ax.axvline(0, color="0.85", lw=0.5, zorder=0)

        poly = _sigma_polygon(diag, radius)
        if len(poly) >= 3:
            ax.add_patch(Polygon(poly, closed=True, facecolor="#cfe0f3", edgecolor="none", zorder=1))
        for g in diag.sigma_rays:
            ux, uy = _unit(g)
            s = radius / max(abs(ux), abs(uy))
            ax.plot([0, ux * s], [0, uy * s], color="#6a8fbf", lw=1.0, zorder=2)

        for h in diag.hyperplanes:
            ux, uy = _unit(h)
            s = 1.2 * radius / max(abs(ux), abs(uy))
            ax.plot([-ux * s, ux * s], [-uy * s, uy * s], color="0.7", lw=0.6, ls="--", zorder=2)

        for w in diag.wall_rays:
            ux, uy = _unit(w)
            s = radius / max(abs(ux), abs(uy))
            ax.plot([0, ux * s], [0, uy * s], color="black", lw=2.2, zorder=3)
            ax.annotate(
                f"({w[0]},{w[1]})",
                (ux * s, uy * s),
                textcoords="offset points",
                xytext=(6 * ux, 6 * uy),
                ha="center",
                va="center",
                fontsize=8,
            )

        if not diag.sigma_rays and not diag.sigma_lineality:
            ax.plot([0], [0], marker="o", color="black", ms=5, zorder=4)

        ax.set_title(title or f"d = {diag.d}")
        buf = io.BytesIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
        plt.close(fig)
    return buf.getvalue()
