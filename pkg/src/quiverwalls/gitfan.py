"""The GIT fan, GIT equivalence, and the geometric-phase criterion.

The fan is built in two passes. First ``Sigma(d)`` is cut by every hyperplane
``H_e`` that carries a codimension-one wall. Then neighbouring maximal cells
are glued whenever their common facet is not covered by a wall, and the
faces of the glued cones are enumerated from the facet incidences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import polyhedral as ph
from .errors import InvariantError, PreconditionError
from .linalg import IntVec, dot
from .quiver import DimVector, Quiver, is_indivisible, subdim_vectors
from .schofield import session
from .walls import all_walls, sst_cone, wall_bar, _nonzero

__all__ = [
    "Fan",
    "FanCone",
    "git_fan",
    "git_equivalent",
    "has_geometric_phase",
    "fan_f_vector",
    "locate",
    "UnionFind",
]


class UnionFind:
    """Disjoint sets over ``0 .. n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values())


@dataclass(frozen=True)
class FanCone:
    dim: int
    rays: tuple[int, ...]  # indices into Fan.rays


@dataclass(frozen=True)
class Fan:
    """A polyhedral fan closed under faces.

    ``cones`` is sorted by ``(dim, rays)``; the first entry is the minimal
    cone (the common lineality space). ``f_vector[i]`` counts the cones of
    dimension ``i + len(lineality)``.
    """

    ambient_dim: int
    rays: tuple[IntVec, ...]
    lineality: tuple[IntVec, ...]
    cones: tuple[FanCone, ...]
    f_vector: tuple[int, ...]
    _maximal: tuple = field(repr=False, compare=False, default=())

    def cone(self, index: int) -> ph.Cone:
        c = self.cones[index]
        return ph.from_rays(self.ambient_dim, [self.rays[i] for i in c.rays], self.lineality)

    @property
    def maximal_cones(self) -> list[int]:
        top = max(c.dim for c in self.cones)
        return [i for i, c in enumerate(self.cones) if c.dim == top]

    def index_of(self, ray_ids) -> int:
        key = tuple(sorted(ray_ids))
        for i, c in enumerate(self.cones):
            if c.rays == key:
                return i
        raise KeyError(key)


def _hyperplane_normals(q: Quiver, d: DimVector) -> dict[DimVector, list[ph.Cone]]:
    out = {}
    for e in subdim_vectors(d, proper=True, nonzero=True):
        if not is_indivisible(e):
            continue
        walls = wall_bar(q, d, e)
        if walls:
            out[e] = walls
    return out


def _fan_from_maximal(n: int, lineality, maximal: list[ph._Full]) -> Fan:
    ray_set = sorted({r for m in maximal for r in m.rays})
    ray_id = {r: i for i, r in enumerate(ray_set)}
    faces: dict[frozenset, int] = {}
    for m in maximal:
        local = [ray_id[r] for r in m.rays]
        for fs, fd in ph.face_lattice(m).items():
            g = frozenset(local[i] for i in fs)
            old = faces.setdefault(g, fd)
            if old != fd:
                raise InvariantError(f"face {sorted(g)} has inconsistent dimensions {old} and {fd}")
    cones = sorted((FanCone(fd, tuple(sorted(g))) for g, fd in faces.items()), key=lambda c: (c.dim, c.rays))
    lo = len(lineality)
    top = max(c.dim for c in cones)
    counts = [0] * (top - lo + 1)
    for c in cones:
        counts[c.dim - lo] += 1
    return Fan(n, tuple(ray_set), tuple(lineality), tuple(cones), tuple(counts), tuple(maximal))


def _interiors_overlap(a: ph._Full, b: ph._Full) -> bool:
    for x, y in ((a, b), (b, a)):
        for nrm in x.inequalities:
            if all(dot(nrm, r) >= 0 for r in y.rays):
                return False
    both = ph.intersect(ph.Cone(a.n, full=a), ph.Cone(b.n, full=b))
    return both.dim == a.dim


def _merge(cells: list[ph._Full], classes: list[list[int]]) -> list[ph._Full]:
    n = cells[0].n
    lin = cells[0].lineality
    out = []
    for cls in classes:
        if len(cls) == 1:
            out.append(cells[cls[0]])
            continue
        rays = {r for i in cls for r in cells[i].rays}
        hull = ph.from_rays(n, sorted(rays), lin).full
        if hull.dim != cells[cls[0]].dim or hull.lineality != lin:
            raise InvariantError("merged GIT class changed dimension or lineality")
        members = set(cls)
        for j, other in enumerate(cells):
            if j not in members and _interiors_overlap(hull, other):
                raise InvariantError(f"merged class {cls} is not convex")
        out.append(hull)
    return out


def git_fan(q: Quiver, d: Sequence[int]) -> Fan:
    """The GIT fan of ``(Q, d)``; its support is ``Sigma(d)``."""
    d = _nonzero(q, d)
    return session(q).memo(("fan", d), lambda: _git_fan(q, d))


def _git_fan(q: Quiver, d: DimVector) -> Fan:
    n = q.n
    support = sst_cone(q, d)
    normals = _hyperplane_normals(q, d)
    cells = ph.chamber_fulls(support, list(normals))
    lin = cells[0].lineality
    if any(c.lineality != lin for c in cells):
        raise InvariantError("chambers do not share a lineality space")

    # cells sharing a facet, keyed by the facet's rays
    shared: dict[frozenset, list[int]] = {}
    for ci, cell in enumerate(cells):
        for inc in cell.incidence:
            shared.setdefault(frozenset(cell.rays[i] for i in inc), []).append(ci)

    uf = UnionFind(len(cells))
    for key, owners in shared.items():
        if len(owners) == 1:
            continue
        if len(owners) != 2:
            raise InvariantError(f"facet shared by {len(owners)} chambers")
        p = [sum(col) for col in zip(*(list(key) + list(lin)))] if key or lin else [0] * n
        on_wall = False
        for e, walls in normals.items():
            if any(dot(e, r) for r in key) or dot(e, p):
                continue
            if any(ph.contains(w, p) for w in walls):
                on_wall = True
                break
        if not on_wall:
            uf.union(*owners)

    maximal = _merge(cells, uf.classes())
    return _fan_from_maximal(n, lin, maximal)


def fan_f_vector(fan: Fan) -> tuple[int, ...]:
    return fan.f_vector


def locate(fan: Fan, theta: Sequence) -> int:
    """Index into ``fan.cones`` of the cone containing ``theta`` in its relative interior."""
    theta = tuple(Fraction(x) for x in theta)
    if len(theta) != fan.ambient_dim:
        raise ValueError(f"theta has length {len(theta)}, expected {fan.ambient_dim}")
    ray_id = {r: i for i, r in enumerate(fan.rays)}
    for m in fan._maximal:
        if not ph.point_in_full(m, theta):
            continue
        face = set(range(len(m.rays)))
        for nrm, inc in zip(m.inequalities, m.incidence):
            if dot(nrm, theta) == 0:
                face &= inc
        return fan.index_of(ray_id[m.rays[i]] for i in face)
    raise PreconditionError("theta is not in the support of the fan")


def _segment_hits(cone: ph.Cone, theta, eta):
    """Sub-interval ``[lo, hi]`` of ``[0, 1]`` with ``theta + t (eta - theta)`` in cone."""
    delta = [b - a for a, b in zip(theta, eta)]
    lo, hi = Fraction(0), Fraction(1)
    eqs, ineqs = cone.h_constraints()
    for a in eqs:
        a0, a1 = dot(a, theta), dot(a, delta)
        if a1 == 0:
            if a0 != 0:
                return None
            continue
        t = Fraction(-a0) / a1
        lo, hi = max(lo, t), min(hi, t)
    for b in ineqs:
        b0, b1 = dot(b, theta), dot(b, delta)
        if b1 == 0:
            if b0 > 0:
                return None
        elif b1 > 0:
            hi = min(hi, Fraction(-b0) / b1)
        else:
            lo = max(lo, Fraction(-b0) / b1)
    if lo > hi:
        return None
    return lo, hi


def git_equivalent(q: Quiver, d: Sequence[int], theta: Sequence, eta: Sequence) -> bool:
    """Whether ``theta`` and ``eta`` in ``Sigma(d)`` are GIT equivalent.

    True iff every wall either contains the segment ``[theta, eta]`` or
    misses it.
    """
    d = _nonzero(q, d)
    theta = tuple(Fraction(x) for x in theta)
    eta = tuple(Fraction(x) for x in eta)
    support = sst_cone(q, d)
    for name, v in (("theta", theta), ("eta", eta)):
        if len(v) != q.n:
            raise ValueError(f"{name} has length {len(v)}, quiver has {q.n} vertices")
        if not ph.contains(support, v):
            raise PreconditionError(f"{name} is not in the semistable cone")
    for _, w in all_walls(q, d):
        hit = _segment_hits(w, theta, eta)
        if hit is not None and hit != (0, 1):
            return False
    return True


def has_geometric_phase(q: Quiver, d: Sequence[int]) -> bool:
    """``Sigma(d)`` spans ``C(d)`` and no wall does."""
    d = _nonzero(q, d)
    top = q.n - 1
    if sst_cone(q, d).dim != top:
        return False
    return all(w.dim < top for _, w in all_walls(q, d))
