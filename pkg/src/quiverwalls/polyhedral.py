"""Exact rational polyhedral cones.

A :class:`Cone` is a closed convex cone through the origin in ``Q^n``. It can
be given by an H-representation::

    {x : a.x = 0 for a in equalities, b.x <= 0 for b in inequalities}

or by a V-representation (rays plus a lineality basis). The other side is
computed on demand by the double description method, working entirely with
Python integers. Once both sides are known the cone is kept in a canonical
form:

* equalities / lineality: reduced row echelon bases scaled to primitive
  integer vectors,
* rays: primitive, reduced modulo the lineality space, sorted,
* inequalities: one primitive facet normal per facet, reduced modulo the
  equalities, sorted.

Two cones are equal as sets iff their :meth:`Cone.canonical_form` agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import (
    IntVec,
    clear_denominators,
    dot,
    nullspace,
    primitive,
    reduce_modulo,
    rref,
)

__all__ = [
    "Cone",
    "from_inequalities",
    "from_rays",
    "dual_convert",
    "intersect",
    "dim",
    "relative_interior_point",
    "facets",
    "contains",
    "is_subcone",
    "canonical_form",
    "chambers",
    "f_vector",
]


@dataclass(frozen=True)
class _Full:
    """Both representations of a cone, canonical and irredundant."""

    n: int
    equalities: tuple[IntVec, ...]
    eq_pivots: tuple[int, ...]
    inequalities: tuple[IntVec, ...]
    lineality: tuple[IntVec, ...]
    lin_pivots: tuple[int, ...]
    rays: tuple[IntVec, ...]
    # incidence[j] = indices of rays lying on facet j
    incidence: tuple[frozenset, ...]

    @property
    def dim(self) -> int:
        return self.n - len(self.equalities)


def _as_int_rows(rows: Iterable[Sequence], n: int) -> list[IntVec]:
    out = []
    for r in rows:
        r = tuple(r)
        if len(r) != n:
            raise ValueError(f"vector {r} has length {len(r)}, expected {n}")
        if all(isinstance(x, int) for x in r):
            out.append(primitive(r))
        else:
            out.append(clear_denominators(r))
    return out


def _double_description(n: int, equalities: list[IntVec], inequalities: list[IntVec]):
    """Generators of ``{a.x = 0, b.x <= 0}``.

    Returns ``(lineality, rays)``: a basis of the lineality space and one
    vector per extreme ray modulo it. Neither list is canonical yet.
    """
    lin = [list(v) for v in nullspace(equalities, n)]
    kdim = len(lin)
    rays: list[list[int]] = []
    masks: list[int] = []
    for idx, b in enumerate(inequalities):
        if not any(b):
            continue
        bit = 1 << idx
        lvals = [dot(b, l) for l in lin]
        k = next((i for i, v in enumerate(lvals) if v), None)
        if k is not None:
            l0 = lin.pop(k)
            c = lvals.pop(k)
            if c > 0:
                l0 = [-x for x in l0]
                c = -c
            c = -c  # b.l0 = -c < 0
            lin = [list(primitive(c * x + v * y for x, y in zip(l, l0))) for l, v in zip(lin, lvals)]
            new_rays = []
            for r in rays:
                v = dot(b, r)
                new_rays.append(list(primitive(c * x + v * y for x, y in zip(r, l0))) if v else r)
            rays = new_rays
            masks = [m | bit for m in masks]
            rays.append(l0)
            masks.append(bit - 1)
            continue
        vals = [dot(b, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        if not pos:
            masks = [m | bit if v == 0 else m for m, v in zip(masks, vals)]
            continue
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in neg] + [rays[i] for i in zero]
        new_masks = [masks[i] for i in neg] + [masks[i] | bit for i in zero]
        need = kdim - len(lin) - 2
        for p in pos:
            mp = masks[p]
            rp = rays[p]
            vp = vals[p]
            for q in neg:
                s = mp & masks[q]
                if s.bit_count() < need:
                    continue
                if any((masks[t] & s) == s for t in range(len(rays)) if t != p and t != q):
                    continue
                vq = -vals[q]
                rq = rays[q]
                new_rays.append(list(primitive(vp * y + vq * x for x, y in zip(rp, rq))))
                new_masks.append(s | bit)
        rays = new_rays
        masks = new_masks
    return [tuple(v) for v in lin], [tuple(r) for r in rays]


def _maximal_sets(candidates: list[tuple[IntVec, frozenset]], universe: int) -> list[int]:
    """Indices of candidates whose tight set is proper and inclusion-maximal."""
    keep = []
    seen: set[frozenset] = set()
    proper = [(i, s) for i, (_, s) in enumerate(candidates) if len(s) < universe]
    for i, s in proper:
        if s in seen:
            continue
        if any(s < t for _, t in proper):
            continue
        seen.add(s)
        keep.append(i)
    return keep


def _assemble(n, equalities, eq_pivots, lineality, lin_pivots, facet_normals, rays) -> _Full:
    rays = sorted({reduce_modulo(r, lineality, lin_pivots) for r in rays})
    normals = sorted({reduce_modulo(b, equalities, eq_pivots) for b in facet_normals})
    incidence = tuple(frozenset(i for i, r in enumerate(rays) if dot(b, r) == 0) for b in normals)
    return _Full(
        n,
        tuple(equalities),
        tuple(eq_pivots),
        tuple(normals),
        tuple(lineality),
        tuple(lin_pivots),
        tuple(rays),
        incidence,
    )


def _full_from_h(n, equalities, inequalities) -> _Full:
    lin, rays = _double_description(n, equalities, inequalities)
    eqs = nullspace(list(rays) + list(lin), n)
    eqs, eq_piv = rref(eqs, n)
    lin_can, lin_piv = rref(lin, n)
    cands = [(b, frozenset(i for i, r in enumerate(rays) if dot(b, r) == 0)) for b in inequalities if any(b)]
    keep = _maximal_sets(cands, len(rays))
    return _assemble(n, eqs, eq_piv, lin_can, lin_piv, [cands[i][0] for i in keep], rays)


def _full_from_v(n, rays, lineality) -> _Full:
    # facets of the cone are the extreme rays of its polar
    plin, prays = _double_description(n, list(lineality), list(rays))
    eqs, eq_piv = rref(plin, n)
    lin = nullspace(list(prays) + list(plin), n)
    lin, lin_piv = rref(lin, n)
    cands = [(r, frozenset(j for j, b in enumerate(prays) if dot(b, r) == 0)) for r in rays if any(r)]
    keep = _maximal_sets(cands, len(prays))
    return _assemble(n, eqs, eq_piv, lin, lin_piv, prays, [cands[i][0] for i in keep])


class Cone:
    """A polyhedral cone in ``Q^ambient_dim``; immutable.

    Use :func:`from_inequalities` or :func:`from_rays` to build one. The
    dual representation is computed the first time it is needed. The lazily
    filled cache is a single attribute assignment of an immutable record, so
    concurrent readers at worst compute the same value twice.
    """

    __slots__ = ("ambient_dim", "_h", "_v", "_full")

    def __init__(self, ambient_dim: int, h=None, v=None, full: _Full | None = None):
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        self.ambient_dim = ambient_dim
        self._h = h
        self._v = v
        self._full = full

    # -- representations -------------------------------------------------
    @property
    def full(self) -> _Full:
        if self._full is None:
            if self._h is not None:
                self._full = _full_from_h(self.ambient_dim, *self._h)
            else:
                self._full = _full_from_v(self.ambient_dim, *self._v)
        return self._full

    @property
    def equalities(self) -> tuple[IntVec, ...]:
        return self.full.equalities

    @property
    def inequalities(self) -> tuple[IntVec, ...]:
        return self.full.inequalities

    @property
    def rays(self) -> tuple[IntVec, ...]:
        return self.full.rays

    @property
    def lineality(self) -> tuple[IntVec, ...]:
        return self.full.lineality

    @property
    def dim(self) -> int:
        return self.full.dim

    def h_constraints(self) -> tuple[list[IntVec], list[IntVec]]:
        """Some valid H-representation, without forcing a dual conversion."""
        if self._full is not None:
            return list(self._full.equalities), list(self._full.inequalities)
        if self._h is not None:
            return list(self._h[0]), list(self._h[1])
        f = self.full
        return list(f.equalities), list(f.inequalities)

    def canonical_form(self):
        f = self.full
        return (f.n, f.lineality, f.rays)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.canonical_form() == other.canonical_form()

    def __hash__(self):
        return hash(self.canonical_form())

    def __repr__(self):
        if self._full is None and self._h is not None:
            return f"Cone(ambient_dim={self.ambient_dim}, equalities={self._h[0]}, inequalities={self._h[1]})"
        f = self.full
        return f"Cone(dim={f.dim}, rays={list(f.rays)}, lineality={list(f.lineality)})"

    def __contains__(self, point) -> bool:
        return contains(self, point)


def from_inequalities(ambient_dim: int, equalities: Iterable[Sequence] = (), inequalities: Iterable[Sequence] = ()) -> Cone:
    """Cone ``{a.x = 0 for a in equalities, b.x <= 0 for b in inequalities}``."""
    eqs = _as_int_rows(equalities, ambient_dim)
    ineqs = _as_int_rows(inequalities, ambient_dim)
    return Cone(ambient_dim, h=(eqs, ineqs))


def from_rays(ambient_dim: int, rays: Iterable[Sequence] = (), lineality: Iterable[Sequence] = ()) -> Cone:
    """Cone generated by ``rays`` plus the linear span of ``lineality``."""
    return Cone(ambient_dim, v=(_as_int_rows(rays, ambient_dim), _as_int_rows(lineality, ambient_dim)))


def dual_convert(c: Cone) -> Cone:
    """The same cone with both representations materialized."""
    return Cone(c.ambient_dim, full=c.full)


def _check_same_dim(a: Cone, b: Cone):
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {a.ambient_dim} != {b.ambient_dim}")


def intersect(a: Cone, b: Cone, *more: Cone) -> Cone:
    """Intersection of cones via concatenated H-representations."""
    cones = (a, b) + more
    for c in cones[1:]:
        _check_same_dim(a, c)
    eqs: list[IntVec] = []
    ineqs: list[IntVec] = []
    for c in cones:
        e, i = c.h_constraints()
        eqs.extend(e)
        ineqs.extend(i)
    return Cone(a.ambient_dim, h=(eqs, ineqs))


def dim(c: Cone) -> int:
    return c.dim


def relative_interior_point(c: Cone) -> IntVec:
    """Sum of the rays and lineality basis vectors; ``0`` only for ``{0}``."""
    f = c.full
    p = [0] * f.n
    for v in f.rays + f.lineality:
        p = [x + y for x, y in zip(p, v)]
    return tuple(p)


def facets(c: Cone) -> list[Cone]:
    """Faces of dimension ``dim(c) - 1``, in the order of the facet normals."""
    f = c.full
    return [from_rays(f.n, [f.rays[i] for i in sorted(inc)], f.lineality) for inc in f.incidence]


def contains(c: Cone, point: Sequence) -> bool:
    """Exact membership test against an H-representation."""
    point = tuple(point)
    if len(point) != c.ambient_dim:
        raise ValueError(f"point has length {len(point)}, expected {c.ambient_dim}")
    eqs, ineqs = c.h_constraints()
    return all(dot(a, point) == 0 for a in eqs) and all(dot(b, point) <= 0 for b in ineqs)


def is_subcone(a: Cone, b: Cone) -> bool:
    """``a`` is contained in ``b``."""
    _check_same_dim(a, b)
    fa = a.full
    eqs, ineqs = b.h_constraints()
    for r in fa.rays:
        if any(dot(e, r) for e in eqs) or any(dot(i, r) > 0 for i in ineqs):
            return False
    for l in fa.lineality:
        if any(dot(e, l) for e in eqs) or any(dot(i, l) for i in ineqs):
            return False
    return True


def canonical_form(c: Cone):
    return c.canonical_form()


# -- faces ------------------------------------------------------------------


def face_lattice(full: _Full) -> dict[frozenset, int]:
    """All faces of a cone keyed by their ray index sets, mapped to dimension.

    Works purely combinatorially from the facet-ray incidence: the facets of
    a face ``G`` are the inclusion-maximal proper sets ``G & S`` over facet
    ray sets ``S``.
    """
    top = frozenset(range(len(full.rays)))
    faces = {top: full.dim}
    level = [top]
    d = full.dim
    while level and d > len(full.lineality):
        d -= 1
        nxt: dict[frozenset, None] = {}
        for g in level:
            subs = {g & s for s in full.incidence if not g <= s}
            for s in subs:
                if not any(s < t for t in subs):
                    nxt.setdefault(s)
        for s in nxt:
            faces.setdefault(s, d)
        level = list(nxt)
    return faces


def f_vector(c: Cone) -> list[int]:
    """Face counts by dimension, starting at the lineality space."""
    faces = face_lattice(c.full)
    lo = len(c.full.lineality)
    counts = [0] * (c.dim - lo + 1)
    for d in faces.values():
        counts[d - lo] += 1
    return counts


# -- chambers ---------------------------------------------------------------


def _cut(full: _Full, b: IntVec) -> _Full:
    """``{x in C : b.x <= 0}`` for a hyperplane meeting the interior of C."""
    n = full.n
    rays = [list(r) for r in full.rays]
    lin = [list(l) for l in full.lineality]
    lvals = [dot(b, l) for l in lin]
    k = next((i for i, v in enumerate(lvals) if v), None)
    if k is not None:
        l0 = lin.pop(k)
        c = lvals.pop(k)
        if c > 0:
            l0 = [-x for x in l0]
            c = -c
        c = -c
        lin = [list(primitive(c * x + v * y for x, y in zip(l, l0))) for l, v in zip(lin, lvals)]
        new_rays = []
        for r in rays:
            v = dot(b, r)
            new_rays.append(list(primitive(c * x + v * y for x, y in zip(r, l0))) if v else r)
        new_rays.append(l0)
    else:
        masks = [0] * len(rays)
        for j, inc in enumerate(full.incidence):
            for i in inc:
                masks[i] |= 1 << j
        vals = [dot(b, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        new_rays = [rays[i] for i, v in enumerate(vals) if v <= 0]
        need = full.dim - len(lin) - 2
        for p in pos:
            for q in neg:
                s = masks[p] & masks[q]
                if s.bit_count() < need:
                    continue
                if any((masks[t] & s) == s for t in range(len(rays)) if t != p and t != q):
                    continue
                vp, vq = vals[p], -vals[q]
                new_rays.append(list(primitive(vp * y + vq * x for x, y in zip(rays[p], rays[q]))))
    lin_can, lin_piv = rref(lin, n) if lin else ([], [])
    new_rays = [tuple(r) for r in new_rays]
    normals = list(full.inequalities) + [tuple(b)]
    cands = [(v, frozenset(i for i, r in enumerate(new_rays) if dot(v, r) == 0)) for v in normals]
    keep = _maximal_sets(cands, len(new_rays))
    return _assemble(n, full.equalities, full.eq_pivots, lin_can, lin_piv, [cands[i][0] for i in keep], new_rays)


def _splits(full: _Full, b: IntVec) -> bool:
    if any(dot(b, l) for l in full.lineality):
        return True
    pos = neg = False
    for r in full.rays:
        v = dot(b, r)
        if v > 0:
            pos = True
        elif v < 0:
            neg = True
        if pos and neg:
            return True
    return False


def chamber_fulls(support: Cone, hyperplanes: Iterable[Sequence]) -> list[_Full]:
    """Maximal cells of ``support`` cut by ``hyperplanes`` (internal records)."""
    n = support.ambient_dim
    normals = _as_int_rows(hyperplanes, n)
    cells = [support.full]
    for b in normals:
        if not any(b):
            continue
        nb = tuple(-x for x in b)
        out = []
        for cell in cells:
            if _splits(cell, b):
                out.append(_cut(cell, b))
                out.append(_cut(cell, nb))
            else:
                out.append(cell)
        cells = out
    cells.sort(key=lambda f: (f.lineality, f.rays))
    return cells


def chambers(support: Cone, hyperplanes: Iterable[Sequence]) -> list[Cone]:
    """Closures of the regions of ``support`` minus the given hyperplanes.

    Each hyperplane is given by a normal vector. The result lists the cones
    of full dimension ``dim(support)``, sorted by canonical form. Cells are
    split incrementally: a hyperplane only touches the cells whose generators
    it separates.
    """
    return [Cone(support.ambient_dim, full=f) for f in chamber_fulls(support, hyperplanes)]


def point_in_full(full: _Full, point: Sequence) -> bool:
    return all(dot(a, point) == 0 for a in full.equalities) and all(dot(b, point) <= 0 for b in full.inequalities)
