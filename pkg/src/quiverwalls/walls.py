"""Semistable cones, the hyperplanes ``H_e`` and the walls ``W_e``.

All cones live in the ambient space ``Q^n`` of the quiver, so cones for
different dimension vectors can be intersected directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import polyhedral as ph
from .errors import PreconditionError
from .quiver import DimVector, Quiver, is_indivisible, is_subdim, iter_multiples, sub, subdim_vectors
from .schofield import session

__all__ = [
    "WallTable",
    "stability_space",
    "sst_cone",
    "hyperplane_H",
    "wall",
    "all_walls",
    "wall_bar",
    "has_strictly_semistables",
    "codim_one_walls",
]


def _dimvec(q: Quiver, d: Sequence[int], name: str = "d") -> DimVector:
    d = tuple(d)
    if len(d) != q.n:
        raise ValueError(f"{name}={d} has length {len(d)}, quiver has {q.n} vertices")
    if any(x < 0 for x in d):
        raise ValueError(f"{name}={d} has a negative entry")
    return d


def _nonzero(q: Quiver, d: Sequence[int]) -> DimVector:
    d = _dimvec(q, d)
    if not any(d):
        raise PreconditionError("dimension vector must be nonzero")
    return d


def _proper_sub(q: Quiver, d: DimVector, e: Sequence[int]) -> DimVector:
    e = _dimvec(q, e, "e")
    if not any(e):
        raise PreconditionError("e must be nonzero")
    if e == d:
        raise PreconditionError("e must be a proper subdimension vector")
    if not is_subdim(e, d):
        raise PreconditionError(f"e={e} is not a subdimension vector of d={d}")
    return e


def stability_space(q: Quiver, d: Sequence[int]) -> ph.Cone:
    """``C(d) = {theta : theta . d = 0}``."""
    d = _nonzero(q, d)
    return ph.dual_convert(ph.from_inequalities(q.n, [d], []))


def sst_cone(q: Quiver, d: Sequence[int]) -> ph.Cone:
    """The semistable cone: ``theta . d = 0`` and ``theta . e <= 0`` for ``e -> d``."""
    d = _nonzero(q, d)
    s = session(q)

    def build():
        ineqs = [e for e in s.generic_subdims(d) if any(e) and e != d]
        return ph.dual_convert(ph.from_inequalities(q.n, [d], ineqs))

    return s.memo(("sst", d), build)


def hyperplane_H(q: Quiver, d: Sequence[int], e: Sequence[int]) -> ph.Cone:
    """``H_e = C(d) & C(e)``."""
    d = _nonzero(q, d)
    e = _dimvec(q, e, "e")
    if not any(e):
        raise PreconditionError("e must be nonzero")
    return ph.dual_convert(ph.from_inequalities(q.n, [d, e], []))


def wall(q: Quiver, d: Sequence[int], e: Sequence[int]) -> ph.Cone:
    """``W_e = Sigma(e) & Sigma(d - e)`` for a nonzero proper ``e <= d``."""
    d = _nonzero(q, d)
    e = _proper_sub(q, d, e)
    f = sub(d, e)
    key = min(e, f)
    s = session(q)
    return s.memo(("wall", d, key), lambda: ph.dual_convert(ph.intersect(sst_cone(q, e), sst_cone(q, f))))


@dataclass(frozen=True)
class WallTable:
    """Walls of ``(Q, d)`` keyed by the lexicographically smaller of ``e, d - e``."""

    d: DimVector
    ambient_dim: int
    entries: dict[DimVector, ph.Cone]

    def __iter__(self):
        return iter(self.entries.items())

    def __len__(self):
        return len(self.entries)

    def containing(self, theta: Sequence) -> list[DimVector]:
        return [e for e, w in self.entries.items() if ph.contains(w, theta)]


def all_walls(q: Quiver, d: Sequence[int], progress: Callable[[int, int], None] | None = None) -> WallTable:
    """``W_e`` for every nonzero proper ``e <= d``, one entry per pair ``{e, d - e}``.

    ``progress(done, total)`` is called after each wall if given.
    """
    d = _nonzero(q, d)
    keys = [e for e in subdim_vectors(d, proper=True, nonzero=True) if e <= sub(d, e)]
    entries = {}
    for i, e in enumerate(keys):
        entries[e] = wall(q, d, e)
        if progress is not None:
            progress(i + 1, len(keys))
    return WallTable(d, q.n, entries)


def wall_bar(q: Quiver, d: Sequence[int], e: Sequence[int]) -> list[ph.Cone]:
    """Walls ``W_{ke}`` (``k >= 1``, ``ke`` proper) of codimension one in ``Sigma(d)``."""
    d = _nonzero(q, d)
    e = _dimvec(q, e, "e")
    if not any(e):
        raise PreconditionError("e must be nonzero")
    if not is_indivisible(e):
        raise PreconditionError(f"e={e} is divisible")
    target = sst_cone(q, d).dim - 1
    out = []
    for _, ke in iter_multiples(e, d):
        if ke == d:
            continue
        w = wall(q, d, ke)
        if w.dim == target:
            out.append(w)
    return out


def codim_one_walls(q: Quiver, d: Sequence[int]) -> dict[DimVector, ph.Cone]:
    """Entries of :func:`all_walls` whose dimension is ``dim Sigma(d) - 1``."""
    d = _nonzero(q, d)
    target = sst_cone(q, d).dim - 1
    return {e: w for e, w in all_walls(q, d) if w.dim == target}


def has_strictly_semistables(q: Quiver, d: Sequence[int], theta: Sequence) -> bool:
    """Whether ``theta`` lies on some wall ``W_e``."""
    d = _nonzero(q, d)
    theta = tuple(theta)
    if len(theta) != q.n:
        raise ValueError(f"theta has length {len(theta)}, quiver has {q.n} vertices")
    if sum(t * x for t, x in zip(theta, d)) != 0:
        raise PreconditionError("theta . d must be 0")
    return bool(all_walls(q, d).containing(theta))
