"""Generic subdimension vectors, generic ext, and Schur roots.

``e`` is a generic subdimension vector of ``d`` (written ``e -> d``) iff
``<f, d - e> >= 0`` for every generic subdimension vector ``f`` of ``e``.
The recursion is evaluated bottom-up and memoized per quiver in a
:class:`Session`, which the cone, wall, fan and special-vector code all share.

Bottom-up evaluation is organised by the smaller vector: once ``gen(f)`` is
known, a single integer matrix product decides ``f -> e`` for every ``e >= f``
in the box below ``d`` at once.
"""

from __future__ import annotations

import threading
from typing import Callable, Sequence

import numpy as np

from .quiver import DimVector, Quiver, euler_form, grlex_key, is_subdim, sub, subdim_vectors

__all__ = [
    "Session",
    "session",
    "generic_subdims",
    "is_generic_subdim",
    "ext_generic",
    "is_schur_root",
]


class Session:
    """Per-quiver memo tables.

    Insertions happen under a lock; lookups of finished entries don't need
    one since values are immutable tuples.
    """

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self._euler = quiver.euler_matrix()
        self._generic: dict[DimVector, tuple[DimVector, ...]] = {}
        self._memo: dict[tuple, object] = {}
        self._lock = threading.RLock()

    def _compute_box(self, d: DimVector) -> None:
        n = len(d)
        # vectors of the box in mixed-radix order, so {e : f <= e <= d} is a sub-grid
        grid = np.indices([x + 1 for x in d]).reshape(n, -1).T
        strides = [1] * n
        for k in range(n - 2, -1, -1):
            strides[k] = strides[k + 1] * (d[k + 1] + 1)
        euler = np.array(self._euler, dtype=np.int64)
        # |<g, x>| <= n^2 * max|E| * max(d)^2; use exact Python ints if that could overflow
        if n * n * int(np.abs(euler).max(initial=1)) * max(d) ** 2 >= 2**62:
            grid = grid.astype(object)
            euler = euler.astype(object)
        below: list[list[DimVector]] = [[] for _ in range(len(grid))]
        for f in subdim_vectors(d):
            i = sum(x * s for x, s in zip(f, strides))
            gen_f = tuple(below[i]) + (f,)
            self._generic.setdefault(f, gen_f)
            supers = np.zeros(1, dtype=np.int64)
            for k in range(n):
                supers = np.add.outer(supers, np.arange(f[k], d[k] + 1) * strides[k]).ravel()
            supers = supers[1:]  # drop f itself, the first entry
            if not len(supers):
                continue
            # f -> e  iff  <g, e - f> >= 0 for all g -> f
            vals = (np.array(gen_f, dtype=grid.dtype) @ euler) @ (grid[supers] - grid[i]).T
            for j in supers[(vals >= 0).all(axis=0)]:
                below[j].append(f)

    def generic_subdims(self, d: Sequence[int]) -> tuple[DimVector, ...]:
        d = tuple(d)
        hit = self._generic.get(d)
        if hit is not None:
            return hit
        with self._lock:
            if d not in self._generic:
                self._compute_box(d)
            return self._generic[d]

    def memo(self, key: tuple, factory: Callable[[], object]):
        """Cached ``factory()`` under ``key``; used for cones built from ``(Q, d)``."""
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        value = factory()
        with self._lock:
            return self._memo.setdefault(key, value)


_sessions: dict[Quiver, Session] = {}
_sessions_lock = threading.Lock()


def session(q: Quiver) -> Session:
    """The shared :class:`Session` for ``q``."""
    s = _sessions.get(q)
    if s is None:
        with _sessions_lock:
            s = _sessions.setdefault(q, Session(q))
    return s


def _check(q: Quiver, *vecs: Sequence[int]) -> None:
    for v in vecs:
        if len(v) != q.n:
            raise ValueError(f"vector {tuple(v)} has length {len(v)}, quiver has {q.n} vertices")
        if any(x < 0 for x in v):
            raise ValueError(f"dimension vector {tuple(v)} has a negative entry")


def generic_subdims(q: Quiver, d: Sequence[int]) -> tuple[DimVector, ...]:
    """All ``e <= d`` with ``e -> d``, in graded lexicographic order.

    Always contains ``0`` and ``d``.

    >>> from quiverwalls.quiver import build_quiver
    >>> generic_subdims(build_quiver(2, [(0, 1, 3)]), (1, 1))
    ((0, 0), (0, 1), (1, 1))
    """
    _check(q, d)
    return session(q).generic_subdims(d)


def is_generic_subdim(q: Quiver, e: Sequence[int], d: Sequence[int]) -> bool:
    _check(q, e, d)
    if not is_subdim(e, d):
        raise ValueError(f"{tuple(e)} is not a subdimension vector of {tuple(d)}")
    return tuple(e) in set(session(q).generic_subdims(d))


def ext_generic(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """Generic ext: ``max(-<d', e>)`` over ``d' -> d``; never negative."""
    _check(q, d, e)
    return max(-euler_form(q, dp, e) for dp in session(q).generic_subdims(d))


def is_schur_root(q: Quiver, d: Sequence[int]) -> bool:
    """Every proper nonzero ``e -> d`` has ``<d, e> - <e, d> < 0``."""
    _check(q, d)
    d = tuple(d)
    if not any(d):
        raise ValueError("the zero vector is not a root")
    for e in session(q).generic_subdims(d):
        if not any(e) or e == d:
            continue
        if euler_form(q, d, e) - euler_form(q, e, d) >= 0:
            return False
    return True


def sorted_grlex(vectors):
    return sorted(vectors, key=grlex_key)
