"""Special subdimension vectors.

For a Schur root ``d``, a non-generic ``e <= d`` is special iff the cone
``C_e`` cut out by ``theta(e') <= 0`` (``e' -> e``) and ``theta(f' + e) <= 0``
(``f'`` a proper generic subdimension vector of ``d - e``) is not contained
in any of its defining hyperplanes.

The test is run on ``C_e & Sigma(d)`` rather than on ``C_e`` alone. A
theta-stable representation of dimension ``d`` forces ``theta`` into the
interior of ``Sigma(d)``, and without this restriction vectors such as
``e = (1,0,0,0)`` on the four-vertex cycle example pass even though ``d - e``
is itself generic.
"""

from __future__ import annotations

from typing import Sequence

from . import polyhedral as ph
from .linalg import dot
from .quiver import DimVector, Quiver, sub, subdim_vectors
from .schofield import is_schur_root, session
from .walls import _nonzero, _proper_sub, sst_cone

__all__ = ["cone_C_e", "special_subdims"]


def _defining_vectors(q: Quiver, d: DimVector, e: DimVector) -> list[DimVector]:
    s = session(q)
    f = sub(d, e)
    vecs = [ep for ep in s.generic_subdims(e) if any(ep)]
    vecs += [tuple(a + b for a, b in zip(fp, e)) for fp in s.generic_subdims(f) if fp != f]
    return list(dict.fromkeys(vecs))


def cone_C_e(q: Quiver, d: Sequence[int], e: Sequence[int]) -> ph.Cone:
    d = _nonzero(q, d)
    e = _proper_sub(q, d, e)
    return ph.dual_convert(ph.from_inequalities(q.n, [d], _defining_vectors(q, d, e)))


def _leaves_hyperplane(cone: ph.Cone, v: DimVector) -> bool:
    return any(dot(v, r) < 0 for r in cone.rays) or any(dot(v, l) for l in cone.lineality)


def special_subdims(q: Quiver, d: Sequence[int]) -> tuple[DimVector, ...]:
    """Special subdimension vectors of ``d`` in graded lexicographic order.

    Empty unless ``d`` is a Schur root.
    """
    d = _nonzero(q, d)
    if not is_schur_root(q, d):
        return ()
    generic = set(session(q).generic_subdims(d))
    support = sst_cone(q, d)
    out = []
    for e in subdim_vectors(d, proper=True, nonzero=True):
        if e in generic:
            continue
        cone = ph.intersect(cone_C_e(q, d, e), support)
        if all(_leaves_hyperplane(cone, v) for v in _defining_vectors(q, d, e)):
            out.append(e)
    return tuple(out)
