"""Quivers, the Euler form, and dimension-vector utilities.

Vertices are numbered ``0 .. n-1``. Parallel arrows are aggregated into an
``n x n`` multiplicity matrix, which is all the Euler form ever needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Iterator, Sequence

DimVector = tuple[int, ...]
StabParam = tuple[Fraction, ...]


@dataclass(frozen=True)
class Quiver:
    """A finite quiver given by its arrow multiplicity matrix.

    ``arrows[i][j]`` is the number of arrows ``i -> j``. Loops and oriented
    cycles are allowed.
    """

    n: int
    arrows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a quiver needs at least one vertex")
        if len(self.arrows) != self.n or any(len(row) != self.n for row in self.arrows):
            raise ValueError(f"arrow matrix must be {self.n}x{self.n}")
        if any(m < 0 for row in self.arrows for m in row):
            raise ValueError("arrow multiplicities must be nonnegative")

    def euler_matrix(self) -> tuple[tuple[int, ...], ...]:
        """``I - A``, so that ``<x, y> = x^T (I - A) y``."""
        return tuple(
            tuple((1 if i == j else 0) - self.arrows[i][j] for j in range(self.n)) for i in range(self.n)
        )

    def arrow_list(self) -> list[tuple[int, int, int]]:
        return [(i, j, m) for i, row in enumerate(self.arrows) for j, m in enumerate(row) if m]


def build_quiver(n: int, arrows: Iterable[Sequence[int]]) -> Quiver:
    """Quiver on ``n`` vertices from ``(source, target, multiplicity)`` triples.

    Repeated ``(source, target)`` pairs accumulate.
    """
    if n < 1:
        raise ValueError("a quiver needs at least one vertex")
    mat = [[0] * n for _ in range(n)]
    for entry in arrows:
        s, t, m = entry
        if not (0 <= s < n and 0 <= t < n):
            raise ValueError(f"arrow ({s}, {t}) has a vertex index out of range 0..{n - 1}")
        if m < 1:
            raise ValueError(f"arrow ({s}, {t}) has multiplicity {m} < 1")
        mat[s][t] += m
    return Quiver(n, tuple(tuple(row) for row in mat))


def _check_len(q: Quiver, *vecs: Sequence) -> None:
    for v in vecs:
        if len(v) != q.n:
            raise ValueError(f"vector {tuple(v)} has length {len(v)}, quiver has {q.n} vertices")


def euler_form(q: Quiver, x: Sequence[int], y: Sequence[int]) -> int:
    """``<x, y> = sum_i x_i y_i - sum_{a: i -> j} x_i y_j``."""
    _check_len(q, x, y)
    total = sum(a * b for a, b in zip(x, y))
    for i, row in enumerate(q.arrows):
        if x[i]:
            total -= x[i] * sum(m * yj for m, yj in zip(row, y))
    return total


def canonical_stability(q: Quiver, d: Sequence[int]) -> StabParam:
    """``theta_d`` with ``theta_d(f) = <d, f> - <f, d>``."""
    _check_len(q, d)
    if not any(d):
        raise ValueError("canonical stability needs a nonzero dimension vector")
    n = q.n
    out = []
    for i in range(n):
        # <d, u_i> - <u_i, d> = sum_j d_j (A[i][j] - A[j][i])
        out.append(Fraction(sum(d[j] * (q.arrows[i][j] - q.arrows[j][i]) for j in range(n))))
    return tuple(out)


def pair(theta: Sequence, e: Sequence) -> Fraction:
    """``theta(e)``: the dot product."""
    if len(theta) != len(e):
        raise ValueError(f"length mismatch: {len(theta)} != {len(e)}")
    return Fraction(sum(Fraction(t) * x for t, x in zip(theta, e)))


def grlex_key(v: Sequence[int]):
    return (sum(v), tuple(v))


def subdim_vectors(d: Sequence[int], proper: bool = False, nonzero: bool = False) -> list[DimVector]:
    """All ``e`` with ``0 <= e <= d``, in graded lexicographic order."""
    d = tuple(d)
    out = []
    for e in product(*(range(x + 1) for x in d)):
        if proper and e == d:
            continue
        if nonzero and not any(e):
            continue
        out.append(e)
    out.sort(key=grlex_key)
    return out


def is_subdim(e: Sequence[int], d: Sequence[int]) -> bool:
    return all(0 <= a <= b for a, b in zip(e, d))


def is_indivisible(d: Sequence[int]) -> bool:
    return gcd(*d) == 1


def sub(d: Sequence[int], e: Sequence[int]) -> DimVector:
    return tuple(a - b for a, b in zip(d, e))


def scale(k: int, v: Sequence[int]) -> DimVector:
    return tuple(k * x for x in v)


def iter_multiples(e: DimVector, d: DimVector) -> Iterator[tuple[int, DimVector]]:
    """``(k, k*e)`` for ``k >= 1`` while ``k*e <= d``."""
    k = 1
    while True:
        ke = scale(k, e)
        if not is_subdim(ke, d):
            return
        yield k, ke
        k += 1
