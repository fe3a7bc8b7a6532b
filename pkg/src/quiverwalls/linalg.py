"""Exact linear algebra over the integers and rationals.

Vectors are plain tuples of ``int`` (or ``Fraction`` where noted). Everything
here is fraction-free where possible so the polyhedral kernel never has to
touch floats or even ``Fraction`` in its inner loops.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

IntVec = tuple[int, ...]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Iterable[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    v = tuple(v)
    g = gcd(*v) if v else 0
    if g <= 1:
        return v
    return tuple(x // g for x in v)


def clear_denominators(v: Iterable) -> IntVec:
    """Positive multiple of a rational vector that is a primitive integer vector."""
    v = [Fraction(x) for x in v]
    m = lcm(*(x.denominator for x in v)) if v else 1
    return primitive(int(x * m) for x in v)


def sign_normalize(v: IntVec) -> IntVec:
    """Flip ``v`` so that its first nonzero entry is positive."""
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def echelon(rows: Iterable[Sequence[int]], n: int) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form (fraction-free), rows kept primitive.

    Returns the nonzero echelon rows and their pivot columns. The rows are
    *not* reduced above the pivots; see :func:`rref` for the canonical form.
    """
    mat = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    out: list[list[int]] = []
    col = 0
    while mat and col < n:
        piv = next((i for i, r in enumerate(mat) if r[col]), None)
        if piv is None:
            col += 1
            continue
        prow = mat.pop(piv)
        if prow[col] < 0:
            prow = [-x for x in prow]
        p = prow[col]
        rest = []
        for r in mat:
            c = r[col]
            if c:
                r = [p * a - c * b for a, b in zip(r, prow)]
                r = list(primitive(r))
            if any(r):
                rest.append(r)
        mat = rest
        out.append(prow)
        pivots.append(col)
        col += 1
    return out, pivots


def rank(rows: Iterable[Sequence[int]], n: int | None = None) -> int:
    rows = [tuple(r) for r in rows]
    if not rows:
        return 0
    if n is None:
        n = len(rows[0])
    return len(echelon(rows, n)[0])


def rref(rows: Iterable[Sequence[int]], n: int) -> tuple[list[IntVec], list[int]]:
    """Reduced row echelon form, each row scaled to a primitive integer vector.

    The pivot entry of every row is positive and every other row is zero in
    that column, so the result is a canonical basis of the row space.
    """
    ech, pivots = echelon(rows, n)
    for i in range(len(ech) - 1, -1, -1):
        pc = pivots[i]
        for j in range(i):
            c = ech[j][pc]
            if c:
                p = ech[i][pc]
                ech[j] = list(primitive(p * a - c * b for a, b in zip(ech[j], ech[i])))
                if ech[j][pivots[j]] < 0:
                    ech[j] = [-x for x in ech[j]]
    return [primitive(r) for r in ech], pivots


def reduce_modulo(v: Sequence[int], basis: Sequence[IntVec], pivots: Sequence[int]) -> IntVec:
    """Positive multiple of ``v`` with the pivot columns of an rref basis cleared.

    Two vectors that differ by an element of the span of ``basis`` reduce to
    parallel vectors, so ``primitive(reduce_modulo(...))`` is a canonical
    representative of the coset up to positive scaling.
    """
    v = list(v)
    for row, pc in zip(basis, pivots):
        c = v[pc]
        if c:
            p = row[pc]
            v = [p * a - c * b for a, b in zip(v, row)]
    return primitive(v)


def nullspace(rows: Iterable[Sequence[int]], n: int) -> list[IntVec]:
    """Canonical integer basis (rref, primitive) of ``{x : r.x = 0 for r in rows}``."""
    basis, pivots = rref(rows, n)
    free = [c for c in range(n) if c not in set(pivots)]
    vecs = []
    for f in free:
        # x_f = L, x_pivot = -L * row[f] / row[pivot]
        m = lcm(*(row[pc] for row, pc in zip(basis, pivots))) if basis else 1
        x = [0] * n
        x[f] = m
        for row, pc in zip(basis, pivots):
            x[pc] = -m * row[f] // row[pc]
        vecs.append(primitive(x))
    if not vecs:
        return []
    out, _ = rref(vecs, n)
    return out
