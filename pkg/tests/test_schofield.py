from itertools import product

import pytest

from quiverwalls.quiver import build_quiver, euler_form, subdim_vectors
from quiverwalls.schofield import (
    ext_generic,
    generic_subdims,
    is_generic_subdim,
    is_schur_root,
    session,
)


def a2_oracle(d):
    # a general map k^a -> k^b has rank min(a, b); a subspace of dim e0
    # meets its kernel in dimension max(0, e0 - (a - rank))
    a, b = d
    kernel = a - min(a, b)
    return {(e0, e1) for e0 in range(a + 1) for e1 in range(b + 1) if e1 >= max(0, e0 - kernel)}


@pytest.mark.parametrize("d", list(product(range(4), repeat=2)))
def test_a2_matches_rank_argument(d):
    q = build_quiver(2, [(0, 1, 1)])
    assert set(generic_subdims(q, d)) == a2_oracle(d)


def subspace_oracle(k):
    # k general lines in a plane: a line through the origin contains at most one of them
    out = set()
    for s in product((0, 1), repeat=k):
        out.add(s + (2,))
        if sum(s) <= 1:
            out.add(s + (1,))
        if sum(s) == 0:
            out.add(s + (0,))
    return out


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_subspace_quiver_lines_in_general_position(k):
    q = build_quiver(k + 1, [(i, k, 1) for i in range(k)])
    d = (1,) * k + (2,)
    gen = generic_subdims(q, d)
    assert set(gen) == subspace_oracle(k)
    if k == 6:
        assert len(gen) == 72


def test_kronecker(kronecker3):
    assert generic_subdims(kronecker3, (1, 1)) == ((0, 0), (0, 1), (1, 1))
    assert ext_generic(kronecker3, (1, 0), (0, 1)) == 3
    assert ext_generic(kronecker3, (0, 1), (1, 0)) == 0
    assert ext_generic(kronecker3, (2, 0), (0, 1)) == 6
    assert is_schur_root(kronecker3, (1, 1))


def test_graded_lex_order(double_a3):
    q, d = double_a3
    gen = generic_subdims(q, d)
    assert list(gen) == sorted(gen, key=lambda v: (sum(v), v))
    assert gen[0] == (0, 0, 0) and gen[-1] == d


def test_schofield_recursion_holds(cycle):
    q, d = cycle
    gen = set(generic_subdims(q, d))
    for e in subdim_vectors(d):
        rec = all(euler_form(q, f, tuple(a - b for a, b in zip(d, e))) >= 0 for f in generic_subdims(q, e))
        assert (e in gen) == rec


def test_is_generic_subdim_requires_subvector(kronecker3):
    assert is_generic_subdim(kronecker3, (0, 1), (1, 1))
    assert not is_generic_subdim(kronecker3, (1, 0), (1, 1))
    with pytest.raises(ValueError):
        is_generic_subdim(kronecker3, (2, 0), (1, 1))


def test_schur_roots():
    a2 = build_quiver(2, [(0, 1, 1)])
    assert is_schur_root(a2, (1, 1))
    assert not is_schur_root(a2, (1, 2))
    assert not is_schur_root(build_quiver(2, []), (1, 1))
    assert is_schur_root(a2, (1, 0))
    with pytest.raises(ValueError):
        is_schur_root(a2, (0, 0))


def test_session_is_shared(kronecker3):
    s = session(kronecker3)
    assert session(kronecker3) is s
    generic_subdims(kronecker3, (2, 2))
    assert (2, 2) in s._generic
