import pytest

from quiverwalls import polyhedral as ph
from quiverwalls.errors import PreconditionError
from quiverwalls.quiver import build_quiver, subdim_vectors
from quiverwalls.schofield import generic_subdims
from quiverwalls.special import cone_C_e, special_subdims
from quiverwalls.walls import codim_one_walls, hyperplane_H, sst_cone

CYCLE_SPECIAL = {(0, 1, 0, 0), (0, 0, 1, 0), (0, 1, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1), (1, 1, 0, 1), (1, 0, 1, 1)}


def test_cycle_special(cycle):
    q, d = cycle
    assert set(special_subdims(q, d)) == CYCLE_SPECIAL


def test_double_a3_everything_special(double_a3):
    q, d = double_a3
    assert set(special_subdims(q, d)) == set(subdim_vectors(d, proper=True, nonzero=True))


def test_non_schur_root_has_none():
    assert special_subdims(build_quiver(2, []), (1, 1)) == ()


def test_special_excludes_generic(cycle, double_a3):
    for q, d in (cycle, double_a3):
        assert not set(special_subdims(q, d)) & set(generic_subdims(q, d))


def test_asymmetry(cycle):
    q, d = cycle
    sp = special_subdims(q, d)
    assert (0, 1, 0, 1) in sp and (1, 0, 1, 0) not in sp


def _interior_walls(q, d):
    facets = ph.facets(sst_cone(q, d))
    return {f: w for f, w in codim_one_walls(q, d).items() if not any(ph.is_subcone(w, g) for g in facets)}


def test_wall_hyperplanes_come_from_special(cycle, double_a3):
    # boundary walls come from generic vectors, which are never special
    for q, d in (cycle, double_a3):
        planes = {hyperplane_H(q, d, e) for e in special_subdims(q, d)}
        walls = _interior_walls(q, d)
        assert walls
        for f in walls:
            assert hyperplane_H(q, d, f) in planes


def test_special_hyperplane_need_not_carry_a_wall(cycle):
    q, d = cycle
    h = hyperplane_H(q, d, (0, 1, 0, 1))
    assert all(hyperplane_H(q, d, f) != h for f in codim_one_walls(q, d))


def test_cone_C_e_constraints(cycle, double_a3):
    q, d = cycle
    c = cone_C_e(q, d, (0, 1, 0, 1))
    assert c.ambient_dim == 4 and c.dim <= 3
    q1, d1 = double_a3
    c1 = cone_C_e(q1, d1, (1, 1, 0))
    assert all(sum(a * b for a, b in zip(r, (1, 1, 0))) <= 0 for r in c1.rays)


def test_cone_C_e_is_not_restricted_to_sigma(cycle):
    q, d = cycle
    # C_e can leave Sigma(d); the speciality test intersects the two
    c = cone_C_e(q, d, (1, 0, 0, 0))
    sigma = sst_cone(q, d)
    assert any(r not in sigma for r in c.rays)


@pytest.mark.parametrize("e", [(0, 0, 0, 0), (1, 1, 1, 1), (2, 0, 0, 0)])
def test_cone_C_e_preconditions(cycle, e):
    q, d = cycle
    with pytest.raises(PreconditionError):
        cone_C_e(q, d, e)


def test_zero_d(cycle):
    q, _ = cycle
    with pytest.raises(PreconditionError):
        special_subdims(q, (0, 0, 0, 0))
