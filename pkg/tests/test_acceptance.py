"""Acceptance gate: one test per criterion, exact comparisons, pinned time budgets.

Each test records its criterion number and budget; the terminal summary
prints one PASS/FAIL line per criterion.
"""

import time

import pytest

from quiverwalls import polyhedral as ph
from quiverwalls.gitfan import git_fan, has_geometric_phase
from quiverwalls.plotting import wall_diagram
from quiverwalls.quiver import build_quiver, canonical_stability, sub
from quiverwalls.special import special_subdims
from quiverwalls.walls import all_walls, codim_one_walls, sst_cone, stability_space, wall


def criterion(number, budget):
    def mark(fn):
        fn.criterion = number
        fn.budget = budget
        return fn

    return mark


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.fixture(autouse=True)
def cold_memo(monkeypatch):
    # equal quivers share memo tables; start every criterion from scratch so timings are honest
    from quiverwalls import schofield

    monkeypatch.setattr(schofield, "_sessions", {})


def fresh(n, arrows):
    return build_quiver(n, arrows)


def interior_codim_one(q, d):
    facets = ph.facets(sst_cone(q, d))
    return {e: w for e, w in codim_one_walls(q, d).items() if not any(ph.is_subcone(w, f) for f in facets)}


@criterion(1, 1.0)
def test_criterion_1_double_a3():
    with Clock() as clk:
        q = fresh(3, [(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1)])
        d = (1, 1, 1)
        table = all_walls(q, d)
        keys = {frozenset((e, sub(d, e))) for e, _ in table}
        assert len(keys) == 3
        assert wall(q, d, (1, 1, 0)).dim == 1
        assert wall(q, d, (0, 1, 1)).dim == 1
        assert wall(q, d, (1, 0, 1)).dim == 0
        assert sst_cone(q, d) == stability_space(q, d)
        assert git_fan(q, d).f_vector == (1, 4, 4)
    assert clk.elapsed < 1.0


R1, R2, R3, R4, R5 = (1, -1, 0, 0), (1, 0, 0, -1), (0, 0, 1, -1), (1, 0, -1, 0), (0, 1, -1, 0)
CYCLE_SPECIAL = {(0, 1, 0, 0), (0, 0, 1, 0), (0, 1, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1), (1, 1, 0, 1), (1, 0, 1, 1)}


@criterion(2, 5.0)
def test_criterion_2_cycle():
    with Clock() as clk:
        q = fresh(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 2, 1), (0, 3, 1)])
        d = (1, 1, 1, 1)
        assert sst_cone(q, d) == ph.from_rays(4, [R1, R3, R5])
        # walls inside Sigma(d), read at the level of the fan: r2 lies inside
        # W_(0,1,0,0) = cone(r3, r4) and splits it into two cells
        expected = [ph.from_rays(4, pair) for pair in [(R1, R2), (R2, R3), (R2, R5), (R2, R4)]]
        fan = git_fan(q, d)
        facets = ph.facets(sst_cone(q, d))
        cells = {
            fan.cone(i)
            for i, c in enumerate(fan.cones)
            if c.dim == 2 and not any(ph.is_subcone(fan.cone(i), f) for f in facets)
        }
        assert cells == set(expected)
        walls = interior_codim_one(q, d).values()
        for w in walls:
            assert ph.from_rays(4, [r for c in expected if ph.is_subcone(c, w) for r in c.rays]) == w
        for c in expected:
            assert any(ph.is_subcone(c, w) for w in walls)
        assert set(special_subdims(q, d)) == CYCLE_SPECIAL
    assert clk.elapsed < 5.0


@criterion(3, 5.0)
def test_criterion_3_flag():
    with Clock() as clk:
        q = fresh(3, [(0, 1, 3), (1, 2, 1)])
        diag = wall_diagram(q, (1, 2, 1), 0)
        assert set(diag.sigma_rays) == {(-1, 0), (0, -1)} and diag.sigma_lineality == ()
        assert set(diag.wall_rays) == set(diag.sigma_rays)

        d = (2, 4, 2)
        sigma = sst_cone(q, d)
        assert any(w == sigma for _, w in all_walls(q, d))
        assert not has_geometric_phase(q, d)

        d = (1, 1, 2)
        sigma = sst_cone(q, d)
        assert sigma.dim == 1 and len(sigma.rays) == 1
        assert any(ph.is_subcone(sigma, w) for _, w in all_walls(q, d))

        assert sst_cone(q, (1, 5, 7)).dim == 0
    assert clk.elapsed < 5.0


@criterion(4, 5.0)
def test_criterion_4_non_flag():
    with Clock() as clk:
        q = fresh(3, [(0, 1, 2), (0, 2, 3)])
        rays = set(wall_diagram(q, (2, 2, 3), 0).wall_rays)
        assert rays == {(-1, 0), (-3, -2), (-1, -2), (0, -1)}
    assert clk.elapsed < 5.0


MUTATIONS = [
    ([(0, 1, 3), (1, 2, 3), (2, 0, 3)], (1, 1, 1), {(0, 1), (-1, 0), (1, -1)}),
    ([(0, 1, 3), (1, 2, 3), (2, 0, 6)], (1, 2, 1), {(0, 1), (-1, 0), (0, -1), (1, -2)}),
    (
        [(0, 1, 6), (1, 2, 3), (2, 0, 15)],
        (1, 5, 2),
        {(0, 1), (-1, 0), (0, -1), (1, -3), (1, -2), (2, -5)},
    ),
    (
        [(0, 1, 15), (1, 2, 3), (2, 0, 39)],
        (1, 13, 5),
        {(0, 1), (-1, 0), (0, -1), (1, -3), (1, -2), (1, -1), (2, -5), (3, -7), (3, -8), (5, -13)},
    ),
]


@criterion(5, 30.0)
def test_criterion_5_mutation():
    with Clock() as clk:
        for arrows, d, expected in MUTATIONS:
            q = fresh(3, arrows)
            assert set(wall_diagram(q, d, 0).wall_rays) == expected
    assert clk.elapsed < 30.0


@criterion(6, 1800.0)
def test_criterion_6_segre():
    with Clock() as clk:
        q = fresh(7, [(i, 6, 1) for i in range(6)])
        d = (1, 1, 1, 1, 1, 1, 2)
        sigma = sst_cone(q, d)
        assert len(sigma.rays) == 15 and len(sigma.inequalities) == 12
        walls = interior_codim_one(q, d)
        assert len(walls) == 25
        theta = canonical_stability(q, d)
        assert theta == (2, 2, 2, 2, 2, 2, -6)
        assert sum(1 for w in walls.values() if theta in w) == 10
        assert git_fan(q, d).f_vector == (1, 142, 1455, 5200, 8310, 6102, 1678)
    assert clk.elapsed < 1800.0


@criterion(7, 1800.0)
def test_criterion_7_property_suite():
    import test_properties as props

    checks = [
        props.test_saturation,
        props.test_wall_symmetry,
        props.test_generic_wall_is_hyperplane_section,
        props.test_generic_iff_ext_vanishes,
        props.test_ext_linearity,
        props.test_phase_iff_schur_and_indivisible,
        props.test_fan_axioms_and_support,
        props.test_equivalence_matches_fan,
    ]
    for check in checks:
        check()


@criterion(8, 60.0)
def test_criterion_8_polyhedral_kernel():
    import test_polyhedral as kernel

    with Clock() as clk:
        kernel.test_round_trip_500_random_cones()
        kernel.test_mutual_validity_audit()
        kernel.test_extreme_rays_against_brute_force()
        for k in range(1, 6):
            kernel.test_simplicial_f_vector(k)
    assert clk.elapsed < 60.0
