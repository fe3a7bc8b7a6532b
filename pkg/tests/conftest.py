import pytest

from quiverwalls.quiver import build_quiver

# 0-based (source, target, multiplicity) triples
DOUBLE_A3 = ([(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1)], 3)
CYCLE = ([(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 2, 1), (0, 3, 1)], 4)
FLAG = ([(0, 1, 3), (1, 2, 1)], 3)
NONFLAG = ([(0, 1, 2), (0, 2, 3)], 3)
SEGRE = ([(i, 6, 1) for i in range(6)], 7)


def make(shape):
    arrows, n = shape
    return build_quiver(n, arrows)


@pytest.fixture
def double_a3():
    return make(DOUBLE_A3), (1, 1, 1)


@pytest.fixture
def cycle():
    return make(CYCLE), (1, 1, 1, 1)


@pytest.fixture
def flag():
    return make(FLAG)


@pytest.fixture
def kronecker3():
    return build_quiver(2, [(0, 1, 3)])


def fan_axiom_violations(fan, support):
    """Problems with ``fan`` as a fan with the given support; empty if none."""
    from quiverwalls import polyhedral as ph

    problems = []
    index = {c.rays: i for i, c in enumerate(fan.cones)}
    cones = [fan.cone(i) for i in range(len(fan.cones))]
    for i, c in enumerate(cones):
        if c.dim != fan.cones[i].dim:
            problems.append(f"cone {i} has wrong dimension")
        for f in ph.facets(c) if c.dim > len(fan.lineality) else []:
            ids = tuple(sorted(fan.rays.index(r) for r in f.rays))
            if ids not in index:
                problems.append(f"facet {ids} of cone {i} missing")
    top = [i for i in fan.maximal_cones]
    for a in range(len(top)):
        for b in range(a + 1, len(top)):
            ca, cb = cones[top[a]], cones[top[b]]
            meet = ph.intersect(ca, cb)
            common = tuple(sorted(set(fan.cones[top[a]].rays) & set(fan.cones[top[b]].rays)))
            if common not in index or meet != cones[index[common]]:
                problems.append(f"cones {top[a]} and {top[b]} meet badly")
    hull = ph.from_rays(fan.ambient_dim, fan.rays, fan.lineality)
    union_dim_ok = all(ph.is_subcone(cones[i], support) for i in top)
    if not union_dim_ok or hull != support:
        problems.append("support differs")
    return problems


@pytest.fixture
def check_fan():
    return fan_axiom_violations


ACCEPTANCE: dict[int, tuple[str, float, float]] = {}


def pytest_runtest_makereport(item, call):
    crit = getattr(item.function, "criterion", None)
    if crit is None or call.when != "call":
        return
    budget = item.function.budget
    status = "PASS" if call.excinfo is None else "FAIL"
    ACCEPTANCE[crit] = (status, call.duration, budget)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        status, took, budget = ACCEPTANCE[crit]
        terminalreporter.write_line(f"criterion {crit}: {status} ({took:.2f} s, budget {budget:g} s)")
