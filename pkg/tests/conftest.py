import random

import pytest

from kempfness import fixtures
from kempfness.polytope import facet_nerve
from kempfness.simplicial import SimplicialComplex, from_maximal_faces

CUT_CUBE_NON_FACES = [
    (1, 4), (1, 7), (2, 4), (2, 5), (2, 8), (3, 6), (3, 8), (5, 6), (5, 7), (7, 8),
]

RP2_FACES = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
]


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    monkeypatch.setenv("KEMPFNESS_CACHE_DIR", str(tmp_path_factory.getbasetemp() / "cache"))


@pytest.fixture(scope="session")
def cut_cube():
    return fixtures.cut_cube()


@pytest.fixture(scope="session")
def cut_cube_complex(cut_cube):
    return facet_nerve(cut_cube)


@pytest.fixture
def triangle_boundary():
    return from_maximal_faces(3, [[1, 2], [2, 3], [1, 3]])


@pytest.fixture
def three_points():
    return from_maximal_faces(3, [[1], [2], [3]])


@pytest.fixture
def octahedron():
    return from_maximal_faces(6, [[a, b, c] for a in (1, 4) for b in (2, 5) for c in (3, 6)])


@pytest.fixture
def rp2():
    return from_maximal_faces(6, RP2_FACES)


def random_complex(rng: random.Random, m: int) -> SimplicialComplex:
    """A random complex on [m] from a handful of random faces (ghosts allowed)."""
    faces = []
    for _ in range(rng.randint(0, 2 * m)):
        size = rng.randint(1, min(m, 4))
        faces.append(rng.sample(range(1, m + 1), size))
    return from_maximal_faces(m, faces)


# one pass/fail line per acceptance criterion in the terminal summary
_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
