"""Shared fixtures for the test suites."""
from pathlib import Path

import pytest

from spinekit.services.ograph_builder import ograph_builder
from spinekit.services.ograph_io import load_fixture, parse_ograph
from spinekit.services.triangulate import triangulator

FIXTURES = Path(__file__).parent / "spinekit" / "fixtures"

ONE_VERTEX = """ograph v1
vertices 1
vertex 0 over 02
edge 0.0 0.1 color 0
edge 0.2 0.3 color 0
"""

# Two tetrahedra glued face to face by the identity: S^3 minus four balls
DOUBLED_TET = """tri v1
tets 2
glue 0.0 1.0 perm 123
glue 0.1 1.1 perm 023
glue 0.2 1.2 perm 013
glue 0.3 1.3 perm 012
"""


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def g5_graph():
    return load_fixture("g5", FIXTURES)


@pytest.fixture(scope="session")
def g9_graph():
    return load_fixture("g9", FIXTURES)


@pytest.fixture(scope="session")
def g5_tri(g5_graph):
    return triangulator.from_ograph(g5_graph)


@pytest.fixture(scope="session")
def g9_tri(g9_graph):
    return triangulator.from_ograph(g9_graph)


@pytest.fixture(scope="session")
def drawn_tri():
    return triangulator.from_ograph(load_fixture("g9_drawn", FIXTURES))


@pytest.fixture(scope="session")
def one_vertex_tri():
    """Single crossing with two loops, both colored 0."""
    return triangulator.from_ograph(parse_ograph(ONE_VERTEX))


@pytest.fixture(scope="session")
def doubled_tet():
    return triangulator.parse_triangulation(DOUBLED_TET)


@pytest.fixture(scope="session")
def random_population():
    """(seed, triangulation) for 120 seeded random o-graphs with 1..6 vertices."""
    return [
        (seed, triangulator.from_ograph(ograph_builder.random_ograph(1 + seed % 6, seed)))
        for seed in range(120)
    ]
