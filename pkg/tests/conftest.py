import pytest

from spherecolour.generators import (
    corpus,
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    octahedron,
    simplex_boundary,
)


@pytest.fixture(scope="session")
def octa():
    return octahedron()


@pytest.fixture(scope="session")
def s3():
    """Boundary of the 4-simplex, a triangulation of the 3-sphere."""
    return simplex_boundary(3)


@pytest.fixture(scope="session")
def cross3():
    return cross_polytope_boundary(3)


@pytest.fixture(scope="session")
def c6():
    return cyclic_polytope_boundary(6)


@pytest.fixture(scope="session")
def instances():
    return corpus()
