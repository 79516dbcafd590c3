import pytest

from tracespaces import GridSpec, QuadratureMesh, build_system


@pytest.fixture(scope="session")
def grid():
    return GridSpec(1.0, 1024)


@pytest.fixture(scope="session")
def system():
    return build_system(8)


@pytest.fixture(scope="session")
def mesh(grid):
    return QuadratureMesh.for_band(grid, 24.0)
