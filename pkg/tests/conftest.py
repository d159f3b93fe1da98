import pytest

from treedet import orbit_decomposition
from treedet.context import standard_context


@pytest.fixture(scope="session")
def ctx2():
    return standard_context(2)


@pytest.fixture(scope="session")
def ctx3():
    return standard_context(3)


@pytest.fixture(scope="session")
def set3_all():
    from treedet import enumerate_partitions

    return enumerate_partitions(3, cycle_free=False)


@pytest.fixture(scope="session")
def orbits3(ctx3):
    return orbit_decomposition(ctx3.pset)
