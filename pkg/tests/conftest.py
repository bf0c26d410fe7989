import pytest

from qschur.hecke import AlgebraContext
from qschur.schur import SchurContext


@pytest.fixture(scope="session")
def ak22():
    return AlgebraContext(2, 2)


@pytest.fixture(scope="session")
def ak32():
    return AlgebraContext(3, 2)


@pytest.fixture(scope="session")
def ak23():
    return AlgebraContext(2, 3)


@pytest.fixture(scope="session")
def schur22():
    return SchurContext(2, 2, (2, 2))


@pytest.fixture(scope="session")
def schur21():
    return SchurContext(2, 1, (2,))
