import pytest

from core.config import get_settings
from core.constructions import get_construction


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def pauli2():
    return get_construction("pauli", n=2)


@pytest.fixture(scope="session")
def pauli3():
    return get_construction("pauli", n=3)


@pytest.fixture(scope="session")
def grassmann3():
    return get_construction("grassmann-z2", k=3)


@pytest.fixture(scope="session")
def minimal_non_set():
    return get_construction("minimal-non-set-grading")


@pytest.fixture(scope="session")
def non_realizable():
    return get_construction("non-realizable-set-grading")


@pytest.fixture(scope="session")
def kronecker24():
    return get_construction("kronecker", n1=2, n2=4)
