import pytest

from dicksonnf import make_field, make_nearfield


@pytest.fixture(scope="session")
def f9():
    # F_9 with the modulus x^2+1, matching the classical DN(3,2) presentation
    return make_field(3, 2, modulus=(1, 0, 1))


@pytest.fixture(scope="session")
def ctx32():
    return make_nearfield(3, 2, modulus=(1, 0, 1))


@pytest.fixture(scope="session")
def ctx54():
    return make_nearfield(5, 4, modulus=(2, 0, 0, 0, 1), generator=(2, 1))


@pytest.fixture(scope="session")
def ctx43():
    return make_nearfield(4, 3)


@pytest.fixture(scope="session")
def ctx58():
    return make_nearfield(5, 8)
