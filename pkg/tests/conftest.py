import pytest

from conicnets.gf import field


@pytest.fixture(scope="session")
def gf2():
    return field(2)


@pytest.fixture(scope="session")
def gf4():
    return field(4)


@pytest.fixture(scope="session")
def gf8():
    return field(8)


@pytest.fixture(scope="session")
def gf16():
    return field(16)
