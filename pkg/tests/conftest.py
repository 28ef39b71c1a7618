import pytest

from kldiamond import KLContext, build_system


@pytest.fixture(scope="session")
def A2():
    return build_system("A2")


@pytest.fixture(scope="session")
def A3():
    return build_system("A3")


@pytest.fixture(scope="session")
def A4():
    return build_system("A4")


@pytest.fixture(scope="session")
def D4():
    return build_system("D4")


@pytest.fixture(scope="session")
def kl_A2(A2):
    return KLContext(A2)


@pytest.fixture(scope="session")
def kl_A3(A3):
    return KLContext(A3)


@pytest.fixture(scope="session")
def kl_D4(D4):
    return KLContext(D4)


@pytest.fixture(scope="session")
def worked(A3):
    """The A3 interval [t, tsut] with s, t, u = generators 1, 2, 3."""
    return A3.parse_word("2"), A3.parse_word("2 1 3 2")

