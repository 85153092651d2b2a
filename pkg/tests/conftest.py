import pytest

from tilejordan import DigitalSpace, build_hexagonal_window, build_square_window, build_triangular_window


@pytest.fixture(scope="session")
def square9():
    return DigitalSpace(build_square_window(9, 9))


@pytest.fixture(scope="session")
def square5():
    return DigitalSpace(build_square_window(5, 5))


@pytest.fixture(scope="session")
def hex3():
    return DigitalSpace(build_hexagonal_window(3))


@pytest.fixture(scope="session")
def tri6():
    return DigitalSpace(build_triangular_window(6))
