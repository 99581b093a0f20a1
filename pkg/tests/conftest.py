import pytest

from pushfwd import HyperellipticCurve


@pytest.fixture(scope="session")
def elliptic_curve():
    # y^2 = x^3 + x + 1 over F_5, genus 1
    return HyperellipticCurve(5, [1, 1, 0, 1])


@pytest.fixture(scope="session")
def genus2_curve():
    # y^2 = x^5 + x over F_5
    return HyperellipticCurve(5, [0, 1, 0, 0, 0, 1])


@pytest.fixture(scope="session")
def genus3_curve():
    # y^2 = x^7 + x^4 + 2x + 1 over F_7
    return HyperellipticCurve(7, [1, 2, 0, 0, 1, 0, 0, 1])
