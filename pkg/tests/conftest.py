import pytest

from sympy import QQ

from qflag.presentations import build_standard_catalog

#: q-point of the specialized catalog shared by the tests
QPOINT = QQ(1, 3)


@pytest.fixture(scope='session')
def symbolic():
    return build_standard_catalog()


@pytest.fixture(scope='session')
def catalog(symbolic):
    return symbolic.specialize(QPOINT)


@pytest.fixture(scope='session')
def suq3(catalog):
    return catalog.presentation('SUq3')


@pytest.fixture(scope='session')
def uq2(catalog):
    return catalog.presentation('Uq2')