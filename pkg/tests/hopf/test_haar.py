import pytest

from qflag.errors import PresentationError
from qflag.freealg import tensor
from qflag.hopf import (
    HaarFamily, averaging, canonical_map, check_coideal, check_gauge, check_haar,
    conditional_expectation, left_invariance_defect, retraction_defect, second_leg_parts,
)
from qflag.scalars import Q, scalar


def product(algebra, *symbols):
    result = algebra.unit()
    for symbol in symbols:
        result = result * algebra.element(symbol)
    return algebra.normal_form(result)


# Fixtures ####################################################################

@pytest.fixture(scope='module')
def H(symbolic):
    return symbolic.presentation('Uq2')


@pytest.fixture(scope='module')
def h(symbolic):
    return symbolic.haar_functional('Uq2')


# Tests #######################################################################

def test_family_match():
    family = HaarFamily((3, 4), 'q^n')
    assert family.match((3, 3, 4, 4)) == 2
    assert family.match(()) == 0
    assert family.match((3, 4, 3, 4)) is None
    assert family.match((3, 3, 4)) is None

    unit = HaarFamily((), '1')
    assert unit.match(()) == 0
    assert unit.match((1,)) is None


def test_haar_values(H, h):
    assert h(H.unit()) == 1
    assert h(H.element('u')) == 0
    assert h(H.element('gamma')) == 0
    assert h(product(H, 'gamma', 'gamma*')) == scalar(1, Q ** 2 + 1)
    assert h(product(H, 'gamma', 'gamma', 'gamma*', 'gamma*')) == scalar(1, Q ** 4 + Q ** 2 + 1)


def test_haar_normalizes_first(H, h):
    assert h(H.element('alpha') * H.element('alpha*')) == scalar(1, Q ** 2 + 1)
    assert h(H.element('alpha*') * H.element('alpha')) == scalar(Q ** 2, Q ** 2 + 1)
    assert h(H.element('gamma*') * H.element('gamma')) == scalar(1, Q ** 2 + 1)


def test_haar_wrong_algebra(symbolic, h):
    with pytest.raises(PresentationError):
        h(symbolic.presentation('T1').element('u'))


def test_apply_to_leg(H, h):
    t = tensor(H.element('u'), product(H, 'gamma', 'gamma*')) + tensor(H.element('u*'), H.element('alpha'))
    assert h.apply_to_leg(t) == H.element('u').scale(scalar(1, Q ** 2 + 1))
    assert h.apply_to_leg(t, leg=0) == H.element('alpha').scale(0)


def test_left_invariance(symbolic, H, h):
    hopf = symbolic.hopf_structure('Uq2')
    assert not left_invariance_defect(hopf, h, product(H, 'gamma', 'gamma*'))
    assert not left_invariance_defect(hopf, h, product(H, 'alpha', 'gamma*'))


@pytest.mark.parametrize('name', ['T1', 'T2', 'SUq2', 'Uq2'])
def test_check_haar(catalog, name):
    result = check_haar(catalog.hopf_structure(name), catalog.haar_functional(name), length=2)
    assert result.passed, result.residue


def test_gauge(catalog):
    result = check_gauge(catalog.hopf_structure('SUq3'), catalog.map('pihat0'), length=2)
    assert result.passed, result.residue


def test_conditional_expectation(suq3):
    flag = product(suq3, 'u11', 'u22', 'u33')
    assert conditional_expectation(flag) == flag
    assert not conditional_expectation(suq3.element('u11'))
    assert conditional_expectation(suq3.element('u11') + flag) == flag


def test_coaction(catalog, suq3, uq2):
    hopf = catalog.hopf_structure('SUq3')
    pi = catalog.map('pi')
    u21 = suq3.element('u21')
    assert hopf.coaction(u21, pi) == tensor(u21, uq2.element('u'))
    assert canonical_map(hopf, suq3.unit(), u21, pi) == tensor(u21, uq2.element('u'))
    assert canonical_map(hopf, suq3.element('u11'), u21, pi) == \
        tensor(product(suq3, 'u11', 'u21'), uq2.element('u'))


def test_left_coaction(catalog, suq3, uq2):
    hopf = catalog.hopf_structure('SUq3')
    u21 = suq3.element('u21')
    left = hopf.left_coaction(u21, catalog.map('pi'), catalog.hopf_structure('Uq2'))
    assert left == tensor(uq2.element('u*'), u21)


def test_retraction(catalog, suq3):
    hopf = catalog.hopf_structure('SUq3')
    target = catalog.hopf_structure('Uq2')
    for symbol in ('u11', 'u22', 'u23'):
        assert not retraction_defect(hopf, suq3.element(symbol), catalog.map('pi'), target)


def test_second_leg_parts(catalog, suq3, uq2):
    t = tensor(suq3.element('u21'), uq2.element('u')) + tensor(suq3.element('u31'), uq2.element('u'))
    assert second_leg_parts(t) == {((suq3.letter('u21'),),): uq2.element('u'),
                                   ((suq3.letter('u31'),),): uq2.element('u')}


def test_averaging(catalog, suq3):
    hopf = catalog.hopf_structure('SUq3')
    pi = catalog.map('pi')
    haar = catalog.haar_functional('Uq2')
    assert averaging(hopf, suq3.unit(), pi, haar) == 1
    assert not averaging(hopf, suq3.element('u11'), pi, haar)


def test_coideal(catalog, uq2):
    result = check_coideal(catalog.hopf_structure('Uq2'), catalog.subalgebra('CP1q'),
                           [product(uq2, 'gamma', 'gamma*'), product(uq2, 'alpha', 'gamma*')])
    assert result.passed, result.residue
    assert result.assertions > 2
