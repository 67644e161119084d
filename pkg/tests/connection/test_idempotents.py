import pytest

from qflag.connection import (
    CLOSED_FORMS, V2_LABELS, Comodule, ConnectionEll, IdempotentMatrix, build_idempotent,
    check_idempotent, check_idempotent_sum, closed_form_matrix, flag_generators, q1, q2, universal_d,
    v2_factor, v_element, w,
)
from qflag.errors import PresentationError
from qflag.freealg import multiply_legs
from qflag.scalars import Q, SYMBOLIC, scalar


# Fixtures ####################################################################

@pytest.fixture(scope='module')
def flag(catalog):
    return catalog.subalgebra('Flag')


# Tests #######################################################################

@pytest.mark.parametrize('name', ['V1', 'Vminus1', 'V2'])
def test_coidempotent(catalog, name):
    result = catalog.comodule(name).check_coidempotent()
    assert result.passed, result.residue


def test_comodules(catalog):
    assert len(catalog.comodule('V1')) == 1
    assert len(catalog.comodule('V2')) == 2
    assert len(catalog.comodule('V2').basis) == 6
    assert catalog.comodule('Vminus1').closed_form == 'qminus1'


def test_comodule_errors(catalog, uq2, suq3):
    hopf = catalog.hopf_structure('Uq2')
    with pytest.raises(PresentationError):
        Comodule('bad', hopf, suq3, [[uq2.element('u'), uq2.element('u*')]], [])

    with pytest.raises(PresentationError):
        Comodule('bad', hopf, suq3, [[uq2.element('u')]], [], closed_form='q7')


def test_q1_is_idempotent(suq3, flag):
    matrix = closed_form_matrix('q1', suq3, base=flag)
    assert len(matrix) == 3
    result = check_idempotent(matrix)
    assert result.passed, result.residue


def test_qminus1_is_idempotent(suq3, flag):
    result = check_idempotent(closed_form_matrix('qminus1', suq3, base=flag))
    assert result.passed, result.residue


def test_projections_sum_to_one(suq3):
    result = check_idempotent_sum(closed_form_matrix('q1', suq3), closed_form_matrix('q2bar', suq3))
    assert result.passed, result.residue


def test_sum_of_different_sizes(suq3):
    result = check_idempotent_sum(closed_form_matrix('q1', suq3), closed_form_matrix('q2', suq3))
    assert result.verdict == 'fail'
    assert result.residue == 'size: 3 != 12'


def test_closed_form_against_itself(suq3):
    matrix = closed_form_matrix('q1', suq3)
    result = check_idempotent(matrix, closed_form=q1(suq3), variant=q1(suq3))
    assert result.passed, result.residue
    assert result.notes == []


def test_unknown_closed_form(suq3):
    with pytest.raises(PresentationError):
        closed_form_matrix('q3', suq3)


def test_matrix_shape(suq3):
    with pytest.raises(PresentationError):
        IdempotentMatrix('bad', [1, 2], q1(suq3))


def test_matrix_as_dict(suq3):
    matrix = closed_form_matrix('q1', suq3)
    data = matrix.as_dict()
    assert data['name'] == 'q1'
    assert data['labels'] == ['1', '2', '3']
    assert len(data['entries']) == 3
    assert data['entries'][0][0] == str(matrix[0, 0])


def test_q2(suq3):
    entries = q2(suq3)
    assert len(entries) == len(V2_LABELS) == 12
    assert not entries[0][3]
    assert entries[0][0]
    assert sorted(CLOSED_FORMS) == ['q1', 'q2', 'q2bar', 'qminus1']


def test_v2_factor():
    assert v2_factor(SYMBOLIC, 2) == scalar(1, 1 + Q ** 2)
    assert v2_factor(SYMBOLIC, 3) == scalar(Q ** 2, 1 + Q ** 2)
    assert v2_factor(SYMBOLIC, 2, variant=True) == scalar(Q ** 2, 1 + Q ** 2)


def test_v_elements(uq2):
    assert not v_element(uq2, 1, 2)
    assert v_element(uq2, 1, 1) == uq2.element('u')

    with pytest.raises(PresentationError):
        v_element(uq2, 4, 1)


def test_flag_generators(suq3, flag):
    generators = dict(flag_generators(suq3))
    assert len(generators) == 27
    assert generators[1, 2, 3] == w(suq3, 1, 2, 3)
    assert flag.contains(generators[3, 1, 2])


def test_universal_d(suq3):
    b = w(suq3, 1, 2, 3)
    assert multiply_legs(universal_d(b)) == 0


@pytest.mark.slow
def test_build_idempotent_v1(catalog, suq3, flag):
    comodule = catalog.comodule('V1')
    ell = ConnectionEll(catalog.section('j'))
    matrix = build_idempotent(comodule, ell, catalog.haar_functional('Uq2'), base=flag)
    assert len(matrix) == 3
    result = check_idempotent(matrix, closed_form=q1(suq3))
    assert result.passed, result.residue


@pytest.mark.slow
def test_build_idempotent_v2(catalog, suq3, flag):
    comodule = catalog.comodule('V2')
    ell = ConnectionEll(catalog.section('j'))
    matrix = build_idempotent(comodule, ell, catalog.haar_functional('Uq2'), base=flag)
    assert len(matrix) == 12
    result = check_idempotent(matrix)
    assert result.passed, result.residue
