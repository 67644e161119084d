import pytest

from qflag.connection import (
    A_FAMILY, B_FAMILY, ConnectionEll, SectionJ, connection_sample, ell_closed_form, ell_v_closed_form,
    v_element,
)
from qflag.errors import PresentationError
from qflag.freealg import TensorElement, multiply, multiply_legs, normalize
from qflag.scalars import Q


def product(algebra, *symbols):
    result = algebra.unit()
    for symbol in symbols:
        result = result * algebra.element(symbol)
    return algebra.normal_form(result)


# Fixtures ####################################################################

@pytest.fixture(scope='module')
def j(catalog):
    return catalog.section('j')


@pytest.fixture(scope='module')
def ell(j):
    return ConnectionEll(j)


@pytest.fixture(scope='module')
def symbolic_j(symbolic):
    return symbolic.section('j')


# Tests #######################################################################

def test_section_on_generators(j, suq3, uq2):
    assert j(uq2.element('u')) == suq3.element('u11')
    assert j(uq2.element('alpha')) == suq3.element('u22')
    assert j(uq2.element('gamma')) == suq3.element('u32')
    assert j(product(uq2, 'alpha*', 'u*')) == suq3.element('u33')
    assert j(uq2.element('u*')) == suq3.normal_form(suq3.star(suq3.element('u11')))
    assert j(uq2.unit()) == 1


def test_section_is_linear(j, suq3, uq2):
    h = uq2.element('alpha').scale(2) - uq2.element('gamma')
    assert j(h) == suq3.element('u22').scale(2) - suq3.element('u32')


def test_section_on_v(j, suq3, uq2):
    for i in (2, 3):
        for k in (2, 3):
            assert j(v_element(uq2, i, k)) == suq3.element('u%d%d' % (i, k))


def test_wrong_epimorphism(catalog):
    hopf = catalog.hopf_structure
    with pytest.raises(PresentationError):
        SectionJ('j', hopf('SUq3'), hopf('Uq2'), catalog.map('p'))


def test_wrong_argument(j, suq3):
    with pytest.raises(PresentationError):
        j(suq3.element('u11'))


def test_coordinates(symbolic_j, symbolic):
    H = symbolic.presentation('Uq2')
    word = (H.letter('u*'), H.letter('gamma*'))
    assert symbolic_j.to_b_coordinates(word) == (-1 / Q, A_FAMILY, (0, 0, 0, 1))

    word = (H.letter('u*'), H.letter('alpha*'))
    assert symbolic_j.to_b_coordinates(word) == (1, B_FAMILY, (0, 0, 0, 1))

    assert symbolic_j.from_b_coordinates(B_FAMILY, (0, 0, 0, 1)) == product(H, 'alpha*', 'u*')
    assert symbolic_j.from_b_coordinates(A_FAMILY, (-2, 1, 0, 0)) == product(H, 'u*', 'u*', 'alpha')


def test_coordinates_of_non_normal_words(symbolic_j, symbolic):
    H = symbolic.presentation('Uq2')
    with pytest.raises(PresentationError):
        symbolic_j.to_b_coordinates((H.letter('u'), H.letter('u*')))

    with pytest.raises(PresentationError):
        symbolic_j.to_b_coordinates((H.letter('gamma'), H.letter('alpha')))


def test_basis_words(j):
    words = list(j.basis_words(cap=1))
    assert len(words) == 36
    assert words[0] == (A_FAMILY, (-1, 0, 0, 0))
    assert all(exponents[3] >= 1 for family, exponents in words if family == B_FAMILY)


def test_ell_on_generators(ell, suq3, uq2):
    for symbol in ('u', 'alpha', 'gamma'):
        assert not normalize(ell(uq2.element(symbol)) - ell_closed_form(suq3, symbol))


def test_ell_on_v(ell, suq3, uq2):
    assert not normalize(ell(v_element(uq2, 2, 2)) - ell_v_closed_form(suq3, 2, 2))
    assert not normalize(ell(v_element(uq2, 3, 2)) - ell_v_closed_form(suq3, 3, 2))

    with pytest.raises(PresentationError):
        ell_v_closed_form(suq3, 1, 2)


def test_ell_splits(ell, suq3, uq2):
    assert multiply_legs(ell(uq2.element('u'))) == 1
    assert multiply_legs(ell(uq2.element('gamma'))) == 0
    assert ell(uq2.unit()) == TensorElement.unit((suq3, suq3))


def test_j_multiplicative(ell, uq2):
    assert ell.j_multiplicative(uq2.element('u'), uq2.element('alpha'))
    assert ell.j_multiplicative(uq2.element('alpha'), uq2.element('gamma'))


def test_product_by_sandwich(ell, uq2):
    u, alpha = uq2.element('u'), uq2.element('alpha')
    assert not normalize(ell.product(u, alpha) - ell(multiply(u, alpha)))


def test_connection_sample(uq2):
    sample = connection_sample(uq2)
    assert len(sample) == 42
    assert sample[0] == uq2.element('u')


@pytest.mark.slow
def test_bicolinearity(j):
    result = j.check_bicolinearity(cap=1)
    assert result.passed, result.residue


@pytest.mark.slow
def test_strong_connection(catalog, ell, uq2):
    result = ell.check_strong_connection(connection_sample(uq2), catalog.subalgebra('Flag'))
    assert result.passed, result.residue


@pytest.mark.slow
def test_closed_forms(ell):
    result = ell.check_closed_forms()
    assert result.passed, result.residue


@pytest.mark.slow
def test_sandwich(ell, uq2):
    result = ell.check_sandwich([uq2.element(symbol) for symbol in uq2.alphabet])
    assert result.passed, result.residue
