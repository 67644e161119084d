import pytest

from sympy import QQ

from qflag.errors import PresentationError
from qflag.presentations import (
    STANDARD_NAMES, Catalog, Presentation, build_standard_catalog, exponent_vectors, standard_source,
)
from qflag.scalars import SYMBOLIC, SpecializedField


# Fixtures ####################################################################

@pytest.fixture
def empty():
    return Catalog(SYMBOLIC)


@pytest.fixture(scope='module')
def A(symbolic):
    return symbolic.presentation('SUq3')


@pytest.fixture(scope='module')
def H(symbolic):
    return symbolic.presentation('Uq2')


def product(algebra, *symbols):
    result = algebra.unit()
    for symbol in symbols:
        result = result * algebra.element(symbol)
    return algebra.normal_form(result)


# Tests #######################################################################

def test_ground_field_is_declared(empty):
    assert empty.presentation('k').is_ground


def test_duplicate_declarations(empty):
    empty.add_presentation(Presentation('F', SYMBOLIC, ['x'], [(1, 0)]))

    with pytest.raises(PresentationError):
        empty.add_presentation(Presentation('F', SYMBOLIC, ['y'], [(0, 1)]))


@pytest.mark.parametrize('getter', [
    'presentation', 'map', 'hopf_structure', 'haar_functional', 'subalgebra', 'comodule', 'section',
])
def test_unknown_names(empty, getter):
    with pytest.raises(PresentationError):
        getattr(empty, getter)('nowhere')


def test_standard_catalog(symbolic):
    for name in STANDARD_NAMES:
        presentation = symbolic.presentation(name)
        assert presentation.complete
        assert presentation.field is SYMBOLIC

    assert build_standard_catalog() is symbolic
    assert symbolic.source == standard_source()
    assert sorted(symbolic.maps) == ['incl', 'p', 'pi', 'pihat0', 'pihat1']
    assert sorted(symbolic.hopf) == ['Mq3', 'SUq2', 'SUq3', 'T1', 'T2', 'Uq2']
    assert sorted(symbolic.haar) == ['SUq2', 'T1', 'T2', 'Uq2']
    assert sorted(symbolic.subalgebras) == ['CP1q', 'CP2q', 'Flag', 'S5q']
    assert sorted(symbolic.comodules) == ['V1', 'V2', 'Vminus1']
    assert list(symbolic.sections) == ['j']


def test_star_structures(symbolic):
    assert symbolic.presentation('SUq3').has_star
    assert symbolic.presentation('Uq2').has_star
    assert not symbolic.presentation('Mq3').has_star


def test_algebras_with(symbolic):
    assert [p.name for p in symbolic.algebras_with('u')] == ['Uq2', 'T1']
    assert [p.name for p in symbolic.algebras_with('u11')] == ['SUq3', 'Mq3']
    assert symbolic.algebras_with('v') == []


def test_specialize(symbolic, catalog):
    assert symbolic.specialize(QQ(1, 3)) is catalog
    assert catalog.field.key == 'q=1/3'
    assert isinstance(catalog.presentation('Uq2').field, SpecializedField)
    assert catalog.map('pi').source is catalog.presentation('SUq3')


def test_exponent_vectors():
    assert list(exponent_vectors((1, 2), 2)) == [(0, 0), (0, 1), (1, 0), (2, 0)]
    assert list(exponent_vectors((), 5)) == [()]


def test_flag_membership(symbolic, A):
    flag = symbolic.subalgebra('Flag')
    assert flag.contains(product(A, 'u11', 'u22', 'u33'))
    assert flag.contains(A.unit())
    assert not flag.contains(A.element('u11'))


def test_sphere_membership(symbolic, A):
    sphere = symbolic.subalgebra('S5q')
    assert sphere.contains(A.element('u21'))
    assert sphere.contains(product(A, 'u31', 'u11'))
    assert not sphere.contains(A.element('u12'))


def test_projective_plane_membership(symbolic, A):
    plane = symbolic.subalgebra('CP2q')
    assert plane.contains(A.normal_form(A.element('u11') * A.star(A.element('u21'))))
    assert not plane.contains(A.element('u11'))
    assert plane.coaction is not None


def test_podles_sphere_membership(symbolic, H):
    sphere = symbolic.subalgebra('CP1q')
    assert sphere.contains(product(H, 'alpha', 'alpha*'))
    assert sphere.contains(product(H, 'u', 'gamma', 'u*', 'gamma*'))
    assert not sphere.contains(H.element('gamma'))


def test_membership_needs_same_algebra(symbolic, H):
    with pytest.raises(PresentationError):
        symbolic.subalgebra('S5q').contains(H.element('u'))
