import pytest

from qflag.errors import PresentationError
from qflag.freealg import (
    Element, TensorElement, components, contract_middle, flip, from_components, left_multiply,
    map_leg, multiply, multiply_legs, normalize, right_multiply, sandwich, tensor, tensor_multiply,
)
from qflag.presentations import Presentation, ground
from qflag.scalars import Q, SYMBOLIC


# Fixtures ####################################################################

@pytest.fixture(scope='module')
def F():
    return Presentation('F', SYMBOLIC, ['x', 'y'], [(1, 0), (0, 1)])


@pytest.fixture(scope='module')
def G():
    return Presentation('G', SYMBOLIC, ['z'], [(0, 0)])


@pytest.fixture
def x(F):
    return F.element('x')


@pytest.fixture
def y(F):
    return F.element('y')


@pytest.fixture(scope='module')
def T1(symbolic):
    return symbolic.presentation('T1')


@pytest.fixture
def u(T1):
    return T1.element('u')


@pytest.fixture
def us(T1):
    return T1.element('u*')


# Tests #######################################################################

def test_free_arithmetic(F, x, y):
    assert (x * y).terms == {(0, 1): SYMBOLIC.one}
    assert x * y != y * x
    assert x - x == 0
    assert not (x - x)
    assert (x + 1) - 1 == x
    assert 2 * x == x + x
    assert x.scale(0) == Element.zero(F)


def test_element_str(F, x, y):
    assert str(x * y - (y * x).scale(Q)) == '-q*y.x + x.y'
    assert str(x.scale(1 / Q)) == '(1/q)*x'
    assert str(Element.zero(F)) == '0'
    assert str(x + 1) == 'x + 1'
    assert str(Element.unit(F)) == '1'


def test_element_coefficient(x, y):
    a = x * y - (y * x).scale(Q)
    assert a.coefficient((1, 0)) == -Q
    assert a.coefficient((0, 0)) == 0
    assert a.max_length() == 2


def test_mixed_presentations(x, G):
    with pytest.raises(PresentationError):
        x + G.element('z')

    with pytest.raises(PresentationError):
        x * G.element('z')


def test_tensor(F, x, y):
    t = tensor(x, y)
    assert isinstance(t, TensorElement)
    assert t.arity == 2
    assert t.leg_names() == ('F', 'F')
    assert str(t) == 'x ⊗ y'
    assert str(tensor(Element.unit(F), x)) == '1 ⊗ x'
    assert tensor(t, x).arity == 3


def test_tensor_drops_ground_legs(x):
    k = ground(SYMBOLIC)
    assert tensor(Element.unit(k), x) == x

    with pytest.raises(PresentationError):
        tensor(Element.unit(k))


def test_tensor_needs_two_legs(F):
    with pytest.raises(PresentationError):
        TensorElement((F,))


def test_tensor_arithmetic(x, y):
    t = tensor(x, y) + tensor(y, x)
    assert t - tensor(y, x) == tensor(x, y)
    assert (t - t).is_zero()
    assert t * tensor(x, x) == tensor(x * x, y * x) + tensor(y * x, x * x)


def test_flip(x, y):
    assert flip(tensor(x, y)) == tensor(y, x)


def test_components_round_trip(F, x, y):
    t = tensor(x, y) + tensor(y, y)
    parts = components(t, 0)
    assert parts == {((1,),): x + y}
    assert from_components((F, F), 0, parts) == t


def test_map_leg(x, y):
    t = tensor(x, y)
    assert map_leg(t, 1, lambda e: tensor(e, e)) == tensor(x, y, y)
    assert map_leg(t, 0, lambda e: e * e) == tensor(x * x, y)


def test_normalize(T1, u, us):
    assert normalize(u * us) == 1
    assert not normalize(u * us - 1)
    assert normalize(tensor(us * u, u)) == tensor(T1.unit(), u)


def test_multiply(T1, u, us):
    assert multiply(u, us) == 1
    assert multiply(u * u, us) == u


def test_tensor_multiply(T1, u, us):
    assert tensor_multiply(tensor(u, u), tensor(us, us)) == TensorElement.unit((T1, T1))


def test_leg_multiplication(T1, u, us):
    t = tensor(u, u)
    assert left_multiply(us, t) == tensor(T1.unit(), u)
    assert right_multiply(t, us) == tensor(u, T1.unit())
    assert left_multiply(us, t, leg=1) == tensor(u, T1.unit())


def test_multiply_legs(u, us, x):
    assert multiply_legs(tensor(u, us)) == 1

    with pytest.raises(PresentationError):
        multiply_legs(tensor(u, x))


def test_contract_middle(T1, u, us):
    assert contract_middle(tensor(u, u, us, u)) == tensor(u, T1.unit(), u)

    with pytest.raises(PresentationError):
        contract_middle(tensor(u, u, u))


def test_sandwich(T1, u, us):
    assert sandwich(tensor(u, u), tensor(us, us)) == TensorElement.unit((T1, T1))
