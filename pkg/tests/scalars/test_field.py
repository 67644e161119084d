import pytest

from hypothesis import assume, given, strategies as st
from sympy import QQ

from qflag.errors import ScalarError
from qflag.scalars import (
    Q, QFIELD, SYMBOLIC, SpecializedField, format_rational, format_scalar, parse_rational,
    parse_scalar, random_qpoints, scalar, scalar_arith, specialize,
)


coefficients = st.lists(st.integers(-5, 5), min_size=1, max_size=4)


def poly(coeffs):
    return sum((QFIELD(c) * Q ** i for i, c in enumerate(coeffs)), QFIELD(0))


# Fixtures ####################################################################

@pytest.fixture
def half():
    return SpecializedField(QQ(1, 2))


# Tests #######################################################################

def test_scalar():
    assert scalar(2, 4) == QFIELD(1) / 2
    assert scalar(Q ** 2 - 1, Q - 1) == Q + 1


def test_scalar_division_by_zero():
    with pytest.raises(ScalarError):
        scalar(1, 0)

    with pytest.raises(ZeroDivisionError):
        scalar(Q, Q - Q)


def test_scalar_arith():
    assert scalar_arith(Q, 1, 'add') == Q + 1
    assert scalar_arith(Q, Q, 'sub') == 0
    assert scalar_arith(Q, Q, 'mul') == Q ** 2
    assert scalar_arith(Q ** 2, Q, 'div') == Q

    with pytest.raises(ScalarError):
        scalar_arith(Q, 0, 'div')

    with pytest.raises(ValueError):
        scalar_arith(Q, Q, 'pow')


def test_specialize():
    assert specialize(scalar(1, Q ** 2 + 1), QQ(1, 2)) == QQ(4, 5)
    assert specialize(Q - 1 / Q, QQ(1, 2)) == QQ(-3, 2)

    with pytest.raises(ScalarError):
        specialize(scalar(1, 2 * Q - 1), QQ(1, 2))


def test_format_scalar():
    assert format_scalar(Q + 1 / Q) == '(q^2+1)/q'
    assert format_scalar(scalar(1, Q ** 2 + 1)) == '1/(q^2+1)'
    assert format_scalar(2 * Q ** 3 - Q + 1) == '2*q^3-q+1'
    assert format_scalar(-Q) == '-q'
    assert format_scalar(QFIELD(0)) == '0'
    assert format_scalar(1 / Q) == '1/q'


def test_parse_scalar():
    assert parse_scalar('(q^2-1)/(q^4-1)') == scalar(1, Q ** 2 + 1)
    assert parse_scalar('q^(2*n+2)', n=1) == Q ** 4
    assert parse_scalar('-q^-1') == -1 / Q


@pytest.mark.parametrize('text', ['x+1', 'q+', '(q'])
def test_parse_scalar_errors(text):
    with pytest.raises(ScalarError):
        parse_scalar(text)


@given(coefficients, coefficients)
def test_format_parse_round_trip(num, den):
    assume(any(den))
    a = scalar(poly(num), poly(den))
    assert parse_scalar(format_scalar(a)) == a


@given(coefficients, coefficients, st.integers(1, 96))
def test_specialize_is_multiplicative(a, b, n):
    q0 = QQ(n, 97)
    assert specialize(poly(a) * poly(b), q0) == specialize(poly(a), q0) * specialize(poly(b), q0)


def test_rationals():
    assert format_rational(QQ(3)) == '3'
    assert format_rational(QQ(-1, 2)) == '-1/2'
    assert parse_rational('2/7') == QQ(2, 7)
    assert parse_rational(' 3 ') == QQ(3)


@pytest.mark.parametrize('text', ['a/b', '1/0', ''])
def test_parse_rational_errors(text):
    with pytest.raises(ScalarError):
        parse_rational(text)


def test_random_qpoints():
    points = random_qpoints(seed=5)
    assert points == random_qpoints(seed=5)
    assert len(points) == len(set(points)) == 3
    assert points == sorted(points)
    assert all(0 < p < 1 for p in points)
    assert all(p.denominator == 97 for p in points)


def test_symbolic_field():
    assert SYMBOLIC.key == 'symbolic'
    assert SYMBOLIC.symbolic
    assert SYMBOLIC.q == Q
    assert SYMBOLIC.power(Q, -2) == 1 / Q ** 2
    assert SYMBOLIC.parse('q^2+1') == Q ** 2 + 1
    assert SYMBOLIC.format(SYMBOLIC.from_int(3)) == '3'

    with pytest.raises(ScalarError):
        SYMBOLIC.divide(SYMBOLIC.one, SYMBOLIC.zero)


def test_specialized_field(half):
    assert half.key == 'q=1/2'
    assert not half.symbolic
    assert half.q == QQ(1, 2)
    assert half.from_scalar(Q - 1 / Q) == QQ(-3, 2)
    assert half.format(half.from_scalar(Q - 1 / Q)) == '-3/2'
    assert half.parse('q^(2*n+2)', n=1) == QQ(1, 16)
    assert half.power(half.q, -1) == 2
    assert repr(half) == 'SpecializedField(1/2)'


def test_field_elements_pass_through(half):
    assert scalar(Q) == Q
    assert scalar(Q ** 2, Q) == Q
    assert scalar_arith(Q, 1, 'add') == Q + 1
    assert half.from_scalar(Q) == QQ(1, 2)
    assert half.from_scalar(QQ(3)) == 3
    assert half.from_scalar(5) == 5


@pytest.mark.parametrize('q0', [QQ(0), QQ(1), QQ(3, 2), QQ(-1, 2)])
def test_specialized_field_range(q0):
    with pytest.raises(ScalarError):
        SpecializedField(q0)
