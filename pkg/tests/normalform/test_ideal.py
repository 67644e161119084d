import pytest
import random

from sympy import QQ

from qflag.dsl.reader import read_catalog
from qflag.errors import QFlagError, UndecidedError
from qflag.freealg import Element, tensor
from qflag.normalform import (
    SYMBOLIC, decide_zero, is_zero_mod_ideal, quotient_basis, relation_products, span_contains,
)
from qflag.scalars import Q, SYMBOLIC as FIELD


SOURCE = """\
algebra N
  gen x : (1,0)
  gen y : (0,1)
  rel r : x.y - q*y.x
end
"""


def random_element(rng, algebra, length, size=3):
    terms = {}
    for _ in range(size):
        word = tuple(rng.randrange(len(algebra.alphabet)) for _ in range(rng.randint(0, length)))
        terms[word] = algebra.field.from_int(rng.randint(-3, 3))
    return Element(algebra, terms)


# Fixtures ####################################################################

@pytest.fixture(scope='module')
def N():
    return read_catalog(SOURCE, FIELD).presentation('N')


@pytest.fixture
def x(N):
    return N.element('x')


@pytest.fixture
def y(N):
    return N.element('y')


# Tests #######################################################################

def test_relation_products(N):
    assert len(list(relation_products(N, (1, 1), 2))) == 1
    assert len(list(relation_products(N, (2, 1), 3))) == 2
    assert list(relation_products(N, (1, 1), 1)) == []


def test_relations_vanish(N, x, y):
    assert not N.complete
    assert is_zero_mod_ideal(x * y - (y * x).scale(Q), mode=SYMBOLIC)
    assert is_zero_mod_ideal(x * y * x - (y * x * x).scale(Q), mode=SYMBOLIC)
    assert span_contains(x * x * y - (x * y * x).scale(Q))


def test_nonzero(N, x, y):
    assert not is_zero_mod_ideal(x * y, mode=SYMBOLIC)
    assert not is_zero_mod_ideal(x * y - y * x, mode=SYMBOLIC)


def test_specialized_mode(N, x, y):
    assert is_zero_mod_ideal(x * y - (y * x).scale(Q))
    assert is_zero_mod_ideal(x * y - (y * x).scale(Q), qpoints=[QQ(1, 2)])
    assert not is_zero_mod_ideal(x * y - y * x, qpoints=[QQ(1, 2), QQ(2, 3)])


def test_cap(N, x, y):
    with pytest.raises(UndecidedError) as excinfo:
        is_zero_mod_ideal(x * y * x - (y * x * x).scale(Q), mode=SYMBOLIC, cap=0)

    assert excinfo.value.bound == 0


def test_zero_is_zero(N):
    assert is_zero_mod_ideal(N.unit() - 1, mode=SYMBOLIC)


def test_mode_errors(catalog, x):
    with pytest.raises(ValueError):
        is_zero_mod_ideal(x, mode='numeric')

    T1 = catalog.presentation('T1')
    with pytest.raises(QFlagError):
        is_zero_mod_ideal(T1.element('u'), mode=SYMBOLIC)


def test_complete_presentations(symbolic):
    T1 = symbolic.presentation('T1')
    u, us = T1.element('u'), T1.element('u*')
    assert is_zero_mod_ideal(u * us - 1, mode=SYMBOLIC)
    assert is_zero_mod_ideal(u * us - 1, mode=SYMBOLIC, method='span')
    assert not is_zero_mod_ideal(u * u - 1, mode=SYMBOLIC)


def test_decide_zero_on_tensors(symbolic, x, y):
    T1 = symbolic.presentation('T1')
    u, us = T1.element('u'), T1.element('u*')
    assert decide_zero(tensor(u * us, u) - tensor(T1.unit(), u))
    assert not decide_zero(tensor(u, u))

    with pytest.raises(UndecidedError):
        decide_zero(tensor(x, y))


def test_quotient_basis(N, symbolic):
    assert quotient_basis(N, (1, 1), 2) == [(0, 1)]
    assert len(quotient_basis(symbolic.presentation('T2'), (0, 0), 2)) == 1

    with pytest.raises(UndecidedError):
        quotient_basis(N, (1, 1), 2, cap=1)


def test_quotient_basis_of_column_block(suq3):
    basis = quotient_basis(suq3, (1, 0), 1)
    assert sorted(suq3.format_word(word) for word in basis) == ['u11', 'u21', 'u31']


def test_quotient_basis_of_uq2(uq2):
    basis = [uq2.format_word(word) for word in quotient_basis(uq2, (0, 0), 2)]
    # u*.u, gamma*.gamma, alpha*.gamma, gamma*.alpha and both alpha products reduce onto these
    assert basis == ['u.u*', 'gamma.gamma*', 'gamma.alpha*', 'alpha.gamma*']


def test_quotient_basis_of_shorter_words(uq2):
    basis = quotient_basis(uq2, (0, 0), 2, shorter=True)
    assert [uq2.format_word(word) for word in basis] == ['', 'gamma.gamma*', 'gamma.alpha*', 'alpha.gamma*']


def check_oracles_agree(algebra, length, samples, seed):
    rng = random.Random(seed)
    for _ in range(samples):
        x = random_element(rng, algebra, length)
        for a in (x, x - algebra.normal_form(x)):
            assert is_zero_mod_ideal(a, method='span') == is_zero_mod_ideal(a), a


@pytest.mark.parametrize('name, length', [('SUq3', 3), ('Uq2', 4)])
def test_span_oracle_agrees_with_normal_forms(catalog, name, length):
    check_oracles_agree(catalog.presentation(name), length, 10, seed=0)


@pytest.mark.slow
@pytest.mark.parametrize('name, length', [('SUq3', 3), ('Uq2', 4)])
def test_span_oracle_agrees_on_many_elements(catalog, name, length):
    check_oracles_agree(catalog.presentation(name), length, 100, seed=1)
