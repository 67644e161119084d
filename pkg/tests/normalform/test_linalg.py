import pytest

from sympy import QQ

from qflag.errors import UndecidedError
from qflag.normalform import EchelonBasis, SpanOracle, express
from qflag.scalars import SpecializedField


# Fixtures ####################################################################

@pytest.fixture
def field():
    return SpecializedField(QQ(1, 2))


@pytest.fixture
def vectors():
    return [{'a': QQ(1), 'b': QQ(1)}, {'b': QQ(1), 'c': QQ(2)}]


# Tests #######################################################################

def test_span_oracle(field, vectors):
    oracle = SpanOracle(field, vectors)
    assert oracle.rank == 2
    assert oracle.contains({'a': QQ(1), 'c': QQ(-2)})
    assert oracle.contains({})
    assert not oracle.contains({'a': QQ(1)})
    assert not oracle.contains({'d': QQ(1)})


def test_span_oracle_cap(field, vectors):
    with pytest.raises(UndecidedError) as excinfo:
        SpanOracle(field, vectors, cap=2)

    assert excinfo.value.bound == 2
    assert excinfo.value.dimension == 3


def test_empty_span(field):
    oracle = SpanOracle(field, [])
    assert oracle.rank == 0
    assert oracle.contains({})
    assert not oracle.contains({'a': QQ(1)})


def test_echelon_basis(field, vectors):
    basis = EchelonBasis(field)
    assert basis.add(vectors[0])
    assert basis.add(vectors[1])
    assert not basis.add({'a': QQ(2), 'b': QQ(3), 'c': QQ(2)})
    assert len(basis) == 2
    assert basis.contains({'a': QQ(1), 'c': QQ(-2)})
    assert basis.residue({'a': QQ(1)})
    assert not basis.add({})


def test_express(field):
    assert express(field, [{'a': QQ(1), 'b': QQ(1)}, {'b': QQ(1)}], {'a': QQ(2), 'b': QQ(5)}) == [2, 3]
    assert express(field, [{'a': QQ(1)}], {'b': QQ(1)}) is None
    assert express(field, [], {}) == []


def test_express_dependent_basis(field):
    with pytest.raises(ValueError):
        express(field, [{'a': QQ(1)}, {'a': QQ(2)}], {'a': QQ(1)})
