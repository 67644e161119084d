import pytest

from os import path

from qflag.dsl import CHECK_KINDS, Check, SuiteScript, parse
from qflag.errors import ParserError

DATA = path.join(path.dirname(path.realpath(__file__)), 'data')


# Fixtures ####################################################################

@pytest.fixture(scope='module')
def sample():
    with open(path.join(DATA, 'sample.qfa'), encoding='utf-8') as fp:
        return parse(fp.read())


@pytest.fixture(scope='module')
def circle():
    with open(path.join(DATA, 'circle.qfa'), encoding='utf-8') as fp:
        return parse(fp.read())


# Tests #######################################################################

def test_parse(sample):
    assert isinstance(sample, SuiteScript)
    assert len(sample) == 2
    assert sample.declarations == [('algebra', 'N')]
    assert not sample.is_empty()
    assert repr(sample) == '<SuiteScript: 1 declarations, 2 checks>'
    assert sample.catalog.field.symbolic


def test_identity_checks(sample):
    first, second = sample.checks
    assert first.kind == 'identity'
    assert first.lineno == 9
    assert first.anchor == 'q-commutation'
    assert first.text == 'x.y == q*y.x mod N'
    assert first.label == 'identity x.y == q*y.x mod N'
    assert first.context == ['N']
    assert len(first.expressions) == 2
    assert first.expressions[0] == ('mul', ('name', 'x', 16), ('name', 'y', 18))

    assert second.label == 'cubic'
    assert second.mode == 'symbolic'
    assert second.anchor is None


def test_structural_checks(circle):
    labels = [check.label for check in circle]
    assert labels[:4] == ['presentation C', 'star C', 'hopf-axioms C', 'haar C']

    haar = circle.checks[3]
    assert haar.arguments == ['C']
    assert haar.flag('length') == 2
    assert haar.flag('missing', 5) == 5

    assert circle.checks[4].context == ['C', 'C']
    assert circle.declarations == [('algebra', 'C'), ('hopf', 'C'), ('haar', 'C')]


def test_check_as_dict(circle):
    assert circle.checks[2].as_dict() == {
        'kind': 'hopf-axioms',
        'name': 'hopf-axioms C',
        'anchor': 'group-like generator',
        'lineno': 30,
    }


def test_empty_script():
    script = parse('# nothing here\n')
    assert script.is_empty()
    assert len(script) == 0


def test_parse_error_position():
    with pytest.raises(ParserError) as excinfo:
        parse('use standard\ncheck identity u11 + zz == 0')

    assert excinfo.value.lineno == 2
    assert excinfo.value.column == 22
    assert str(excinfo.value) == 'line 2, column 22: unknown name zz'


@pytest.mark.parametrize('text, message', [
    ('check hopf-axioms Nope', 'line 1: unknown hopf Nope'),
    ('check presentation', 'line 1: check presentation is missing the algebra'),
    ('check identity x', 'line 1, column 16: an identity reads LHS == RHS [mod ALGEBRA]'),
    ('check member x.y', 'line 1: check member reads SUBALGEBRA EXPRESSION'),
    ('check identity 1 == 1 mode fast', 'line 1: unknown mode fast'),
    ('check identity nope(1) == 1', 'line 1, column 16: unknown function nope'),
])
def test_check_errors(text, message):
    with pytest.raises(ParserError) as excinfo:
        parse(text)

    assert str(excinfo.value) == message


def test_identity_context_error():
    with pytest.raises(ParserError) as excinfo:
        parse('check identity 1 == 1 mod Nowhere')

    assert excinfo.value.message == 'unknown algebra Nowhere'


@pytest.mark.parametrize('words, message', [
    (['C', 'length'], 'length takes 1 value'),
    (['C', 'length', 'two'], 'length takes an integer'),
    (['C', 'width', '2'], 'check haar has no option width'),
])
def test_argument_errors(circle, words, message):
    check = Check('haar', 1)
    with pytest.raises(ParserError) as excinfo:
        check.parse_arguments(circle.catalog, words)

    assert excinfo.value.message == message


def test_flags_without_values(symbolic):
    check = Check('epimorphism', 1)
    check.parse_arguments(symbolic, ['pi', 'triangle', 'pihat1', 'pihat0', 'graded'])
    assert check.arguments == ['pi']
    assert check.flags == {'triangle': ['pihat1', 'pihat0'], 'graded': True}

    check = Check('idempotent', 1)
    check.parse_arguments(symbolic, ['V1'])
    assert check.arguments == ['V1']

    check = Check('idempotent-sum', 1)
    check.parse_arguments(symbolic, ['q1', 'V1'])
    assert check.arguments == ['q1', 'V1']

    with pytest.raises(ParserError):
        Check('epimorphism', 1).parse_arguments(symbolic, ['pi', 'triangle', 'pihat1', 'nope'])


def test_check_kinds():
    assert 'identity' not in CHECK_KINDS
    assert CHECK_KINDS['cotensor'] == (('section', 'subalgebra'), {'length': 1, 'dimension': 1})
