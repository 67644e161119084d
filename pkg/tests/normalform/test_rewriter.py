import pytest

from hypothesis import given, settings, strategies as st

from qflag.errors import ReductionError
from qflag.freealg import Element, multiply
from qflag.normalform import Rewriter


def word(A, *symbols):
    result = A.unit()
    for symbol in symbols:
        result = result * A.element(symbol)
    return result


# Fixtures ####################################################################

@pytest.fixture(scope='module')
def A(symbolic):
    return symbolic.presentation('SUq3')


@pytest.fixture
def rewriter(A):
    return Rewriter(A)


# Tests #######################################################################

def test_normal_form(A, rewriter):
    assert str(rewriter.normal_form(word(A, 'u12', 'u11'))) == '(1/q)*u11.u12'
    assert rewriter.normal_form(word(A, 'u11', 'u12')) == word(A, 'u11', 'u12')
    assert rewriter.is_normal((0, 1))
    assert not rewriter.is_normal((1, 0))


def test_normal_form_is_memoized(A, rewriter):
    first = rewriter.normal_form(word(A, 'u33', 'u22', 'u11'))
    steps = rewriter.steps
    assert rewriter.normal_form(word(A, 'u33', 'u22', 'u11')) == first
    assert rewriter.steps == steps


def test_step_limit(A):
    with pytest.raises(ReductionError):
        Rewriter(A, max_steps=1).normal_form(word(A, 'u33', 'u22', 'u11'))


def test_trace(A, rewriter):
    trace = rewriter.reduce_with_trace(word(A, 'u12', 'u11'))
    assert trace.fixpoint
    assert trace.as_dict() == {
        'input': 'u12.u11',
        'output': '(1/q)*u11.u12',
        'fixpoint': True,
        'steps': [{'rule': 'row.112', 'word': 'u12.u11', 'position': 0}],
    }
    assert trace.replay(rewriter)


def test_trace_agrees_with_normal_form(A, rewriter):
    a = word(A, 'u22', 'u11') + word(A, 'u31', 'u12')
    trace = rewriter.reduce_with_trace(a)
    assert trace.output == rewriter.normal_form(a)
    assert trace.replay(rewriter)


def test_trace_cap(A, rewriter):
    with pytest.raises(ReductionError) as excinfo:
        rewriter.reduce_with_trace(word(A, 'u12', 'u11'), cap=0)

    trace = excinfo.value.trace
    assert not trace.fixpoint
    assert trace.steps == []
    assert trace.output == word(A, 'u12', 'u11')


def test_central_steps_are_traced(A, rewriter):
    trace = rewriter.reduce_with_trace(word(A, 'u11', 'u22', 'u33'))
    assert trace.fixpoint
    assert [step.rule for step in trace.steps] == ['det']
    assert trace.steps[0].position is None
    assert trace.as_dict()['steps'][0]['position'] is None


words = st.lists(st.integers(0, 8), max_size=4).map(tuple)


@settings(max_examples=40, deadline=None)
@given(words, words)
def test_normal_forms_of_products(suq3, x, y):
    a = Element.word(suq3, x)
    b = Element.word(suq3, y)
    nf = suq3.normal_form(Element.word(suq3, x + y))

    assert all(suq3.rewriter.is_normal(word) for word in nf.terms)
    assert suq3.normal_form(nf) == nf
    assert multiply(suq3.normal_form(a), suq3.normal_form(b)) == nf
