import pytest

from os import path

from qflag.dsl import LowLevelReader, Reader, read_catalog
from qflag.errors import ParserError
from qflag.scalars import SYMBOLIC

DATA = path.join(path.dirname(path.realpath(__file__)), 'data')


# Fixtures ####################################################################

@pytest.fixture
def sample():
    with open(path.join(DATA, 'sample.qfa'), encoding='utf-8') as fp:
        return fp.read()


@pytest.fixture
def circle():
    with open(path.join(DATA, 'circle.qfa'), encoding='utf-8') as fp:
        return fp.read()


def parse_line(line):
    results = list(LowLevelReader(line))
    assert len(results) == 1
    return results[0]


# Tests #######################################################################

def test_low_level_reader(sample):
    results = list(LowLevelReader(sample))
    assert all(error is None for _, error in results)

    lines = [line for line, _ in results]
    assert [line['type'] for line in lines] == ['algebra', 'gen', 'gen', 'rel', 'end', 'check', 'check']
    assert lines[0] == {'type': 'algebra', 'name': 'N', 'lineno': 3}
    assert lines[1] == {'type': 'gen', 'symbol': 'x', 'degree': (1, 0), 'lineno': 4}
    assert lines[3] == {'type': 'rel', 'label': 'comm', 'expression': 'x.y - q*y.x', 'column': 14, 'lineno': 6}


def test_check_lines(sample):
    checks = [line for line, _ in LowLevelReader(sample) if line['type'] == 'check']

    assert checks[0] == {
        'type': 'check',
        'kind': 'identity',
        'arguments': 'x.y == q*y.x mod N',
        'column': 16,
        'options': {'anchor': 'q-commutation'},
        'lineno': 9,
    }
    assert checks[1]['options'] == {'name': 'cubic', 'mode': 'symbolic'}
    assert checks[1]['arguments'] == 'x.y.x == q*y.x.x mod N'


def test_declaration_lines():
    line, _ = parse_line('map pi : SUq3 -> Uq2')
    assert line == {'type': 'map', 'name': 'pi', 'source': 'SUq3', 'target': 'Uq2', 'kind': 'hom', 'lineno': 1}

    line, _ = parse_line('section j : Uq2 -> SUq3 via pi')
    assert (line['source'], line['target'], line['epi']) == ('Uq2', 'SUq3', 'pi')

    line, _ = parse_line('  rule unitary.1 : u.u* -> 1')
    assert line['lhs'] == ['u', 'u*']
    assert line['expression'] == '1'

    line, _ = parse_line('  value gamma^n.gamma*^n = (q^2-1)/(q^(2*n+2)-1)')
    assert line['pattern'] == ['gamma', 'gamma*']
    assert line['formula'] == '(q^2-1)/(q^(2*n+2)-1)'

    line, _ = parse_line('  generated u11 u21 u31 ordered')
    assert line == {'type': 'generated', 'symbols': ['u11', 'u21', 'u31'], 'ordered': True, 'lineno': 1}

    line, _ = parse_line('  row alpha, -q*gamma*.u*')
    assert line['expressions'] == ['alpha', '-q*gamma*.u*']

    line, _ = parse_line('  u23 = -q*gamma*.u*  # comment')
    assert line['type'] == 'image'
    assert line['expression'] == '-q*gamma*.u*'
    assert line['column'] == 9


def test_comments_and_blank_lines():
    assert list(LowLevelReader('# only a comment\n\n   \n')) == []


@pytest.mark.parametrize('text, message', [
    ('gen y (0,1)', 'line 1: malformed gen line'),
    ('frobnicate', 'line 1, column 1: unknown line: frobnicate'),
    ('check frobnicate x', 'line 1, column 7: unknown check kind frobnicate'),
    ('check identity x == x cap many', 'line 1: cap takes an integer'),
    ('  value gamma.gamma* = 1', 'line 1, column 9: malformed haar pattern gamma.gamma*'),
])
def test_line_errors(text, message):
    line, error = parse_line(text)
    assert line is None
    assert str(error) == message


def test_reader_blocks(circle):
    records = list(Reader(circle))
    assert all(error is None for _, error in records)

    kinds = [record['type'] for record, _ in records]
    assert kinds == ['algebra', 'hopf', 'haar'] + ['check'] * 6

    algebra = records[0][0]
    assert algebra['name'] == 'C'
    assert algebra['lineno'] == 3
    assert len(algebra['lines']) == 9
    assert algebra['lines'][-1] == {'type': 'complete', 'lineno': 12}


def test_reader_skips_broken_blocks():
    text = 'algebra B\n  gen x : (1,0)\n  gen y (0,1)\nend\ncheck presentation B\n'
    records = list(Reader(text))

    assert len(records) == 2
    assert records[0][0] is None
    assert str(records[0][1]) == 'line 3: malformed gen line'
    assert records[1][0]['type'] == 'check'


def test_missing_end():
    records = list(Reader('algebra A\n  gen x : (0,0)\ncheck presentation A\n'))
    assert str(records[0][1]) == 'line 3: algebra A is missing its end'
    assert records[1][0]['type'] == 'check'

    records = list(Reader('algebra A\n  gen x : (0,0)\n'))
    assert str(records[0][1]) == 'line 2: algebra A is missing its end'


def test_unexpected_end():
    records = list(Reader('end\n'))
    assert str(records[0][1]) == 'line 1: end outside of a block'

    records = list(Reader('gen x : (0,0)\n'))
    assert str(records[0][1]) == 'line 1: gen line outside of a block'


def test_read_catalog(circle):
    catalog = read_catalog(circle, SYMBOLIC)
    C = catalog.presentation('C')
    assert C.alphabet == ['z', 'z*']
    assert C.complete
    assert catalog.haar_functional('C')(C.unit()) == 1

    hopf = catalog.hopf_structure('C')
    z = C.element('z')
    assert str(hopf.coproduct(z)) == 'z ⊗ z'
    assert hopf.antipode(z) == C.element('z*')


def test_read_catalog_errors():
    with pytest.raises(ParserError) as excinfo:
        read_catalog('algebra A\n  gen x : (0,0)\n  rel r : x.y\nend\n', SYMBOLIC)
    assert excinfo.value.lineno == 3
    assert excinfo.value.column == 13

    with pytest.raises(ParserError) as excinfo:
        read_catalog('hopf A\nend\n', SYMBOLIC)
    assert excinfo.value.lineno == 1

    with pytest.raises(ParserError) as excinfo:
        read_catalog('use nothing\n', SYMBOLIC)
    assert str(excinfo.value) == 'line 1: unknown library nothing'
