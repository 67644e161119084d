import pytest

from io import StringIO
from os import path

from qflag.dsl import Writer, format_expression, parse, read_catalog
from qflag.scalars import SYMBOLIC

DATA = path.join(path.dirname(path.realpath(__file__)), 'data')


# Fixtures ####################################################################

@pytest.fixture
def output():
    return StringIO()


@pytest.fixture
def writer(output):
    return Writer(output)


# Tests #######################################################################

def test_write_line(writer, output):
    writer.write_line('use standard')
    writer.write_line()
    writer.write_comment('the flag manifold')
    assert output.getvalue() == 'use standard\n\n# the flag manifold\n'


def test_write_block(writer, output):
    with writer.write_block('haar T1'):
        writer.write_line('value 1 = 1')
        writer.write_line()

    assert output.getvalue() == 'haar T1\n  value 1 = 1\n\nend\n\n'


def test_write_presentation(writer, output, symbolic):
    writer.write_presentation(symbolic.presentation('T1'))
    assert output.getvalue() == """\
algebra T1
  gen u : (1,0)
  gen u* : (-1,0)
  star u = u*
  star u* = u
  rule unitary.1 : u.u* -> 1
  rule unitary.2 : u*.u -> 1
  rel unitary.1 : u.u* - 1
  rel unitary.2 : u*.u - 1
  complete
end

"""


def test_write_hopf(writer, output, symbolic):
    writer.write_hopf(symbolic.hopf_structure('T1'))
    assert output.getvalue() == """\
hopf T1
  coproduct u = u @ u
  coproduct u* = u* @ u*
  counit u = 1
  counit u* = 1
  antipode u = u*
  antipode u* = u
end

"""


def test_write_declarations(writer, output, symbolic):
    writer.write_haar(symbolic.haar_functional('Uq2'))
    writer.write_section(symbolic.section('j'))
    writer.write_subalgebra(symbolic.subalgebra('CP2q'))
    assert output.getvalue() == """\
haar Uq2
  value gamma^n.gamma*^n = (q^2-1)/(q^(2*n+2)-1)
end

section j : Uq2 -> SUq3 via pi

subalgebra CP2q in SUq3
  degree (0,0)
  generated u11 u21 u31 ordered
  coinvariant pi
end

"""


def test_write_map(writer, output, symbolic):
    writer.write_map(symbolic.map('incl'))
    lines = output.getvalue().splitlines()
    assert lines[0] == 'map incl : T1 -> Uq2'
    assert lines[-1] == 'end'


def test_format_expression(symbolic):
    uq2 = symbolic.presentation('Uq2')
    hopf = symbolic.hopf_structure('Uq2')
    assert format_expression(hopf.coproduct(uq2.element('u'))) == 'u @ u'
    assert format_expression(uq2.element('u').scale(-1)) == '-u'


def test_write_checks(writer, output):
    with open(path.join(DATA, 'sample.qfa'), encoding='utf-8') as fp:
        script = parse(fp.read())

    for check in script.checks:
        writer.write_check(check)

    assert output.getvalue() == (
        'check identity x.y == q*y.x mod N anchor "q-commutation"\n'
        'check identity x.y.x == q*y.x.x mod N as "cubic" mode symbolic\n'
    )


def test_script_round_trip(writer, output):
    with open(path.join(DATA, 'circle.qfa'), encoding='utf-8') as fp:
        script = parse(fp.read())

    writer.write_script(script)
    again = parse(output.getvalue())

    assert again.catalog.presentation('C') == script.catalog.presentation('C')
    assert [c.label for c in again] == [c.label for c in script]
    assert [c.anchor for c in again] == [c.anchor for c in script]


def test_catalog_round_trip(writer, output, symbolic):
    writer.write_catalog(symbolic)
    catalog = read_catalog(output.getvalue(), SYMBOLIC)

    assert list(catalog.presentations) == list(symbolic.presentations)
    for name, presentation in symbolic.presentations.items():
        assert catalog.presentation(name) == presentation

    for table in ('maps', 'hopf', 'haar', 'subalgebras', 'sections', 'comodules'):
        assert sorted(getattr(catalog, table)) == sorted(getattr(symbolic, table))

    for name, m in symbolic.maps.items():
        assert catalog.map(name).images == m.images
