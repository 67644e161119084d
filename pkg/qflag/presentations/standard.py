"""
The shipped catalog.

The quantum matrix algebras ``SUq3`` and ``Mq3`` have too many relations to
list by hand; their DSL text is generated here from the index patterns. The
remaining declarations live in ``data/standard.qfa``. Both parts together
form the source of :func:`build_standard_catalog`, so a shipped catalog can
always be written out, inspected and read back.
"""

import logging
import os
from itertools import permutations

log = logging.getLogger(__name__)

DATA = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'data')

INDICES = (1, 2, 3)

COLUMN_DEGREES = {1: (1, 0), 2: (0, 1), 3: (-1, -1)}

STANDARD_NAMES = ('SUq3', 'Uq2', 'SUq2', 'T2', 'T1', 'Mq3')

_catalogs = {}


def u(i, j):
    return 'u%d%d' % (i, j)


def inversions(sequence):
    return sum(1 for a in range(len(sequence)) for b in range(a + 1, len(sequence))
               if sequence[a] > sequence[b])


def q_power(sign, exponent):
    """
    Text of ``sign * q^exponent``, e.g. ``-q^2`` or ``q^-1``.
    """
    if exponent == 0:
        text = '1'
    elif exponent == 1:
        text = 'q'
    else:
        text = 'q^%d' % exponent
    return text if sign > 0 else '-' + text


def minus_q_power(exponent):
    """
    Text of ``(-q)^exponent``.
    """
    return q_power(-1 if exponent % 2 else 1, exponent)


def combination(terms):
    """
    Join ``(coefficient text, word text)`` pairs to an expression.
    """
    pieces = []
    for coefficient, word in terms:
        negative = coefficient.startswith('-')
        coefficient = coefficient.lstrip('-')
        if not word:
            text = coefficient
        elif coefficient == '1':
            text = word
        else:
            text = '%s*%s' % (coefficient, word)
        pieces.append(('- ' if negative else '+ ') + text)

    text = ' '.join(pieces)
    return text[2:] if text.startswith('+ ') else '-' + text[2:]


def _pairs():
    letters = [(i, j) for i in INDICES for j in INDICES]
    for a, (i, j) in enumerate(letters):
        for (k, m) in letters[a + 1:]:
            yield (i, j), (k, m)


def qmatrix_relations():
    """
    The four quantum matrix families as ``(label, expression)`` pairs.
    """
    for (i, j), (k, m) in _pairs():
        if i == k:
            yield 'qmatrix1.%d%d%d' % (i, j, m), combination([
                ('1', '%s.%s' % (u(i, j), u(i, m))), ('-q', '%s.%s' % (u(i, m), u(i, j)))])
        elif j == m:
            yield 'qmatrix2.%d%d%d' % (j, i, k), combination([
                ('1', '%s.%s' % (u(i, j), u(k, j))), ('-q', '%s.%s' % (u(k, j), u(i, j)))])
        elif j > m:
            yield 'qmatrix3.%d%d%d%d' % (i, j, k, m), combination([
                ('1', '%s.%s' % (u(i, j), u(k, m))), ('-1', '%s.%s' % (u(k, m), u(i, j)))])
        else:
            yield 'qmatrix4.%d%d%d%d' % (i, j, k, m), combination([
                ('1', '%s.%s' % (u(i, j), u(k, m))), ('-1', '%s.%s' % (u(k, m), u(i, j))),
                ('-(q-q^-1)', '%s.%s' % (u(i, m), u(k, j)))])


def qmatrix_rules():
    """
    The quantum matrix relations oriented as rewrite rules ``(label, lhs,
    rhs)``: the later letter in row-major order moves to the right.
    """
    for (i, j), (k, m) in _pairs():
        lhs = '%s.%s' % (u(k, m), u(i, j))
        ordered = '%s.%s' % (u(i, j), u(k, m))
        if i == k or j == m:
            label = 'row.%d%d%d' % (i, j, m) if i == k else 'column.%d%d%d' % (j, i, k)
            yield label, lhs, combination([('q^-1', ordered)])
        elif j > m:
            yield 'cross.%d%d%d%d' % (i, j, k, m), lhs, ordered
        else:
            yield 'diagonal.%d%d%d%d' % (i, j, k, m), lhs, combination([
                ('1', ordered), ('-(q-q^-1)', '%s.%s' % (u(i, m), u(k, j)))])


def determinant(rows):
    """
    ``Σ_σ (-q)^{I(σ)} u_{j1σ1} u_{j2σ2} u_{j3σ3} - E_{j1j2j3}``.
    """
    terms = []
    for columns in permutations(INDICES):
        word = '.'.join(u(r, c) for r, c in zip(rows, columns))
        terms.append((minus_q_power(inversions(columns)), word))

    if len(set(rows)) == len(rows):
        sign, exponent = (-1 if inversions(rows) % 2 else 1), inversions(rows)
        terms.append((q_power(-sign, exponent), ''))
    return combination(terms)


def star_image(i, j):
    """
    The star of ``u_ij``: ``(-q)^{j-i}`` times the quantum minor of the
    complementary rows and columns.
    """
    i1, i2 = [r for r in INDICES if r != i]
    j1, j2 = [c for c in INDICES if c != j]
    sign = -1 if (j - i) % 2 else 1
    return combination([
        (q_power(sign, j - i), '%s.%s' % (u(i1, j1), u(i2, j2))),
        (q_power(-sign, j - i + 1), '%s.%s' % (u(i1, j2), u(i2, j1))),
    ])


def matrix_algebra_lines(name, special):
    lines = ['algebra %s' % name]
    for i in INDICES:
        for j in INDICES:
            lines.append('  gen %s : (%d,%d)' % ((u(i, j),) + COLUMN_DEGREES[j]))

    if special:
        for i in INDICES:
            for j in INDICES:
                lines.append('  star %s = %s' % (u(i, j), star_image(i, j)))

    for label, lhs, rhs in qmatrix_rules():
        lines.append('  rule %s : %s -> %s' % (label, lhs, rhs))

    for label, text in qmatrix_relations():
        lines.append('  rel %s : %s' % (label, text))

    if special:
        for rows in ((a, b, c) for a in INDICES for b in INDICES for c in INDICES):
            lines.append('  rel det.%d%d%d : %s' % (rows + (determinant(rows),)))

        for i in INDICES:
            for j in INDICES:
                row = ' + '.join('%s.star(%s)' % (u(i, k), u(j, k)) for k in INDICES)
                column = ' + '.join('star(%s).%s' % (u(k, i), u(k, j)) for k in INDICES)
                unit = ' - 1' if i == j else ''
                lines.append('  rel unitary.row.%d%d : %s%s' % (i, j, row, unit))
                lines.append('  rel unitary.column.%d%d : %s%s' % (i, j, column, unit))

        lines.append('  central det : %s' % determinant((1, 2, 3)))

    lines.append('  complete')
    lines.append('end')
    lines.append('')

    lines.append('hopf %s' % name)
    for i in INDICES:
        for j in INDICES:
            coproduct = ' + '.join('%s @ %s' % (u(i, k), u(k, j)) for k in INDICES)
            lines.append('  coproduct %s = %s' % (u(i, j), coproduct))
    for i in INDICES:
        for j in INDICES:
            lines.append('  counit %s = %d' % (u(i, j), 1 if i == j else 0))
    if special:
        for i in INDICES:
            for j in INDICES:
                lines.append('  antipode %s = %s' % (u(i, j), star_image(j, i)))
    lines.append('end')
    lines.append('')
    return lines


def generated_source():
    lines = ['# generated: quantum matrix algebras', '']
    lines.extend(matrix_algebra_lines('SUq3', special=True))
    lines.extend(matrix_algebra_lines('Mq3', special=False))
    return '\n'.join(lines)


def standard_source():
    """
    The complete DSL text of the shipped catalog.
    """
    with open(os.path.join(DATA, 'standard.qfa'), encoding='utf-8') as fp:
        return generated_source() + '\n' + fp.read()


def build_standard_catalog(field=None):
    """
    Read the shipped catalog over ``field`` (``ℚ(q)`` by default). Catalogs
    are cached per field.
    """
    from qflag.dsl.reader import read_catalog
    from qflag.scalars import SYMBOLIC

    field = SYMBOLIC if field is None else field
    if field.key not in _catalogs:
        log.debug('reading the standard catalog over %r', field)
        _catalogs[field.key] = read_catalog(standard_source(), field)
    return _catalogs[field.key]


def build_standard_presentations(field=None):
    catalog = build_standard_catalog(field)
    return [catalog.presentation(name) for name in STANDARD_NAMES]
