"""
Idempotent matrices of the modules of sections of associated bundles.

For a comodule with coidempotent matrix ``e`` (``Δ(e_ij) = Σ_k e_ik ⊗
e_kj``) and a basis ``{x_a}`` of the first tensorands of ``ℓ(e_ij)``, write
``ℓ(e_ij) = Σ_a x_a ⊗ ℓ_a(e_ij)``. Then::

    Q_(i,a),(j,b) = E(ℓ_a(e_ij)·x_b)

is an idempotent matrix over the base, ``E`` being the averaging map of the
Haar functional of ``H``.
"""

import logging

from qflag.errors import PresentationError, UndecidedError
from qflag.freealg.element import Element, components, multiply, normalize, tensor
from qflag.hopf.haar import averaging
from qflag.normalform.ideal import DEFAULT_CAP, decide_zero
from qflag.normalform.linalg import express
from qflag.results import CheckResult

from .formulas import CLOSED_FORMS

log = logging.getLogger(__name__)


class Comodule:

    """
    A comodule of ``H`` given by its coidempotent matrix ``rows`` (lists
    of elements of ``H``) and the ``basis`` (elements of ``A``) in which
    the first tensorands of its strong connection values are expanded.
    ``closed_form`` names a builder in
    :data:`qflag.connection.formulas.CLOSED_FORMS`.
    """

    def __init__(self, name, hopf, algebra, rows, basis, closed_form=None):
        self.name = name
        self.hopf = hopf
        self.algebra = algebra
        self.rows = [list(row) for row in rows]
        self.basis = [algebra.normal_form(x) for x in basis]
        self.closed_form = closed_form

        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise PresentationError('comodule %s: the matrix is not square' % name)
        if closed_form is not None and closed_form not in CLOSED_FORMS:
            raise PresentationError('comodule %s: unknown closed form %s' % (name, closed_form))

    def __repr__(self):
        return '<Comodule %s over %s (%d×%d)>' % (self.name, self.hopf.algebra.name, len(self), len(self))

    def __len__(self):
        return len(self.rows)

    def check_coidempotent(self, cap=DEFAULT_CAP):
        """
        ``Δ(e_ij) = Σ_k e_ik ⊗ e_kj``.
        """
        H = self.hopf.algebra
        result = CheckResult('coidempotent %s' % self.name, cap)
        n = len(self)
        for i in range(n):
            for j in range(n):
                expected = tensor(Element(H), Element(H))
                for k in range(n):
                    expected = expected + tensor(self.rows[i][k], self.rows[k][j])
                result.expect_equal('e%d%d' % (i + 1, j + 1), self.hopf.coproduct(self.rows[i][j]), expected)
        return result


class IdempotentMatrix:

    def __init__(self, name, labels, entries, base=None):
        self.name = name
        self.labels = list(labels)
        self.entries = [list(row) for row in entries]
        self.base = base

        if len(self.entries) != len(self.labels) or any(len(r) != len(self.labels) for r in self.entries):
            raise PresentationError('%s: %d labels for a %d-row matrix' % (
                name, len(self.labels), len(self.entries)))

    def __repr__(self):
        return '<IdempotentMatrix %s (%d×%d)>' % (self.name, len(self), len(self))

    def __len__(self):
        return len(self.labels)

    @property
    def algebra(self):
        return self.entries[0][0].algebra

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def square(self):
        n = len(self)
        algebra = self.algebra
        product = []
        for i in range(n):
            row = []
            for k in range(n):
                entry = Element(algebra)
                for j in range(n):
                    if self.entries[i][j] and self.entries[j][k]:
                        entry = entry + multiply(self.entries[i][j], self.entries[j][k])
                row.append(entry)
            product.append(row)
        return product

    def as_dict(self):
        return {
            'name': self.name,
            'labels': [str(label) for label in self.labels],
            'entries': [[str(x) for x in row] for row in self.entries],
        }


def first_tensorand_coordinates(comodule, t):
    """
    ``{a: ℓ_a}`` for ``t = Σ_a x_a ⊗ ℓ_a`` in the declared basis.
    """
    A = comodule.algebra
    field = A.field
    basis = [x.terms for x in comodule.basis]
    parts = {a: {} for a in range(len(basis))}
    for (word,), first in components(normalize(t), leg=0).items():
        coordinates = express(field, basis, first.terms)
        if coordinates is None:
            raise PresentationError('comodule %s: %s is outside the span of the basis' % (
                comodule.name, first))
        for a, c in enumerate(coordinates):
            if c:
                parts[a][word] = parts[a].get(word, field.zero) + c
    return {a: Element(A, terms) for a, terms in parts.items()}


def build_idempotent(comodule, ell, haar, base=None):
    """
    The idempotent of ``comodule`` from the strong connection ``ell`` and
    the Haar functional ``haar`` of ``H``. Rows and columns are labelled
    ``(i, a)`` by a row of the coidempotent matrix and a basis element.
    """
    hopf, epi = ell.hopf, ell.epi
    n, m = len(comodule), len(comodule.basis)
    labels = [(i + 1, a + 1) for i in range(n) for a in range(m)]

    parts = {}
    for i in range(n):
        for j in range(n):
            parts[i, j] = first_tensorand_coordinates(comodule, ell(comodule.rows[i][j]))

    entries = []
    for i, a in labels:
        row = []
        for j, b in labels:
            component = parts[i - 1, j - 1][a - 1]
            if component:
                product = multiply(component, comodule.basis[b - 1])
                row.append(comodule.algebra.normal_form(averaging(hopf, product, epi, haar)))
            else:
                row.append(Element(comodule.algebra))
        entries.append(row)

    log.debug('built the %d×%d idempotent of %s', len(labels), len(labels), comodule.name)
    return IdempotentMatrix(comodule.name, labels, entries, base=base)


def _compare(result, label, entries, expected):
    for i, row in enumerate(entries):
        for j, entry in enumerate(row):
            result.expect_equal('%s[%d,%d]' % (label, i + 1, j + 1), entry, expected[i][j])


def _agrees(entries, expected, cap):
    return all(decide_zero(entry - expected[i][j], cap=cap)
               for i, row in enumerate(entries) for j, entry in enumerate(row))


def check_idempotent(matrix, closed_form=None, variant=None, cap=DEFAULT_CAP):
    """
    ``Q² = Q`` entrywise, every entry in the base, and (optionally) the
    entries against ``closed_form``. ``variant`` is a variant of
    the closed form; a disagreement with it is noted, not failed.
    """
    result = CheckResult('idempotent %s' % matrix.name, cap)

    square = matrix.square()
    _compare(result, 'square', square, matrix.entries)

    if matrix.base is not None:
        for i, row in enumerate(matrix.entries):
            for j, entry in enumerate(row):
                label = 'entry[%d,%d]' % (i + 1, j + 1)
                try:
                    result.expect(label, matrix.base.contains(entry, cap=cap), str(entry))
                except UndecidedError as e:
                    result.undecide(label, e)

    if closed_form is not None:
        _compare(result, 'closed form', matrix.entries, closed_form)

    if variant is not None and not _agrees(matrix.entries, variant, cap):
        result.note('%s: the variant closed form differs from the computed matrix' % matrix.name)

    log.debug('%r', result)
    return result


def check_idempotent_sum(first, second, cap=DEFAULT_CAP):
    """
    ``first + second`` is the identity matrix.
    """
    result = CheckResult('idempotent-sum %s %s' % (first.name, second.name), cap)
    if len(first) != len(second):
        result.expect('size', False, '%d != %d' % (len(first), len(second)))
        return result

    A = first.algebra
    for i in range(len(first)):
        for j in range(len(first)):
            expected = A.unit() if i == j else Element(A)
            result.expect_equal('sum[%d,%d]' % (i + 1, j + 1), first[i, j] + second[i, j], expected)
    return result


def closed_form_matrix(name, A, base=None, variant=False):
    """
    The closed-form idempotent named ``name`` as an :class:`IdempotentMatrix`.
    """
    if name == 'q2':
        entries = CLOSED_FORMS[name](A, variant=variant)
    elif name in CLOSED_FORMS:
        entries = CLOSED_FORMS[name](A)
    else:
        raise PresentationError('unknown closed form %s' % name)
    labels = list(range(1, len(entries) + 1))
    return IdempotentMatrix(name, labels, entries, base=base)

