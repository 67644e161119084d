"""
Exact linear algebra on sparse vectors.

Vectors are dictionaries from arbitrary hashable keys (words, tuples of
words) to field elements. :class:`SpanOracle` row-reduces a fixed family
with :class:`sympy.polys.matrices.DomainMatrix`; :class:`EchelonBasis`
grows a basis one vector at a time.
"""

import logging

from sympy.polys.matrices import DomainMatrix

from qflag.errors import UndecidedError

log = logging.getLogger(__name__)


def _reduce(vector, pivot_rows):
    vector = dict(vector)
    for pivot, row in pivot_rows:
        c = vector.get(pivot)
        if not c:
            continue
        for j, r in row.items():
            value = vector.get(j)
            value = -c * r if value is None else value - c * r
            if value:
                vector[j] = value
            else:
                vector.pop(j, None)
    return vector


class SpanOracle:

    """
    The span of ``vectors`` over ``field``. Raises
    :class:`~qflag.errors.UndecidedError` if the matrix has more rows or
    columns than ``cap``.
    """

    def __init__(self, field, vectors, cap=None):
        self.field = field
        self.columns = {}

        rows = {}
        for vector in vectors:
            row = {}
            for key, coeff in vector.items():
                if coeff:
                    row[self.columns.setdefault(key, len(self.columns))] = coeff
            if row:
                rows[len(rows)] = row

        if cap is not None and max(len(rows), len(self.columns)) > cap:
            raise UndecidedError(
                'span of %d vectors in %d coordinates exceeds the cap' % (len(rows), len(self.columns)),
                bound=cap, dimension=max(len(rows), len(self.columns)))

        log.debug('row reducing %d x %d over %r', len(rows), len(self.columns), field)

        self.pivot_rows = []
        if rows:
            matrix = DomainMatrix(rows, (len(rows), len(self.columns)), field.domain)
            reduced, pivots = matrix.rref()
            sparse = reduced.to_sparse().rep
            for i, pivot in enumerate(pivots):
                self.pivot_rows.append((pivot, dict(sparse.get(i, {}))))

    @property
    def rank(self):
        return len(self.pivot_rows)

    def contains(self, vector):
        coordinates = {}
        for key, coeff in vector.items():
            if not coeff:
                continue
            if key not in self.columns:
                return False
            coordinates[self.columns[key]] = coeff
        return not _reduce(coordinates, self.pivot_rows)


class EchelonBasis:

    """
    An incrementally grown echelon basis. :meth:`add` returns ``True`` if
    the vector was independent of the previous ones.
    """

    def __init__(self, field):
        self.field = field
        self.pivot_rows = []

    def __len__(self):
        return len(self.pivot_rows)

    def residue(self, vector):
        return _reduce({k: c for k, c in vector.items() if c}, self.pivot_rows)

    def contains(self, vector):
        return not self.residue(vector)

    def add(self, vector):
        residue = self.residue(vector)
        if not residue:
            return False

        pivot = min(residue, key=repr)
        inverse = self.field.one / residue[pivot]
        row = {k: c * inverse for k, c in residue.items()}

        for i, (p, other) in enumerate(self.pivot_rows):
            c = other.get(pivot)
            if c:
                self.pivot_rows[i] = (p, _reduce(other, [(pivot, row)]))

        self.pivot_rows.append((pivot, row))
        return True


def express(field, basis, vector):
    """
    Coordinates of ``vector`` in the linearly independent family ``basis``,
    or ``None`` if it lies outside their span.
    """
    columns = {}
    rows = {}

    def row_of(key):
        if key not in columns:
            columns[key] = len(columns)
            rows[columns[key]] = {}
        return rows[columns[key]]

    for j, element in enumerate(basis):
        for key, coeff in element.items():
            if coeff:
                row_of(key)[j] = coeff

    target = len(basis)
    for key, coeff in vector.items():
        if coeff:
            row_of(key)[target] = coeff

    if not rows:
        return [field.zero] * len(basis)

    matrix = DomainMatrix(rows, (len(rows), target + 1), field.domain)
    reduced, pivots = matrix.rref()
    if target in pivots:
        return None
    if len(pivots) != len(basis):
        raise ValueError('basis vectors are linearly dependent')

    sparse = reduced.to_sparse().rep
    coordinates = [field.zero] * len(basis)
    for i, pivot in enumerate(pivots):
        coordinates[pivot] = sparse.get(i, {}).get(target, field.zero)
    return coordinates
