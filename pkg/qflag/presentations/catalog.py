import logging

from qflag.errors import PresentationError
from qflag.presentations.presentation import ground

log = logging.getLogger(__name__)


class Catalog:

    """
    Everything declared by a DSL source, by name: presentations, maps, Hopf
    structures, Haar functionals, subalgebras, comodules and sections. A
    catalog always contains the ground field ``k``.

    A catalog read over ``ℚ(q)`` can be specialized; the specialized catalog
    is read again from the same source over ``ℚ``::

        catalog = build_standard_catalog()
        catalog.specialize(QQ(1, 3)).presentation('SUq3').field
        # -> SpecializedField(1/3)
    """

    def __init__(self, field, source=''):
        self.field = field
        self.source = source
        self.presentations = {}
        self.maps = {}
        self.hopf = {}
        self.haar = {}
        self.subalgebras = {}
        self.comodules = {}
        self.sections = {}
        self._specialized = {}

        self.add_presentation(ground(field))

    def __repr__(self):
        return '<Catalog over %r: %s>' % (self.field, ', '.join(self.presentations))

    def _add(self, table, kind, name, value):
        if name in table:
            raise PresentationError('%s %s is declared twice' % (kind, name))
        table[name] = value
        log.debug('declared %s %s', kind, name)
        return value

    def _get(self, table, kind, name):
        try:
            return table[name]
        except KeyError:
            raise PresentationError('unknown %s: %s' % (kind, name))

    def add_presentation(self, presentation):
        return self._add(self.presentations, 'algebra', presentation.name, presentation)

    def add_map(self, m):
        return self._add(self.maps, 'map', m.name, m)

    def add_hopf(self, structure):
        return self._add(self.hopf, 'hopf structure', structure.algebra.name, structure)

    def add_haar(self, haar):
        return self._add(self.haar, 'haar functional', haar.algebra.name, haar)

    def add_subalgebra(self, subalgebra):
        return self._add(self.subalgebras, 'subalgebra', subalgebra.name, subalgebra)

    def add_comodule(self, comodule):
        return self._add(self.comodules, 'comodule', comodule.name, comodule)

    def add_section(self, section):
        return self._add(self.sections, 'section', section.name, section)

    def presentation(self, name):
        return self._get(self.presentations, 'algebra', name)

    def map(self, name):
        return self._get(self.maps, 'map', name)

    def hopf_structure(self, name):
        return self._get(self.hopf, 'hopf structure', name)

    def haar_functional(self, name):
        return self._get(self.haar, 'haar functional', name)

    def subalgebra(self, name):
        return self._get(self.subalgebras, 'subalgebra', name)

    def comodule(self, name):
        return self._get(self.comodules, 'comodule', name)

    def section(self, name):
        return self._get(self.sections, 'section', name)

    def algebras_with(self, symbol):
        return [p for p in self.presentations.values() if symbol in p.index]

    def specialize(self, q0):
        """
        The catalog read again from its source over ``ℚ`` at ``q = q0``.
        """
        from qflag.dsl.reader import read_catalog
        from qflag.scalars import SpecializedField

        field = SpecializedField(q0)
        if field.key not in self._specialized:
            log.debug('specializing catalog at %s', field.key)
            self._specialized[field.key] = read_catalog(self.source, field)
        return self._specialized[field.key]
