"""
Parsed check suites.

A check line reads::

    check KIND ARGUMENTS [as NAME] [anchor "TEXT"] [mode MODE] [cap N]

The arguments of each kind are given by :data:`CHECK_KINDS`: a tuple of
positional names (each resolved in a table of the catalog, a trailing
``?`` marks it optional) and a dictionary of flags with the number of
values they take.
"""

from qflag.connection.formulas import CLOSED_FORMS
from qflag.errors import ParserError
from qflag.normalform.ideal import MODES

IDENTITY = 'identity'
MEMBER = 'member'
NOT_MEMBER = 'not-member'

#: kinds whose arguments contain an expression
EXPRESSION_KINDS = (IDENTITY, MEMBER, NOT_MEMBER)

CHECK_KINDS = {
    'presentation': (('algebra',), {}),
    'star': (('algebra',), {}),
    'hopf-axioms': (('hopf',), {}),
    'epimorphism': (('map',), {'triangle': 2, 'graded': 0}),
    'gauge': (('map',), {'length': 1}),
    'haar': (('haar',), {'length': 1}),
    'coideal': (('subalgebra',), {'closed-form': 0}),
    'bicolinearity': (('section',), {'exponents': 1}),
    'strong-connection': (('section', 'subalgebra'), {'products': 0}),
    'ell': (('section',), {}),
    'sigma-nabla': (('section', 'subalgebra', 'subalgebra'), {}),
    'cotensor': (('section', 'subalgebra'), {'length': 1, 'dimension': 1}),
    'idempotent': (('comodule', 'subalgebra?'), {}),
    'idempotent-sum': (('matrix', 'matrix'), {}),
    MEMBER: (('subalgebra',), {}),
    NOT_MEMBER: (('subalgebra',), {}),
}

#: integer valued flags
INTEGER_FLAGS = ('length', 'dimension', 'exponents')

_TABLES = {
    'algebra': 'presentations',
    'hopf': 'hopf',
    'map': 'maps',
    'haar': 'haar',
    'subalgebra': 'subalgebras',
    'section': 'sections',
    'comodule': 'comodules',
}


def resolve(catalog, table, name):
    """
    ``True`` if ``name`` exists in the catalog table ``table``.
    """
    if table == 'matrix':
        return name in catalog.comodules or name in CLOSED_FORMS
    return name in getattr(catalog, _TABLES[table])


class Check:

    """
    One ``check`` line. ``arguments`` holds the resolved positional names,
    ``flags`` the given flags with their values; expression kinds carry
    parsed expression trees in ``expressions`` and the context algebras
    of an identity in ``context``.
    """

    def __init__(self, kind, lineno, name=None, anchor=None, mode=None, cap=None):
        self.kind = kind
        self.lineno = lineno
        self.name = name
        self.anchor = anchor
        self.mode = mode
        self.cap = cap
        self.text = ''
        self.arguments = []
        self.flags = {}
        self.expressions = []
        self.context = None

        if mode is not None and mode not in MODES:
            raise ParserError('unknown mode %s' % mode, lineno=lineno)

    def __repr__(self):
        return '<Check %s line %d>' % (self.label, self.lineno)

    @property
    def label(self):
        if self.name:
            return self.name
        if self.kind in EXPRESSION_KINDS:
            return '%s %s' % (self.kind, self.text)
        return ' '.join([self.kind] + self.arguments)

    def flag(self, name, default=None):
        return self.flags.get(name, default)

    def parse_arguments(self, catalog, words):
        """
        Bind the whitespace separated ``words`` to the positional names and
        flags of this kind, checking names against ``catalog``.
        """
        positional, flags = CHECK_KINDS[self.kind]
        words = list(words)

        for table in positional:
            optional = table.endswith('?')
            table = table.rstrip('?')
            if not words or words[0] in flags:
                if optional:
                    break
                raise ParserError('check %s is missing the %s' % (self.kind, table), lineno=self.lineno)
            name = words.pop(0)
            if not resolve(catalog, table, name):
                raise ParserError('unknown %s %s' % (table, name), lineno=self.lineno)
            self.arguments.append(name)

        while words:
            flag = words.pop(0)
            if flag not in flags:
                raise ParserError('check %s has no option %s' % (self.kind, flag), lineno=self.lineno)
            count = flags[flag]
            if len(words) < count:
                raise ParserError('%s takes %d value%s' % (flag, count, '' if count == 1 else 's'),
                                  lineno=self.lineno)
            values, words = words[:count], words[count:]
            if flag in INTEGER_FLAGS:
                try:
                    values = [int(v) for v in values]
                except ValueError:
                    raise ParserError('%s takes an integer' % flag, lineno=self.lineno)
            if flag == 'triangle':
                for name in values:
                    if not resolve(catalog, 'map', name):
                        raise ParserError('unknown map %s' % name, lineno=self.lineno)
            self.flags[flag] = values[0] if count == 1 else (values or True)

    def as_dict(self):
        return {
            'kind': self.kind,
            'name': self.label,
            'anchor': self.anchor,
            'lineno': self.lineno,
        }


class SuiteScript:

    """
    The result of :func:`qflag.dsl.parse`: the source text, the catalog it
    declares (over ``ℚ(q)``), the declarations by kind and name, and the
    checks in file order.
    """

    def __init__(self, source, catalog, declarations, checks):
        self.source = source
        self.catalog = catalog
        self.declarations = list(declarations)
        self.checks = list(checks)

    def __repr__(self):
        return '<SuiteScript: %d declarations, %d checks>' % (len(self.declarations), len(self.checks))

    def __len__(self):
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)

    def is_empty(self):
        return not self.declarations and not self.checks
