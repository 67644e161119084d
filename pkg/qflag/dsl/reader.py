"""
Readers for the declaration language.

:class:`LowLevelReader` turns single lines into dictionaries,
:class:`Reader` groups them into declaration records and
:class:`CatalogBuilder` turns records into a
:class:`~qflag.presentations.Catalog`. :func:`read_catalog` and
:func:`parse` combine the three and raise the first error.
"""

import io
import logging
from functools import partial

from qflag.errors import ParserError, PresentationError, QFlagError, ScalarError
from qflag.freealg.element import Element, TensorElement
from qflag.freealg.maps import ANTI, HOM, TENSOR, MapSpec
from qflag.hopf.haar import HaarFamily, HaarFunctional
from qflag.hopf.structure import HopfStructure
from qflag.presentations.catalog import Catalog
from qflag.presentations.presentation import Presentation
from qflag.presentations.subalgebras import DEFAULT_SPAN_LENGTH, Subalgebra

from . import patterns
from .expressions import FUNCTIONS, Evaluator, names, parse_expression, split_arguments
from .script import CHECK_KINDS, EXPRESSION_KINDS, IDENTITY, Check, SuiteScript

log = logging.getLogger(__name__)

#: declaration blocks, closed by ``end``
BLOCKS = ('algebra', 'hopf', 'map', 'haar', 'subalgebra', 'comodule')

#: declarations on a single line
SINGLE_LINES = ('section', 'use', 'check')

_OPTION_KEYS = {'as': 'name', 'anchor': 'anchor', 'mode': 'mode', 'cap': 'cap'}


def _lines(source):
    if isinstance(source, str):
        return io.StringIO(source)
    return source


class LowLevelReader:

    """
    A line reader for the declaration language::

        with open('suite.qfa', encoding='utf-8') as fp:
            reader = LowLevelReader(fp)

    Instances read line by line and yield a ``(result, error)`` tuple for
    each line that is not empty or a comment (``#`` up to the end of the
    line). A line like ``gen u11 : (1,0)`` is converted to::

        {"type": "gen", "symbol": "u11", "degree": (1, 0), "lineno": 3}

    Expression texts are kept unparsed together with the column they start
    at, e.g. ``rel qmatrix1.112 : u11.u12 - q*u12.u11`` yields::

        {"type": "rel", "label": "qmatrix1.112", "expression": "u11.u12 - q*u12.u11",
         "column": 24, "lineno": 7}
    """

    def __init__(self, fp):
        self.fp = _lines(fp)
        self.lineno = 0

    def __iter__(self):
        return self.next()

    def next(self):
        for line in self.fp:
            self.lineno += 1

            try:
                result = self.parse_line(line)
                if result:
                    result['lineno'] = self.lineno
                    yield (result, None)

            except ParserError as e:
                e.lineno = self.lineno
                yield (None, e)

    def parse_line(self, line):
        # Strip comments and trailing whitespace
        line = line.split('#', 1)[0].rstrip()

        content = line.strip()
        if not content:
            return None

        column = len(line) - len(content) + 1
        word = content.split(None, 1)[0]
        handler = getattr(self, 'handle_%s_line' % word.replace('-', '_'), self.handle_image_line)
        return handler(content, column)

    def match(self, pattern, content, what):
        match = pattern.match(content)
        if not match:
            raise ParserError('malformed %s line' % what)
        return match

    # Headers #################################################################

    def handle_algebra_line(self, content, column):
        return {'type': 'algebra', 'name': self.match(patterns.ALGEBRA, content, 'algebra').group(1)}

    def handle_hopf_line(self, content, column):
        return {'type': 'hopf', 'name': self.match(patterns.HOPF, content, 'hopf').group(1)}

    def handle_haar_line(self, content, column):
        return {'type': 'haar', 'name': self.match(patterns.HAAR, content, 'haar').group(1)}

    def handle_map_line(self, content, column):
        match = self.match(patterns.MAP, content, 'map')
        return {
            'type': 'map',
            'name': match.group(1),
            'source': match.group(2),
            'target': match.group(3),
            'kind': match.group(4) or HOM,
        }

    def handle_subalgebra_line(self, content, column):
        match = self.match(patterns.SUBALGEBRA, content, 'subalgebra')
        return {'type': 'subalgebra', 'name': match.group(1), 'algebra': match.group(2)}

    def handle_comodule_line(self, content, column):
        match = self.match(patterns.COMODULE, content, 'comodule')
        return {'type': 'comodule', 'name': match.group(1), 'hopf': match.group(2), 'algebra': match.group(3)}

    def handle_section_line(self, content, column):
        match = self.match(patterns.SECTION, content, 'section')
        return {
            'type': 'section',
            'name': match.group(1),
            'source': match.group(2),
            'target': match.group(3),
            'epi': match.group(4),
        }

    def handle_use_line(self, content, column):
        return {'type': 'use', 'name': self.match(patterns.USE, content, 'use').group(1)}

    def handle_end_line(self, content, column):
        if content != 'end':
            raise ParserError('malformed end line')
        return {'type': 'end'}

    # Algebra blocks ##########################################################

    def handle_gen_line(self, content, column):
        match = self.match(patterns.GEN, content, 'gen')
        return {
            'type': 'gen',
            'symbol': match.group(1),
            'degree': (int(match.group(2)), int(match.group(3))),
        }

    def handle_priority_line(self, content, column):
        match = self.match(patterns.PRIORITY, content, 'priority')
        return {'type': 'priority', 'symbols': match.group(1).split()}

    def handle_star_line(self, content, column):
        match = self.match(patterns.STAR, content, 'star')
        return {
            'type': 'star',
            'symbol': match.group(1),
            'expression': match.group(2),
            'column': column + match.start(2),
        }

    def handle_rule_line(self, content, column):
        match = self.match(patterns.RULE, content, 'rule')
        return {
            'type': 'rule',
            'label': match.group(1),
            'lhs': match.group(2).split('.'),
            'expression': match.group(3),
            'column': column + match.start(3),
        }

    def handle_rel_line(self, content, column):
        match = self.match(patterns.REL, content, 'rel')
        return {
            'type': 'rel',
            'label': match.group(1),
            'expression': match.group(2),
            'column': column + match.start(2),
        }

    def handle_central_line(self, content, column):
        match = self.match(patterns.CENTRAL, content, 'central')
        return {
            'type': 'central',
            'label': match.group(1),
            'expression': match.group(2),
            'column': column + match.start(2),
        }

    def handle_complete_line(self, content, column):
        if content != 'complete':
            raise ParserError('malformed complete line')
        return {'type': 'complete'}

    # Hopf blocks #############################################################

    def handle_structure_line(self, content, column):
        match = self.match(patterns.STRUCTURE, content, 'structure')
        return {
            'type': match.group(1),
            'symbol': match.group(2),
            'expression': match.group(3),
            'column': column + match.start(3),
        }

    handle_coproduct_line = handle_structure_line
    handle_counit_line = handle_structure_line
    handle_antipode_line = handle_structure_line

    # Map blocks ##############################################################

    def handle_image_line(self, content, column):
        match = patterns.IMAGE.match(content)
        if not match:
            raise ParserError('unknown line: %s' % content.split(None, 1)[0], column=column)
        return {
            'type': 'image',
            'symbol': match.group(1),
            'expression': match.group(2),
            'column': column + match.start(2),
        }

    # Haar blocks #############################################################

    def handle_value_line(self, content, column):
        match = self.match(patterns.VALUE, content, 'value')
        pattern = match.group(1)

        symbols = []
        if pattern != '1':
            for factor in pattern.split('.'):
                factor_match = patterns.HAAR_FACTOR.match(factor)
                if not factor_match:
                    raise ParserError('malformed haar pattern %s' % pattern, column=column + match.start(1))
                symbols.append(factor_match.group(1))

        return {'type': 'value', 'pattern': symbols, 'formula': match.group(2).strip()}

    # Subalgebra blocks #######################################################

    def handle_degree_line(self, content, column):
        match = self.match(patterns.DEGREE, content, 'degree')
        return {'type': 'degree', 'degree': (int(match.group(1)), int(match.group(2)))}

    def handle_generated_line(self, content, column):
        match = self.match(patterns.GENERATED, content, 'generated')
        return {'type': 'generated', 'symbols': match.group(1).split(), 'ordered': bool(match.group(2))}

    def handle_coinvariant_line(self, content, column):
        return {'type': 'coinvariant', 'map': self.match(patterns.COINVARIANT, content, 'coinvariant').group(1)}

    def handle_span_length_line(self, content, column):
        match = self.match(patterns.SPAN_LENGTH, content, 'span-length')
        return {'type': 'span-length', 'value': int(match.group(1))}

    # Comodule blocks #########################################################

    def handle_row_line(self, content, column):
        match = self.match(patterns.ROW, content, 'row')
        return {'type': 'row', 'expressions': split_arguments(match.group(1)), 'column': column + match.start(1)}

    def handle_basis_line(self, content, column):
        match = self.match(patterns.BASIS, content, 'basis')
        return {'type': 'basis', 'expressions': split_arguments(match.group(1)), 'column': column + match.start(1)}

    def handle_closed_form_line(self, content, column):
        return {'type': 'closed-form', 'name': self.match(patterns.CLOSED_FORM, content, 'closed-form').group(1)}

    # Checks ##################################################################

    def handle_check_line(self, content, column):
        options = {}
        while True:
            match = patterns.CHECK_OPTION.search(content)
            if not match:
                break
            value = match.group(2)
            if value.startswith('"'):
                value = value[1:-1]
            options[_OPTION_KEYS[match.group(1)]] = value
            content = content[:match.start()]

        match = self.match(patterns.CHECK, content, 'check')
        kind = match.group(1)
        if kind not in CHECK_KINDS and kind not in EXPRESSION_KINDS:
            raise ParserError('unknown check kind %s' % kind, column=column + match.start(1))

        if 'cap' in options:
            try:
                options['cap'] = int(options['cap'])
            except ValueError:
                raise ParserError('cap takes an integer')

        arguments = match.group(2) or ''
        return {
            'type': 'check',
            'kind': kind,
            'arguments': arguments,
            'column': column + (match.start(2) if match.group(2) else len(content)),
            'options': options,
        }


class Reader:

    """
    A higher-level reader for the declaration language::

        with open('suite.qfa', encoding='utf-8') as fp:
            reader = Reader(fp)

    This class should be used as a generator and will return ``(record,
    error)`` tuples for each declaration::

        for record, error in reader:
            if error:
                raise error  # or handle it otherwise

            # handle record

    Block declarations (``algebra``, ``hopf``, ``map``, ``haar``,
    ``subalgebra`` and ``comodule``) are collected up to their ``end`` line
    and returned with their lines::

        {
            "type": "map",
            "name": "pi",
            "source": "SUq3",
            "target": "Uq2",
            "kind": "hom",
            "lineno": 12,
            "lines": [
                {"type": "image", "symbol": "u11", "expression": "u", ...},
                ...
            ],
        }

    ``section``, ``use`` and ``check`` lines are returned as they are. If a
    block contains a parsing error the whole block is skipped and the error
    returned from the generator.
    """

    def __init__(self, fp):
        self.reader = LowLevelReader(fp)

    def __iter__(self):
        return self.next()

    def next(self):
        state = self.State()

        for line, error in self.reader:
            if error:
                yield None, error
                state.fail()
                continue

            line_type = line['type']

            if state.failed:
                if line_type == 'end':
                    state.reset()
                continue

            if line_type in BLOCKS:
                if state.record:
                    yield None, ParserError('%s %s is missing its end' % (
                        state.record['type'], state.record['name']), lineno=line['lineno'])
                state.open(line)

            elif line_type == 'end':
                if not state.record:
                    yield None, ParserError('end outside of a block', lineno=line['lineno'])
                    continue
                yield state.record, None
                state.reset()

            elif state.record:
                if line_type in SINGLE_LINES:
                    yield None, ParserError('%s %s is missing its end' % (
                        state.record['type'], state.record['name']), lineno=line['lineno'])
                    state.reset()
                    yield line, None
                else:
                    state.record['lines'].append(line)

            elif line_type in SINGLE_LINES:
                yield line, None

            else:
                yield None, ParserError('%s line outside of a block' % line_type, lineno=line['lineno'])

        if state.record:
            yield None, ParserError('%s %s is missing its end' % (
                state.record['type'], state.record['name']), lineno=self.reader.lineno)

    class State:
        def __init__(self):
            self.reset()

        def reset(self):
            self.record = None
            self.failed = False

        def open(self, line):
            self.record = dict(line, lines=[])
            self.failed = False

        def fail(self):
            if self.record:
                self.record = None
                self.failed = True


class CatalogBuilder:

    """
    Turns the records of a :class:`Reader` into declarations of ``catalog``.
    Records are handled by ``handle_<type>_record`` methods; checks are
    collected in :attr:`checks` without evaluation.
    """

    #: DSL sources available to ``use``
    LIBRARIES = ('standard',)

    def __init__(self, catalog):
        self.catalog = catalog
        self.free = Evaluator(catalog, free=True)
        self.reduced = Evaluator(catalog)
        self.declarations = []
        self.checks = []
        self.lineno = None
        self.column = None

    @property
    def field(self):
        return self.catalog.field

    def letters(self):
        return {symbol for p in self.catalog.presentations.values() for symbol in p.alphabet}

    def add(self, record):
        self.lineno = record['lineno']
        handler = getattr(self, 'handle_%s_record' % record['type'].replace('-', '_'))
        try:
            handler(record)
        except ParserError as e:
            if e.lineno is None:
                e.lineno = self.lineno
            if e.column is None:
                e.column = self.column
            raise
        except (PresentationError, ScalarError) as e:
            raise ParserError(str(e), lineno=self.lineno)

    def _each(self, record):
        for line in record['lines']:
            self.lineno = line['lineno']
            self.column = line.get('column')
            yield line
        self.column = None

    def _unexpected(self, record, line):
        raise ParserError('%s line in %s block' % (line['type'], record['type']), lineno=line['lineno'])

    def expression(self, line, text=None):
        text = line['expression'] if text is None else text
        return parse_expression(text, self.letters(), line.get('column', 1))

    def _declared(self, kind, name):
        self.declarations.append((kind, name))

    # Algebras ################################################################

    def handle_algebra_record(self, record):
        name = record['name']
        alphabet, degrees = [], []
        presentation = None
        stars = []

        for line in self._each(record):
            if line['type'] == 'gen':
                if presentation is not None:
                    raise ParserError('gen line after the first declaration of %s' % name)
                alphabet.append(line['symbol'])
                degrees.append(line['degree'])
                continue

            if presentation is None:
                presentation = self._open_presentation(name, alphabet, degrees)

            if line['type'] == 'priority':
                presentation.set_priority(line['symbols'])
            elif line['type'] == 'star':
                image = self.free.element(self.expression(line), presentation)
                presentation.set_star(line['symbol'], image)
                stars.append(line['symbol'])
            elif line['type'] == 'rule':
                lhs = tuple(presentation.letter(s) for s in line['lhs'])
                rhs = self.free.element(self.expression(line), presentation)
                presentation.add_rule(line['label'], lhs, rhs)
            elif line['type'] == 'rel':
                label = line['label'] or 'r%d' % (len(presentation.relations) + 1)
                presentation.add_relation(label, self.free.element(self.expression(line), presentation))
            elif line['type'] == 'central':
                presentation.add_central(line['label'], self.free.element(self.expression(line), presentation))
            elif line['type'] == 'complete':
                presentation.complete = True
            else:
                self._unexpected(record, line)

        if presentation is None:
            presentation = self._open_presentation(name, alphabet, degrees)

        # star images are kept in normal form
        for symbol in stars:
            image = presentation.star_images[presentation.letter(symbol)]
            presentation.set_star(symbol, presentation.normal_form(image))

        log.debug('read %r', presentation)

    def _open_presentation(self, name, alphabet, degrees):
        presentation = Presentation(name, self.field, alphabet, degrees)
        presentation.source = self.catalog.source
        self.catalog.add_presentation(presentation)
        self._declared('algebra', name)
        return presentation

    # Hopf structures #########################################################

    def handle_hopf_record(self, record):
        A = self.catalog.presentation(record['name'])
        k = self.catalog.presentation('k')
        images = {'coproduct': {}, 'counit': {}, 'antipode': {}}

        for line in self._each(record):
            if line['type'] not in images:
                self._unexpected(record, line)

            x = A.letter(line['symbol'])
            node = self.expression(line)
            if line['type'] == 'coproduct':
                value = self.reduced.evaluate(node, legs=(A, A))
                if not isinstance(value, TensorElement):
                    raise ParserError('the coproduct of %s must be a tensor' % line['symbol'])
            elif line['type'] == 'counit':
                value = Element.scalar(k, self.reduced.scalar(node))
            else:
                value = A.normal_form(self.reduced.element(node, A))
            images[line['type']][x] = value

        coproduct = MapSpec('coproduct', A, (A, A), TENSOR, images['coproduct'])
        counit = MapSpec('counit', A, k, HOM, images['counit'])
        antipode = MapSpec('antipode', A, A, ANTI, images['antipode']) if images['antipode'] else None
        self.catalog.add_hopf(HopfStructure(A, coproduct, counit, antipode))
        self._declared('hopf', A.name)

    # Maps ####################################################################

    def handle_map_record(self, record):
        source = self.catalog.presentation(record['source'])
        target = self.catalog.presentation(record['target'])

        images = {}
        for line in self._each(record):
            if line['type'] != 'image':
                self._unexpected(record, line)
            x = source.letter(line['symbol'])
            if x in images:
                raise ParserError('%s has two images under %s' % (line['symbol'], record['name']))
            images[x] = target.normal_form(self.reduced.element(self.expression(line), target))

        self.lineno = record['lineno']
        self.catalog.add_map(MapSpec(record['name'], source, target, record['kind'], images))
        self._declared('map', record['name'])

    # Haar functionals ########################################################

    def handle_haar_record(self, record):
        A = self.catalog.presentation(record['name'])

        families = []
        for line in self._each(record):
            if line['type'] != 'value':
                self._unexpected(record, line)
            pattern = [A.letter(s) for s in line['pattern']]
            # fail early on malformed formulas
            self.field.parse(line['formula'], n=1)
            families.append(HaarFamily(pattern, line['formula']))

        self.catalog.add_haar(HaarFunctional(A, families))
        self._declared('haar', A.name)

    # Subalgebras #############################################################

    def handle_subalgebra_record(self, record):
        A = self.catalog.presentation(record['algebra'])
        options = {'degree': None, 'generators': (), 'ordered': False, 'span_length': DEFAULT_SPAN_LENGTH}
        coinvariant = None

        for line in self._each(record):
            if line['type'] == 'degree':
                options['degree'] = line['degree']
            elif line['type'] == 'generated':
                for symbol in line['symbols']:
                    A.letter(symbol)
                options['generators'] = line['symbols']
                options['ordered'] = line['ordered']
            elif line['type'] == 'coinvariant':
                coinvariant = self.catalog.map(line['map'])
            elif line['type'] == 'span-length':
                options['span_length'] = line['value']
            else:
                self._unexpected(record, line)

        subalgebra = Subalgebra(record['name'], A, **options)
        if coinvariant is not None:
            hopf = self.catalog.hopf_structure(A.name)
            subalgebra.attach_coaction(partial(hopf.coaction, epi=coinvariant), coinvariant.name)

        self.catalog.add_subalgebra(subalgebra)
        self._declared('subalgebra', record['name'])

    # Comodules ###############################################################

    def handle_comodule_record(self, record):
        from qflag.connection.idempotents import Comodule

        hopf = self.catalog.hopf_structure(record['hopf'])
        A = self.catalog.presentation(record['algebra'])
        rows, basis, closed_form = [], [], None

        for line in self._each(record):
            if line['type'] == 'row':
                rows.append([self.reduced.element(self.expression(line, text), hopf.algebra)
                             for text in line['expressions']])
            elif line['type'] == 'basis':
                basis.extend(self.reduced.element(self.expression(line, text), A)
                             for text in line['expressions'])
            elif line['type'] == 'closed-form':
                closed_form = line['name']
            else:
                self._unexpected(record, line)

        self.lineno = record['lineno']
        comodule = Comodule(record['name'], hopf, A, rows, basis, closed_form=closed_form)
        self.catalog.add_comodule(comodule)
        self._declared('comodule', record['name'])

    # Single lines ############################################################

    def handle_section_record(self, record):
        from qflag.connection.section import SectionJ

        catalog = self.catalog
        section = SectionJ(record['name'], catalog.hopf_structure(record['target']),
                           catalog.hopf_structure(record['source']), catalog.map(record['epi']))
        catalog.add_section(section)
        self._declared('section', record['name'])

    def handle_use_record(self, record):
        from qflag.presentations.standard import standard_source

        if record['name'] not in self.LIBRARIES:
            raise ParserError('unknown library %s' % record['name'])

        lineno = record['lineno']
        for inner, error in Reader(standard_source()):
            if error:
                raise ParserError('in library %s: %s' % (record['name'], error), lineno=lineno)
            self.add(inner)
        self.lineno = lineno

    def handle_check_record(self, record):
        self.checks.append(record)


def read_records(source, catalog):
    builder = CatalogBuilder(catalog)
    for record, error in Reader(source):
        if error:
            raise error
        builder.add(record)
    return builder


def read_catalog(text, field):
    """
    Read the declarations in ``text`` into a new catalog over ``field``;
    checks are ignored::

        catalog = read_catalog(standard_source(), SYMBOLIC)
        catalog.presentation('Uq2').alphabet
        # -> ['u', 'u*', 'alpha', 'gamma', 'gamma*', 'alpha*']
    """
    catalog = Catalog(field, text)
    read_records(text, catalog)
    return catalog


def parse_check(builder, record):
    """
    Build a :class:`~qflag.dsl.script.Check` from a check record, resolving
    every name it mentions in the catalog of ``builder``.
    """
    options = record['options']
    check = Check(record['kind'], record['lineno'], **options)
    text = record['arguments'].strip()
    check.text = text
    column = record['column']
    catalog = builder.catalog

    if check.kind not in EXPRESSION_KINDS:
        check.parse_arguments(catalog, text.split())
        return check

    if check.kind == IDENTITY:
        match = patterns.IDENTITY.match(text)
        if not match:
            raise ParserError('an identity reads LHS == RHS [mod ALGEBRA]', lineno=check.lineno, column=column)
        sides = [(match.group(1), column + match.start(1)), (match.group(2), column + match.start(2))]
        if match.group(3):
            check.context = match.group(3).split('@')
            for name in check.context:
                if name not in catalog.presentations:
                    raise ParserError('unknown algebra %s' % name, lineno=check.lineno,
                                      column=column + match.start(3))
    else:
        parts = text.split(None, 1)
        if len(parts) != 2:
            raise ParserError('check %s reads SUBALGEBRA EXPRESSION' % check.kind, lineno=check.lineno)
        check.parse_arguments(catalog, parts[:1])
        sides = [(parts[1], column + text.index(parts[1], len(parts[0])))]

    letters = builder.letters()
    for expression, start in sides:
        try:
            node = parse_expression(expression, letters, start)
        except ParserError as e:
            e.lineno = check.lineno
            raise
        _resolve_names(catalog, node, check.lineno)
        check.expressions.append(node)
    return check


def _resolve_names(catalog, node, lineno):
    for kind, name, column in names(node):
        if kind == 'name':
            known = name == 'q' or catalog.algebras_with(name) or name in catalog.maps
        else:
            known = name in FUNCTIONS or name in catalog.maps or name in catalog.sections
        if not known:
            raise ParserError('unknown %s %s' % ('function' if kind == 'call' else 'name', name),
                              lineno=lineno, column=column)


def parse(text, field=None):
    """
    Parse a suite script. Declarations are read into a catalog over
    ``field`` (``ℚ(q)`` by default) and every name used by a check is
    resolved; the first error is raised as
    :class:`~qflag.errors.ParserError`::

        script = parse('use standard\\ncheck hopf-axioms Uq2 anchor "Hopf"')
        script.checks[0].arguments
        # -> ['Uq2']
    """
    from qflag.scalars import SYMBOLIC

    catalog = Catalog(SYMBOLIC if field is None else field, text)
    try:
        builder = read_records(text, catalog)
        checks = [parse_check(builder, record) for record in builder.checks]
    except QFlagError as e:
        if not isinstance(e, ParserError):
            raise ParserError(str(e))
        raise

    log.debug('parsed %d declarations and %d checks', len(builder.declarations), len(checks))
    return SuiteScript(text, catalog, builder.declarations, checks)
