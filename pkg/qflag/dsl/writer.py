from contextlib import contextmanager

from qflag.freealg.element import Element, TensorElement
from qflag.freealg.maps import ANTI
from qflag.presentations.subalgebras import DEFAULT_SPAN_LENGTH


def format_expression(x):
    """
    DSL text of an element, a tensor element or a scalar::

        format_expression(Delta(u))
        # -> u @ u
    """
    if isinstance(x, TensorElement):
        return str(x).replace(' ⊗ ', ' @ ')
    return str(x)


class Writer:

    """
    A writer for the declaration language::

        with open('catalog.qfa', 'w', encoding='utf-8') as fp:
            writer = Writer(fp)
            writer.write_catalog(catalog)

    Everything written can be read back with
    :func:`~qflag.dsl.reader.read_catalog`; presentations read back compare
    equal to the ones written.
    """

    def __init__(self, fp):
        self.fp = fp
        self.indent_level = 0

    def write_line(self, line=''):
        indent = '  ' * self.indent_level if line else ''
        self.fp.write(indent + line + '\n')

    def write_comment(self, text):
        self.write_line('# %s' % text)

    @contextmanager
    def write_block(self, header):
        self.write_line(header)
        self.indent_level += 1
        yield
        self.indent_level -= 1
        self.write_line('end')
        self.write_line()

    # Presentations ###########################################################

    def write_presentation(self, presentation):
        """
        Write an ``algebra`` block::

            writer.write_presentation(catalog.presentation('T1'))

            # algebra T1
            #   gen u : (1,0)
            #   ...
            # end
        """
        p = presentation
        with self.write_block('algebra %s' % p.name):
            for symbol, degree in zip(p.alphabet, p.degrees):
                self.write_line('gen %s : %s' % (symbol, degree))

            if p.priority != list(range(len(p.alphabet))):
                self.write_line('priority %s' % ' '.join(p.alphabet[x] for x in p.priority))

            for x, image in sorted(p.star_images.items()):
                self.write_line('star %s = %s' % (p.alphabet[x], format_expression(image)))

            for rule in p.rules:
                self.write_line('rule %s : %s -> %s' % (
                    rule.name, p.format_word(rule.lhs), format_expression(Element(p, rule.rhs))))

            for label, relation in p.relations:
                self.write_line('rel %s : %s' % (label, format_expression(relation)))

            for central in p.central:
                self.write_line('central %s : %s' % (central.name, format_expression(Element(p, central.terms))))

            if p.complete:
                self.write_line('complete')

    # Hopf structures and Haar functionals ####################################

    def write_hopf(self, hopf):
        A = hopf.algebra
        with self.write_block('hopf %s' % A.name):
            for x, symbol in enumerate(A.alphabet):
                self.write_line('coproduct %s = %s' % (symbol, format_expression(hopf.coproduct_map.images[x])))
            for x, symbol in enumerate(A.alphabet):
                value = hopf.counit_map.images[x]
                self.write_line('counit %s = %s' % (symbol, format_expression(value)))
            if hopf.has_antipode:
                for x, symbol in enumerate(A.alphabet):
                    self.write_line('antipode %s = %s' % (symbol, format_expression(hopf.antipode_map.images[x])))

    def write_haar(self, haar):
        A = haar.algebra
        with self.write_block('haar %s' % A.name):
            for family in haar.families:
                pattern = '.'.join('%s^n' % A.alphabet[x] for x in family.pattern) or '1'
                self.write_line('value %s = %s' % (pattern, family.formula))

    # Maps and sections #######################################################

    def write_map(self, m):
        kind = ' anti' if m.kind == ANTI else ''
        with self.write_block('map %s : %s -> %s%s' % (m.name, m.source.name, m.target.name, kind)):
            for x, symbol in enumerate(m.source.alphabet):
                self.write_line('%s = %s' % (symbol, format_expression(m.images[x])))

    def write_section(self, section):
        self.write_line('section %s : %s -> %s via %s' % (
            section.name, section.H.name, section.A.name, section.epi.name))
        self.write_line()

    # Subalgebras and comodules ###############################################

    def write_subalgebra(self, subalgebra):
        s = subalgebra
        with self.write_block('subalgebra %s in %s' % (s.name, s.algebra.name)):
            if s.degree is not None:
                self.write_line('degree %s' % (s.degree,))
            if s.symbols:
                self.write_line('generated %s%s' % (' '.join(s.symbols), ' ordered' if s.ordered else ''))
            if s.coaction_name:
                self.write_line('coinvariant %s' % s.coaction_name)
            if s.span_length != DEFAULT_SPAN_LENGTH:
                self.write_line('span-length %d' % s.span_length)

    def write_comodule(self, comodule):
        c = comodule
        with self.write_block('comodule %s over %s in %s' % (c.name, c.hopf.algebra.name, c.algebra.name)):
            for row in c.rows:
                self.write_line('row %s' % ', '.join(format_expression(x) for x in row))
            self.write_line('basis %s' % ', '.join(format_expression(x) for x in c.basis))
            if c.closed_form:
                self.write_line('closed-form %s' % c.closed_form)

    # Checks ##################################################################

    def write_check(self, check):
        """
        Write a ``check`` line::

            writer.write_check(script.checks[0])

            # check ell j anchor "values of the strong connection"
        """
        words = ['check', check.kind]
        if check.text:
            words.append(check.text)
        if check.name:
            words.append('as "%s"' % check.name)
        if check.anchor:
            words.append('anchor "%s"' % check.anchor)
        if check.mode:
            words.append('mode %s' % check.mode)
        if check.cap:
            words.append('cap %d' % check.cap)
        self.write_line(' '.join(words))

    # Catalogs ################################################################

    def write_catalog(self, catalog):
        """
        Write every declaration of ``catalog`` in dependency order.
        """
        for presentation in catalog.presentations.values():
            if presentation.is_ground:
                continue
            self.write_presentation(presentation)
            if presentation.name in catalog.hopf:
                self.write_hopf(catalog.hopf[presentation.name])

        for m in catalog.maps.values():
            self.write_map(m)
        for haar in catalog.haar.values():
            self.write_haar(haar)
        for subalgebra in catalog.subalgebras.values():
            self.write_subalgebra(subalgebra)
        for section in catalog.sections.values():
            self.write_section(section)
        for comodule in catalog.comodules.values():
            self.write_comodule(comodule)

    def write_script(self, script):
        self.write_catalog(script.catalog)
        for check in script.checks:
            self.write_check(check)
