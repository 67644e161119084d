"""
The expression language of the DSL::

    expr    := tensor (('+' | '-') tensor)*
    tensor  := product (('@' | '⊗') product)*
    product := unary (('*' | '.' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ['^' ['-'] INT]
    atom    := INT | 'q' | LETTER | NAME '(' expr (',' expr)* ')' | '(' expr ')'

``*`` and ``.`` both multiply. A name directly followed by ``*`` is a starred
letter (``u*``, ``gamma*``) if such a letter exists, otherwise the ``*`` is a
product. Expressions are parsed once into tuples and evaluated later,
possibly over several coefficient fields.
"""

import logging
import re

from qflag.errors import ParserError, PresentationError
from qflag.freealg.element import (
    Element, TensorElement, flip, multiply, multiply_legs, normalize, tensor, tensor_multiply,
)
from qflag.freealg.maps import apply_free, apply_map

log = logging.getLogger(__name__)

_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(==|[-+*./^@⊗(),]))')

NUMBER = 'number'
NAME = 'name'
OPERATOR = 'op'
END = 'end'

#: functions taking expressions; maps and sections are called by name
FUNCTIONS = (
    'star', 'S', 'Sinv', 'Delta', 'eps', 'mu', 'flip', 'haar', 'E', 'coact', 'lcoact',
    'ell', 'sigma', 'nabla', 'd', 'nf',
)


class Token:

    __slots__ = ('kind', 'value', 'column')

    def __init__(self, kind, value, column):
        self.kind = kind
        self.value = value
        self.column = column

    def __repr__(self):
        return '<Token %s %r at %d>' % (self.kind, self.value, self.column)


def tokenize(text, letters=(), column=1):
    """
    Split ``text`` into tokens; ``letters`` is the set of known letter
    symbols, used to recognize starred letters. Columns are 1-based and
    offset by ``column``.
    """
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if not match or match.end() == position:
            start = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParserError('unexpected character %r' % text[start], column=column + start)

        start = match.start(match.lastindex)
        number, name, op = match.groups()
        position = match.end()

        if number is not None:
            tokens.append(Token(NUMBER, int(number), column + start))
        elif name is not None:
            if text.startswith('*', position) and name + '*' in letters:
                name += '*'
                position += 1
            tokens.append(Token(NAME, name, column + start))
        else:
            tokens.append(Token(OPERATOR, '@' if op == '⊗' else op, column + start))

    tokens.append(Token(END, None, column + len(text)))
    return tokens


class Parser:

    """
    A recursive descent parser producing expression trees::

        Parser('u11*u12 - q*u12*u11').parse()
        # -> ('sub', ('mul', ...), ('mul', ...))
    """

    def __init__(self, text, letters=(), column=1):
        self.text = text
        self.tokens = tokenize(text, letters, column)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.token
        self.index += 1
        return token

    def accept(self, *ops):
        if self.token.kind == OPERATOR and self.token.value in ops:
            return self.advance()
        return None

    def expect(self, op):
        token = self.accept(op)
        if token is None:
            raise self.error('expected %r' % op)
        return token

    def error(self, message, token=None):
        token = token or self.token
        found = 'end of input' if token.kind == END else repr(token.value)
        return ParserError('%s, found %s' % (message, found), column=token.column)

    def parse(self):
        node = self.expression()
        if self.token.kind != END:
            raise self.error('unexpected input')
        return node

    def expression(self):
        node = self.tensor()
        while True:
            token = self.accept('+', '-')
            if token is None:
                return node
            node = ('add' if token.value == '+' else 'sub', node, self.tensor())

    def tensor(self):
        factors = [self.product()]
        while self.accept('@'):
            factors.append(self.product())
        return factors[0] if len(factors) == 1 else ('tensor', factors)

    def product(self):
        node = self.unary()
        while True:
            token = self.accept('*', '.', '/')
            if token is None:
                return node
            node = ('div' if token.value == '/' else 'mul', node, self.unary())

    def unary(self):
        if self.accept('-'):
            return ('neg', self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.accept('^'):
            sign = -1 if self.accept('-') else 1
            token = self.token
            if token.kind != NUMBER:
                raise self.error('expected an integer exponent')
            self.advance()
            node = ('pow', node, sign * token.value)
        return node

    def atom(self):
        token = self.token
        if token.kind == NUMBER:
            self.advance()
            return ('num', token.value)

        if token.kind == NAME:
            self.advance()
            if self.accept('('):
                args = [self.expression()]
                while self.accept(','):
                    args.append(self.expression())
                self.expect(')')
                return ('call', token.value, args, token.column)
            return ('name', token.value, token.column)

        if self.accept('('):
            node = self.expression()
            self.expect(')')
            return node

        raise self.error('expected an expression')


def parse_expression(text, letters=(), column=1):
    return Parser(text, letters, column).parse()


def names(node):
    """
    Yield ``(kind, name, column)`` for every name and call in ``node``.
    """
    kind = node[0]
    if kind == 'name':
        yield 'name', node[1], node[2]
    elif kind == 'call':
        yield 'call', node[1], node[3]
        for arg in node[2]:
            for item in names(arg):
                yield item
    elif kind == 'tensor':
        for factor in node[1]:
            for item in names(factor):
                yield item
    elif kind in ('add', 'sub', 'mul', 'div'):
        for item in names(node[1]):
            yield item
        for item in names(node[2]):
            yield item
    elif kind in ('neg', 'pow'):
        for item in names(node[1]):
            yield item


def split_arguments(text):
    """
    Split ``text`` at commas outside parentheses.
    """
    parts, depth, current = [], 0, ''
    for char in text:
        if char == ',' and depth == 0:
            parts.append(current.strip())
            current = ''
            continue
        depth += char == '('
        depth -= char == ')'
        current += char
    parts.append(current.strip())
    return [p for p in parts if p]


def _is_scalar(value):
    return not isinstance(value, (Element, TensorElement))


class Evaluator:

    """
    Evaluates expression trees against a :class:`~qflag.presentations.Catalog`.

    With ``free`` set, products are formed in the free algebra (relations
    and rules are declared this way); otherwise every product is reduced
    to normal form.

    Letters resolve in the ``algebra`` passed to :meth:`evaluate`, or else
    in the first declared algebra that has them. Arguments of a map
    resolve in its source, arguments of ``ell`` in the domain of the
    section.
    """

    def __init__(self, catalog, free=False):
        self.catalog = catalog
        self.free = free
        self._connections = {}

    @property
    def field(self):
        return self.catalog.field

    def evaluate(self, node, algebra=None, legs=None):
        try:
            return self._evaluate(node, algebra, legs)
        except PresentationError as e:
            raise ParserError(str(e))

    def element(self, node, algebra):
        """
        Evaluate to an element of ``algebra``; scalars become multiples of
        the unit.
        """
        value = self.evaluate(node, algebra)
        if _is_scalar(value):
            return Element.scalar(algebra, value)
        if not isinstance(value, Element) or value.algebra.name != algebra.name:
            raise ParserError('expected an element of %s' % algebra.name)
        return value

    def scalar(self, node):
        value = self.evaluate(node)
        if not _is_scalar(value):
            raise ParserError('expected a scalar')
        return value

    # Nodes ###################################################################

    def _evaluate(self, node, algebra, legs):
        kind = node[0]
        handler = getattr(self, 'evaluate_%s' % kind)
        return handler(node, algebra, legs)

    def evaluate_num(self, node, algebra, legs):
        return self.field.from_int(node[1])

    def evaluate_name(self, node, algebra, legs):
        _, symbol, column = node
        if algebra is None and legs:
            algebra = legs[0]

        if algebra is not None and symbol in algebra.index:
            return Element.generator(algebra, symbol)

        if symbol == 'q':
            return self.field.q

        if algebra is None:
            # the first declared algebra wins; `mod` picks another one
            candidates = [a for a in self.catalog.algebras_with(symbol) if not a.is_ground]
            if candidates:
                return Element.generator(candidates[0], symbol)
            raise ParserError('unknown name %s' % symbol, column=column)

        raise ParserError('%s has no generator %s' % (algebra.name, symbol), column=column)

    def evaluate_neg(self, node, algebra, legs):
        return -self._evaluate(node[1], algebra, legs)

    def _combine(self, a, b, op):
        if _is_scalar(a) and not _is_scalar(b):
            a = self._lift(a, b)
        elif _is_scalar(b) and not _is_scalar(a):
            b = self._lift(b, a)
        if isinstance(a, Element) != isinstance(b, Element) and not _is_scalar(a):
            raise ParserError('cannot add an element and a tensor')
        return a + b if op == 'add' else a - b

    def subtract(self, a, b):
        """
        ``a - b`` where either side may be a scalar.
        """
        return self._combine(a, b, 'sub')

    def _lift(self, c, like):
        if isinstance(like, Element):
            return Element.scalar(like.algebra, c)
        return TensorElement.unit(like.legs).scale(c)

    def evaluate_add(self, node, algebra, legs):
        return self._combine(self._evaluate(node[1], algebra, legs),
                             self._evaluate(node[2], algebra, legs), 'add')

    def evaluate_sub(self, node, algebra, legs):
        return self._combine(self._evaluate(node[1], algebra, legs),
                             self._evaluate(node[2], algebra, legs), 'sub')

    def multiply(self, a, b):
        if _is_scalar(a):
            return b * a if _is_scalar(b) else b.scale(a)
        if _is_scalar(b):
            return a.scale(b)
        if isinstance(a, Element) != isinstance(b, Element):
            raise ParserError('cannot multiply an element and a tensor')
        if self.free:
            return a * b
        if isinstance(a, Element):
            return multiply(a, b)
        return tensor_multiply(a, b)

    def evaluate_mul(self, node, algebra, legs):
        return self.multiply(self._evaluate(node[1], algebra, legs), self._evaluate(node[2], algebra, legs))

    def evaluate_div(self, node, algebra, legs):
        a = self._evaluate(node[1], algebra, legs)
        b = self._evaluate(node[2], algebra, legs)
        if not _is_scalar(b):
            raise ParserError('only scalars can divide')
        inverse = self.field.divide(self.field.one, b)
        return a * inverse if _is_scalar(a) else a.scale(inverse)

    def evaluate_pow(self, node, algebra, legs):
        base = self._evaluate(node[1], algebra, legs)
        exponent = node[2]
        if _is_scalar(base):
            return self.field.power(base, exponent)
        if exponent < 0:
            raise ParserError('negative powers of elements are undefined')

        result = Element.unit(base.algebra) if isinstance(base, Element) else TensorElement.unit(base.legs)
        for _ in range(exponent):
            result = self.multiply(result, base)
        return result

    def evaluate_tensor(self, node, algebra, legs):
        factors = []
        position = 0
        for factor in node[1]:
            leg = legs[position] if legs and position < len(legs) else None
            value = self._evaluate(factor, leg, None)
            if _is_scalar(value):
                if leg is None:
                    raise ParserError('cannot place a scalar in a tensor leg of unknown algebra')
                value = Element.scalar(leg, value)
            factors.append(value)
            position += value.arity if isinstance(value, TensorElement) else 1
        return tensor(*factors)

    # Functions ###############################################################

    def evaluate_call(self, node, algebra, legs):
        _, name, args, column = node
        catalog = self.catalog

        if name in catalog.maps:
            return self._apply(catalog.map(name), args, column)

        if name in catalog.sections:
            section = catalog.section(name)
            self._arity(name, args, 1, column)
            return section(self._element_in(args[0], section.H))

        handler = getattr(self, 'call_%s' % name, None)
        if handler is None:
            raise ParserError('unknown function %s' % name, column=column)
        return handler(args, algebra, legs, column)

    def _arity(self, name, args, count, column):
        if len(args) != count:
            raise ParserError('%s takes %d argument%s' % (name, count, '' if count == 1 else 's'),
                              column=column)

    def _element_in(self, node, algebra):
        value = self._evaluate(node, algebra, None)
        if _is_scalar(value):
            return Element.scalar(algebra, value)
        return value

    def _apply(self, m, args, column):
        self._arity(m.name, args, 1, column)
        x = self._element_in(args[0], m.source)
        if self.free:
            return apply_free(m, x)
        return apply_map(m, x)

    def _argument(self, args, algebra, legs, name, column):
        self._arity(name, args, 1, column)
        value = self._evaluate(args[0], algebra, legs)
        if _is_scalar(value):
            if algebra is None:
                raise ParserError('%s needs an element, not a scalar' % name, column=column)
            value = Element.scalar(algebra, value)
        return value

    def _hopf(self, x, column):
        try:
            return self.catalog.hopf_structure(x.algebra.name)
        except PresentationError:
            raise ParserError('%s has no Hopf structure' % x.algebra.name, column=column)

    def call_star(self, args, algebra, legs, column):
        x = self._argument(args, algebra, legs, 'star', column)
        if self.free:
            return apply_free(x.algebra.star_map, x)
        return x.algebra.star(x)

    def call_S(self, args, algebra, legs, column):
        x = self._argument(args, algebra, legs, 'S', column)
        return self._hopf(x, column).antipode(x)

    def call_Sinv(self, args, algebra, legs, column):
        x = self._argument(args, algebra, legs, 'Sinv', column)
        return self._hopf(x, column).inverse_antipode(x)

    def call_Delta(self, args, algebra, legs, column):
        x = self._argument(args, algebra, legs, 'Delta', column)
        return self._hopf(x, column).coproduct(x)

    def call_eps(self, args, algebra, legs, column):
        x = self._argument(args, algebra, legs, 'eps', column)
        return self._hopf(x, column).counit(x)

    def call_mu(self, args, algebra, legs, column):
        self._arity('mu', args, 1, column)
        return multiply_legs(self._evaluate(args[0], None, legs))

    def call_flip(self, args, algebra, legs, column):
        self._arity('flip', args, 1, column)
        return flip(self._evaluate(args[0], None, legs))

    def call_nf(self, args, algebra, legs, column):
        return normalize(self._argument(args, algebra, legs, 'nf', column))

    def call_haar(self, args, algebra, legs, column):
        x = self._argument(args, algebra, legs, 'haar', column)
        return self.catalog.haar_functional(x.algebra.name)(x)

    def _map_and_element(self, args, name, column):
        if len(args) != 2 or args[0][0] != 'name' or args[0][1] not in self.catalog.maps:
            raise ParserError('%s takes a map and an element' % name, column=column)
        epi = self.catalog.map(args[0][1])
        return epi, self._element_in(args[1], epi.source)

    def call_E(self, args, algebra, legs, column):
        from qflag.hopf.haar import averaging

        epi, x = self._map_and_element(args, 'E', column)
        haar = self.catalog.haar_functional(epi.target.name)
        return averaging(self._hopf(x, column), x, epi, haar)

    def call_coact(self, args, algebra, legs, column):
        epi, x = self._map_and_element(args, 'coact', column)
        return self._hopf(x, column).coaction(x, epi)

    def call_lcoact(self, args, algebra, legs, column):
        epi, x = self._map_and_element(args, 'lcoact', column)
        target = self.catalog.hopf_structure(epi.target.name)
        return self._hopf(x, column).left_coaction(x, epi, target)

    def call_d(self, args, algebra, legs, column):
        from qflag.connection.formulas import universal_d

        return universal_d(self._argument(args, algebra, legs, 'd', column))

    # Connection ##############################################################

    def section(self, column):
        sections = self.catalog.sections
        if len(sections) != 1:
            raise ParserError('ell, sigma and nabla need exactly one declared section', column=column)
        return next(iter(sections.values()))

    def connection(self, column):
        from qflag.connection import ConnectionEll, Splitting

        section = self.section(column)
        if section.name not in self._connections:
            ell = ConnectionEll(section)
            base = self.catalog.subalgebras.get('CP2q')
            flag = self.catalog.subalgebras.get('Flag')
            self._connections[section.name] = (ell, Splitting(ell, base, flag))
        return self._connections[section.name]

    def call_ell(self, args, algebra, legs, column):
        ell, _ = self.connection(column)
        self._arity('ell', args, 1, column)
        return ell(self._element_in(args[0], ell.H))

    def call_sigma(self, args, algebra, legs, column):
        _, splitting = self.connection(column)
        self._arity('sigma', args, 1, column)
        return splitting.sigma(self._element_in(args[0], splitting.A))

    def call_nabla(self, args, algebra, legs, column):
        _, splitting = self.connection(column)
        self._arity('nabla', args, 1, column)
        return splitting.nabla(self._element_in(args[0], splitting.A))
