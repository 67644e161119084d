"""
Finitely presented algebras over a coefficient field.

A :class:`Presentation` carries an alphabet with ℤ²-degrees, star images,
raw relations, oriented rewrite rules and central relations. Words are
ordered by length, then by their exponent vector read in the priority
order of the letters, then lexicographically by alphabet index. Rewrite
rules must decrease this order.
"""

import itertools
import logging
from collections import namedtuple

from qflag.errors import PresentationError
from qflag.freealg.element import Element, TensorElement
from qflag.freealg.maps import ANTI, MapSpec
from qflag.normalform.rewriter import CentralRelation, Rewriter, Rule

log = logging.getLogger(__name__)

INHOMOGENEOUS = 'inhomogeneous'


class Degree(namedtuple('Degree', 'm n')):

    __slots__ = ()

    def __add__(self, other):
        return Degree(self.m + other[0], self.n + other[1])

    def __sub__(self, other):
        return Degree(self.m - other[0], self.n - other[1])

    def __neg__(self):
        return Degree(-self.m, -self.n)

    def __str__(self):
        return '(%d,%d)' % (self.m, self.n)


ZERO_DEGREE = Degree(0, 0)


class Presentation:

    """
    A presented algebra named ``name`` over ``field``.

    ``alphabet`` lists the letter symbols, ``degrees`` their ℤ²-degrees and
    ``priority`` (optional) the order in which exponents are compared.
    """

    def __init__(self, name, field, alphabet, degrees, priority=None, ground=False):
        if len(set(alphabet)) != len(alphabet):
            raise PresentationError('%s: duplicate letters in alphabet' % name)

        self.name = name
        self.field = field
        self.alphabet = list(alphabet)
        self.index = {symbol: i for i, symbol in enumerate(self.alphabet)}
        self.degrees = [Degree(*d) for d in degrees]
        if len(self.degrees) != len(self.alphabet):
            raise PresentationError('%s: every letter needs a degree' % name)

        self.priority = list(range(len(self.alphabet)))
        if priority is not None:
            self.set_priority(priority)

        self.is_ground = ground
        self.complete = False
        self.star_images = {}
        self.relations = []
        self.rules = []
        self.central = []
        self.source = None
        self._rewriter = None
        self._star_map = None
        self._specialized = {}
        self._words = {}

    def __repr__(self):
        return '<Presentation %s (%d letters) over %r>' % (self.name, len(self.alphabet), self.field)

    # Letters and words #######################################################

    def letter(self, symbol):
        try:
            return self.index[symbol]
        except KeyError:
            raise PresentationError('%s has no generator %s' % (self.name, symbol))

    def set_priority(self, symbols):
        order = [self.letter(s) for s in symbols]
        if sorted(order) != list(range(len(self.alphabet))):
            raise PresentationError('%s: priority must list every letter once' % self.name)
        self.priority = order
        self._invalidate()

    def exponents(self, word):
        counts = [0] * len(self.alphabet)
        for x in word:
            counts[x] += 1
        return counts

    def key(self, word):
        counts = self.exponents(word)
        return (len(word), tuple(counts[p] for p in self.priority), tuple(word))

    def word_from_exponents(self, exponents):
        return tuple(i for i, e in enumerate(exponents) for _ in range(e))

    def format_word(self, word):
        return '.'.join(self.alphabet[x] for x in word)

    def element(self, symbol):
        return Element.generator(self, symbol)

    def unit(self):
        return Element.unit(self)

    def words(self, length, degree=None):
        """
        All words of the given length (and degree), ascending in the word
        order.
        """
        key = (length, degree)
        if key not in self._words:
            words = itertools.product(range(len(self.alphabet)), repeat=length)
            if degree is not None:
                degree = Degree(*degree)
                words = (w for w in words if self.degree_of_word(w) == degree)
            self._words[key] = sorted(words, key=self.key)
        return self._words[key]

    # Gradings ################################################################

    def as_degree(self, value):
        return Degree(*value)

    def degree_of_word(self, word):
        m = n = 0
        for x in word:
            d = self.degrees[x]
            m += d.m
            n += d.n
        return Degree(m, n)

    def degree_of(self, a):
        """
        The common degree of the words of ``a``, ``None`` for zero and
        :data:`INHOMOGENEOUS` if the words disagree.
        """
        degrees = {self.degree_of_word(w) for w in a.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            return INHOMOGENEOUS
        return degrees.pop()

    def homogeneous_components(self, a):
        parts = {}
        for w, c in a.terms.items():
            parts.setdefault(self.degree_of_word(w), {})[w] = c
        return {d: Element(self, terms) for d, terms in sorted(parts.items())}

    # Declarations ############################################################

    def _invalidate(self):
        self._rewriter = None

    def set_star(self, symbol, image):
        self.star_images[self.letter(symbol)] = image
        self._star_map = None

    def add_relation(self, label, element):
        if not element:
            raise PresentationError('%s: relation %s is zero' % (self.name, label))
        if self.degree_of(element) == INHOMOGENEOUS:
            raise PresentationError('%s: relation %s is not homogeneous' % (self.name, label))
        self.relations.append((label, element))

    def add_rule(self, label, lhs, rhs):
        lhs = tuple(lhs)
        lhs_key = self.key(lhs)
        for word in rhs.terms:
            if self.key(word) >= lhs_key:
                raise PresentationError('%s: rule %s does not decrease %s' % (
                    self.name, label, self.format_word(word) or '1'))
        self.rules.append(Rule(label, lhs, dict(rhs.terms)))
        self._invalidate()

    def add_central(self, label, element):
        if self.degree_of(element) == INHOMOGENEOUS:
            raise PresentationError('%s: central relation %s is not homogeneous' % (self.name, label))
        self.central.append(CentralRelation(label, self, dict(element.terms)))
        self._invalidate()

    # Star structure ##########################################################

    @property
    def has_star(self):
        return len(self.star_images) == len(self.alphabet)

    @property
    def star_map(self):
        if self._star_map is None:
            if not self.has_star:
                raise PresentationError('%s has no star structure' % self.name)
            self._star_map = MapSpec('star', self, self, ANTI, self.star_images)
        return self._star_map

    def star(self, a):
        return self.star_map(a)

    # Normal forms ############################################################

    @property
    def rewriter(self):
        if self._rewriter is None:
            self._rewriter = Rewriter(self)
        return self._rewriter

    def normal_form(self, a):
        return self.rewriter.normal_form(a)

    def normal_form_word(self, word):
        return self.rewriter.normal_form_word(word)

    def product(self, w1, w2):
        return self.rewriter.product(w1, w2)

    def multiply(self, a, b):
        from qflag.freealg.element import multiply
        return multiply(a, b)

    # Specialization ##########################################################

    def specialize(self, q0):
        """
        The same presentation over ``ℚ`` at ``q = q0``, read again from its
        DSL source.
        """
        from qflag.dsl.reader import read_catalog
        from qflag.scalars import SpecializedField

        if self.source is None:
            raise PresentationError('%s has no DSL source to specialize' % self.name)

        field = SpecializedField(q0)
        if field.key not in self._specialized:
            catalog = read_catalog(self.source, field)
            self._specialized[field.key] = catalog.presentation(self.name)
        return self._specialized[field.key]

    def convert(self, a):
        """
        Carry ``a`` (an element of a presentation with the same name over
        ``ℚ(q)``) into this presentation, converting coefficients.
        """
        return convert_element(a, (self,))

    # Comparison ##############################################################

    def structure(self):
        def terms(element):
            return sorted(element.terms.items(), key=lambda item: self.key(item[0]))

        return (
            self.name,
            tuple(self.alphabet),
            tuple(self.degrees),
            tuple(self.priority),
            self.complete,
            tuple(sorted((k, tuple(terms(v))) for k, v in self.star_images.items())),
            tuple((label, tuple(terms(r))) for label, r in self.relations),
            tuple((r.name, r.lhs, tuple(sorted(r.rhs.items(), key=lambda i: self.key(i[0]))))
                  for r in self.rules),
            tuple((c.name, tuple(sorted(c.terms.items(), key=lambda i: self.key(i[0]))))
                  for c in self.central),
        )

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.structure() == other.structure()

    def __ne__(self, other):
        return not self == other

    __hash__ = object.__hash__


def convert_element(x, legs):
    """
    Rebuild ``x`` over the presentations ``legs`` (same names, possibly a
    different coefficient field).
    """
    if isinstance(x, Element):
        algebra = legs[0]
        return Element(algebra, {w: algebra.field.from_scalar(c) for w, c in x.terms.items()})

    field = legs[0].field
    return TensorElement(legs, {w: field.from_scalar(c) for w, c in x.terms.items()})


def ground(field):
    """
    The ground field as a presentation without generators.
    """
    k = Presentation('k', field, [], [], ground=True)
    k.complete = True
    return k
