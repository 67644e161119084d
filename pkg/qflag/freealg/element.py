"""
Words, elements of free algebras and their tensor products.

A word is a tuple of letter indices into the alphabet of a presentation; the
empty tuple is the unit. An :class:`Element` is a finite linear combination of
words of one presentation, a :class:`TensorElement` a linear combination of
tuples of words, one per leg.

Arithmetic with ``+``, ``-`` and ``*`` is the free-algebra arithmetic: ``*``
concatenates words without applying any relation. Reduced products go
through :func:`multiply`, :func:`tensor_multiply` and friends, which use the
normal forms of the presentations involved.
"""

import re

from qflag.errors import PresentationError

_SIMPLE_COEFFICIENT = re.compile(r'^-?[\w^]+$')


def _coerce(field, value):
    if isinstance(value, int):
        return field.from_int(value)
    return value


def _add_term(terms, key, coeff):
    value = terms.get(key)
    value = coeff if value is None else value + coeff
    if value:
        terms[key] = value
    else:
        terms.pop(key, None)


def format_term(field, coeff, text):
    """
    Format ``coeff * text``; ``text`` is ``None`` for the unit word.
    """
    if text is None:
        coefficient = field.format(coeff)
        if not _SIMPLE_COEFFICIENT.match(coefficient):
            coefficient = '(%s)' % coefficient
        return coefficient

    if coeff == field.one:
        return text
    if coeff == -field.one:
        return '-' + text

    coefficient = field.format(coeff)
    if not _SIMPLE_COEFFICIENT.match(coefficient):
        coefficient = '(%s)' % coefficient

    return '%s*%s' % (coefficient, text)


def join_terms(pieces):
    if not pieces:
        return '0'

    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith('-'):
            text += ' - ' + piece[1:]
        else:
            text += ' + ' + piece
    return text


class Element:

    """
    An element of the free algebra on the alphabet of ``algebra``::

        str(Element.generator(A, 'u11') * Element.generator(A, 'u12'))
        # -> u11.u12
    """

    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        if terms:
            for word, coeff in terms.items():
                if coeff:
                    self.terms[tuple(word)] = coeff

    @classmethod
    def zero(cls, algebra):
        return cls(algebra)

    @classmethod
    def unit(cls, algebra):
        return cls(algebra, {(): algebra.field.one})

    @classmethod
    def scalar(cls, algebra, coeff):
        return cls(algebra, {(): _coerce(algebra.field, coeff)})

    @classmethod
    def word(cls, algebra, word, coeff=None):
        if coeff is None:
            coeff = algebra.field.one
        return cls(algebra, {tuple(word): _coerce(algebra.field, coeff)})

    @classmethod
    def generator(cls, algebra, symbol):
        return cls.word(algebra, (algebra.letter(symbol),))

    @property
    def field(self):
        return self.algebra.field

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def copy(self):
        return Element(self.algebra, self.terms)

    def coefficient(self, word):
        return self.terms.get(tuple(word), self.field.zero)

    def max_length(self):
        return max((len(word) for word in self.terms), default=0)

    def sorted_terms(self):
        key = self.algebra.key
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError('expected Element, got %r' % type(other).__name__)
        if other.algebra.name != self.algebra.name:
            raise PresentationError(
                'mixed presentations: %s and %s' % (self.algebra.name, other.algebra.name))

    def __add__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(self.algebra, other)
        self._check(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            _add_term(terms, word, coeff)
        return Element(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(self.algebra, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, coeff):
        coeff = _coerce(self.field, coeff)
        if not coeff:
            return Element(self.algebra)
        return Element(self.algebra, {w: c * coeff for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return NotImplemented
        if not isinstance(other, Element):
            return self.scale(other)

        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _add_term(terms, w1 + w2, c1 * c2)
        return Element(self.algebra, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Element.scalar(self.algebra, other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra.name == other.algebra.name and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        pieces = []
        for word, coeff in self.sorted_terms():
            text = self.algebra.format_word(word) if word else None
            pieces.append(format_term(self.field, coeff, text))
        return join_terms(pieces)

    def __repr__(self):
        return '<Element %s: %s>' % (self.algebra.name, self)


class TensorElement:

    """
    An element of ``A_1 ⊗ … ⊗ A_n`` for ``n >= 2``, stored as a map from
    tuples of words to coefficients. All legs share one coefficient field.
    """

    __slots__ = ('legs', 'terms')

    def __init__(self, legs, terms=None):
        self.legs = tuple(legs)
        if len(self.legs) < 2:
            raise PresentationError('tensor elements need at least two legs')

        self.terms = {}
        if terms:
            for words, coeff in terms.items():
                if coeff:
                    self.terms[tuple(tuple(w) for w in words)] = coeff

    @classmethod
    def unit(cls, legs):
        return cls(legs, {tuple(() for _ in legs): legs[0].field.one})

    @property
    def field(self):
        return self.legs[0].field

    @property
    def arity(self):
        return len(self.legs)

    def leg_names(self):
        return tuple(leg.name for leg in self.legs)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        keys = [leg.key for leg in self.legs]

        def sort_key(item):
            return tuple(k(w) for k, w in zip(keys, item[0]))

        return sorted(self.terms.items(), key=sort_key, reverse=True)

    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise TypeError('expected TensorElement, got %r' % type(other).__name__)
        if other.leg_names() != self.leg_names():
            raise PresentationError('mismatched legs: %s and %s' % (
                ' ⊗ '.join(self.leg_names()), ' ⊗ '.join(other.leg_names())))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for words, coeff in other.terms.items():
            _add_term(terms, words, coeff)
        return TensorElement(self.legs, terms)

    def __neg__(self):
        return TensorElement(self.legs, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        coeff = _coerce(self.field, coeff)
        return TensorElement(self.legs, {w: c * coeff for w, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)

        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                words = tuple(a + b for a, b in zip(w1, w2))
                _add_term(terms, words, c1 * c2)
        return TensorElement(self.legs, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.leg_names() == other.leg_names() and self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __str__(self):
        pieces = []
        for words, coeff in self.sorted_terms():
            texts = [leg.format_word(w) if w else '1' for leg, w in zip(self.legs, words)]
            first = texts[0] if words[0] else None
            head = format_term(self.field, coeff, first)
            pieces.append(' ⊗ '.join([head] + texts[1:]))
        return join_terms(pieces)

    def __repr__(self):
        return '<TensorElement %s: %s>' % (' ⊗ '.join(self.leg_names()), self)


def tensor(*factors):
    """
    Outer product of elements and tensor elements; legs are concatenated.
    Ground-field legs are dropped.
    """
    legs = []
    terms = {(): None}
    for factor in factors:
        if isinstance(factor, Element):
            factor_legs = (factor.algebra,)
            factor_terms = {(w,): c for w, c in factor.terms.items()}
        else:
            factor_legs = factor.legs
            factor_terms = factor.terms

        keep = [i for i, leg in enumerate(factor_legs) if not leg.is_ground]
        legs.extend(factor_legs[i] for i in keep)

        product = {}
        for words, coeff in terms.items():
            for fwords, fcoeff in factor_terms.items():
                c = fcoeff if coeff is None else coeff * fcoeff
                _add_term(product, words + tuple(fwords[i] for i in keep), c)
        terms = product

    return _relinearize(legs, terms)


def _relinearize(legs, terms):
    if not legs:
        raise PresentationError('tensor product of ground fields has no legs')
    if len(legs) == 1:
        return Element(legs[0], {words[0]: c for words, c in terms.items()})
    return TensorElement(legs, terms)


def _word_product(algebra, w1, w2):
    return algebra.product(w1, w2)


def multiply(a, b):
    """
    Product of two elements of one presentation, in normal form.
    """
    a._check(b)
    algebra = a.algebra
    terms = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            for w, c in _word_product(algebra, w1, w2).items():
                _add_term(terms, w, c1 * c2 * c)
    return Element(algebra, terms)


def normalize(x):
    """
    Legwise normal form of an element or tensor element.
    """
    if isinstance(x, Element):
        return x.algebra.normal_form(x)

    terms = {}
    for words, coeff in x.terms.items():
        expansions = [leg.normal_form_word(w) for leg, w in zip(x.legs, words)]
        _expand_into(terms, expansions, coeff)
    return TensorElement(x.legs, terms)


def _expand_into(terms, expansions, coeff, prefix=()):
    if len(prefix) == len(expansions):
        _add_term(terms, prefix, coeff)
        return

    for w, c in expansions[len(prefix)].items():
        _expand_into(terms, expansions, coeff * c, prefix + (w,))


def tensor_multiply(t1, t2):
    """
    Legwise product of two tensor elements with equal legs, in normal form.
    """
    t1._check(t2)
    terms = {}
    for w1, c1 in t1.terms.items():
        for w2, c2 in t2.terms.items():
            expansions = [leg.product(a, b) for leg, a, b in zip(t1.legs, w1, w2)]
            _expand_into(terms, expansions, c1 * c2)
    return TensorElement(t1.legs, terms)


def left_multiply(a, t, leg=0):
    """
    Multiply the given leg of ``t`` from the left by the element ``a``.
    """
    algebra = t.legs[leg]
    if a.algebra.name != algebra.name:
        raise PresentationError('cannot multiply %s into leg %s' % (a.algebra.name, algebra.name))

    terms = {}
    for words, coeff in t.terms.items():
        for w, c in a.terms.items():
            for nw, nc in algebra.product(w, words[leg]).items():
                _add_term(terms, words[:leg] + (nw,) + words[leg + 1:], coeff * c * nc)
    return TensorElement(t.legs, terms)


def right_multiply(t, a, leg=-1):
    """
    Multiply the given leg of ``t`` from the right by the element ``a``.
    """
    leg = leg % t.arity
    algebra = t.legs[leg]
    if a.algebra.name != algebra.name:
        raise PresentationError('cannot multiply %s into leg %s' % (a.algebra.name, algebra.name))

    terms = {}
    for words, coeff in t.terms.items():
        for w, c in a.terms.items():
            for nw, nc in algebra.product(words[leg], w).items():
                _add_term(terms, words[:leg] + (nw,) + words[leg + 1:], coeff * c * nc)
    return TensorElement(t.legs, terms)


def multiply_legs(t):
    """
    The multiplication map ``A ⊗ A → A``.
    """
    if t.arity != 2 or t.legs[0].name != t.legs[1].name:
        raise PresentationError('multiplication needs two legs in one algebra')

    algebra = t.legs[0]
    terms = {}
    for (w1, w2), coeff in t.terms.items():
        for w, c in algebra.product(w1, w2).items():
            _add_term(terms, w, coeff * c)
    return Element(algebra, terms)


def contract_middle(t):
    """
    ``id ⊗ μ ⊗ id`` on a four-fold tensor whose middle legs share an algebra.
    """
    if t.arity != 4 or t.legs[1].name != t.legs[2].name:
        raise PresentationError('middle contraction needs four legs')

    algebra = t.legs[1]
    terms = {}
    for (w1, w2, w3, w4), coeff in t.terms.items():
        for w, c in algebra.product(w2, w3).items():
            _add_term(terms, (w1, w, w4), coeff * c)
    return TensorElement((t.legs[0], algebra, t.legs[3]), terms)


def sandwich(t1, t2):
    """
    ``a1 ⊗ a2`` and ``a3 ⊗ a4`` go to ``a3·a1 ⊗ a2·a4``.
    """
    t1._check(t2)
    if t1.arity != 2:
        raise PresentationError('sandwich needs two-leg tensors')

    first, second = t1.legs
    terms = {}
    for (a1, a2), c1 in t1.terms.items():
        for (a3, a4), c2 in t2.terms.items():
            left = first.product(a3, a1)
            right = second.product(a2, a4)
            _expand_into(terms, [left, right], c1 * c2)
    return TensorElement(t1.legs, terms)


def flip(t):
    if t.arity != 2:
        raise PresentationError('flip needs two legs')
    return TensorElement((t.legs[1], t.legs[0]),
                         {(w2, w1): c for (w1, w2), c in t.terms.items()})


def components(t, leg):
    """
    Coefficients of a normalized tensor element in the normal-word basis of
    all legs except ``leg``: a map from the tuple of the other legs' words to
    an :class:`Element` of the chosen leg.
    """
    leg = leg % t.arity
    algebra = t.legs[leg]
    grouped = {}
    for words, coeff in t.terms.items():
        rest = words[:leg] + words[leg + 1:]
        _add_term(grouped.setdefault(rest, {}), words[leg], coeff)
    return {rest: Element(algebra, terms) for rest, terms in grouped.items() if terms}


def from_components(legs, leg, parts):
    """
    Inverse of :func:`components`.
    """
    terms = {}
    for rest, element in parts.items():
        for w, c in element.terms.items():
            words = rest[:leg] + (w,) + rest[leg:]
            _add_term(terms, words, c)
    return TensorElement(legs, terms)


def map_leg(t, leg, fn, image_legs=None):
    """
    Apply the linear map ``fn`` (word element in, element or tensor element
    out) to one leg of ``t``. The leg is replaced by the legs of the images;
    images in the ground field drop it. ``image_legs`` fixes the new legs
    for a zero ``t``.
    """
    leg = leg % t.arity
    algebra = t.legs[leg]
    images = {}
    legs = None
    terms = {}
    for words, coeff in t.terms.items():
        word = words[leg]
        if word not in images:
            images[word] = fn(Element.word(algebra, word))
        image = images[word]

        if isinstance(image, Element):
            new_legs = () if image.algebra.is_ground else (image.algebra,)
            image_terms = {(() if image.algebra.is_ground else (w,)): c for w, c in image.terms.items()}
        else:
            new_legs = image.legs
            image_terms = image.terms

        if legs is None:
            legs = t.legs[:leg] + new_legs + t.legs[leg + 1:]
        for key, c in image_terms.items():
            _add_term(terms, words[:leg] + key + words[leg + 1:], coeff * c)

    if legs is None:
        if image_legs is None:
            raise PresentationError('cannot determine the legs of the image of a zero tensor')
        legs = t.legs[:leg] + tuple(image_legs) + t.legs[leg + 1:]
    return _relinearize(list(legs), terms)
