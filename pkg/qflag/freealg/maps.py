"""
Maps defined by their values on generators.

A :class:`MapSpec` is extended to words multiplicatively (``hom`` and
``tensor``) or anti-multiplicatively (``anti``). Images are computed
prefix by prefix and memoized per word, with every intermediate product
brought into normal form in the target.
"""

import logging

from qflag.errors import PresentationError
from qflag.freealg.element import (
    Element, TensorElement, _add_term, _relinearize, multiply, tensor_multiply,
)

log = logging.getLogger(__name__)

HOM = 'hom'
ANTI = 'anti'
TENSOR = 'tensor'

KINDS = (HOM, ANTI, TENSOR)


class MapSpec:

    """
    A map from the presentation ``source`` into ``targets``: a single
    presentation for ``hom`` and ``anti`` maps, a tuple of presentations for
    ``tensor`` maps (e.g. a coproduct into ``A ⊗ A``). ``images`` maps letter
    indices of the source to :class:`Element` or :class:`TensorElement`
    values.
    """

    def __init__(self, name, source, targets, kind, images):
        if kind not in KINDS:
            raise PresentationError('unknown map kind: %s' % kind)

        if not isinstance(targets, (tuple, list)):
            targets = (targets,)

        self.name = name
        self.source = source
        self.targets = tuple(targets)
        self.kind = kind
        self.images = dict(images)
        self._cache = {}

        missing = [source.alphabet[i] for i in range(len(source.alphabet)) if i not in self.images]
        if missing:
            raise PresentationError('map %s: no image for %s' % (name, ', '.join(missing)))

        names = tuple(t.name for t in self.targets)
        for letter, image in self.images.items():
            image_names = image.leg_names() if isinstance(image, TensorElement) else (image.algebra.name,)
            if image_names != names:
                raise PresentationError('map %s: image of %s lives in %s' % (
                    name, source.alphabet[letter], ' ⊗ '.join(image_names)))

    def __repr__(self):
        return '<MapSpec %s: %s -> %s (%s)>' % (
            self.name, self.source.name, ' ⊗ '.join(t.name for t in self.targets), self.kind)

    @property
    def target(self):
        return self.targets[0] if len(self.targets) == 1 else self.targets

    def live_targets(self):
        return tuple(t for t in self.targets if not t.is_ground)

    def unit(self):
        legs = self.live_targets()
        if not legs:
            legs = self.targets[:1]
        if len(legs) == 1:
            return Element.unit(legs[0])
        return TensorElement.unit(legs)

    def _product(self, a, b):
        if isinstance(a, Element):
            return multiply(a, b)
        return tensor_multiply(a, b)

    def image_of_word(self, word):
        word = tuple(word)
        cached = self._cache.get(word)
        if cached is not None:
            return cached

        if not word:
            result = self.unit()
        elif self.kind == ANTI:
            result = self._product(self.images[word[-1]], self.image_of_word(word[:-1]))
        else:
            result = self._product(self.image_of_word(word[:-1]), self.images[word[-1]])

        self._cache[word] = result
        return result

    def __call__(self, a):
        return apply_map(self, a)


def _zero_like(m):
    unit = m.unit()
    if isinstance(unit, Element):
        return Element(unit.algebra)
    return TensorElement(unit.legs)


def apply_map(m, a):
    """
    Apply the map ``m`` to the element ``a`` of its source::

        str(apply_map(pi, u22))
        # -> alpha
    """
    if a.algebra.name != m.source.name:
        raise PresentationError('map %s expects an element of %s, got %s' % (
            m.name, m.source.name, a.algebra.name))

    result = _zero_like(m)
    terms = dict(result.terms)
    for word, coeff in a.terms.items():
        image = m.image_of_word(word)
        for key, c in image.terms.items():
            _add_term(terms, key, coeff * c)

    if isinstance(result, Element):
        return Element(result.algebra, terms)
    return TensorElement(result.legs, terms)


def _leg_image(m, leg, word):
    """
    Image of one leg word as a list of ``(legs, {words: coeff})`` with ground
    legs removed.
    """
    if m is None:
        return (leg,), {(word,): leg.field.one}

    image = m.image_of_word(word)
    if isinstance(image, Element):
        if image.algebra.is_ground:
            return (), {(): image.terms.get((), image.field.zero)} if image.terms else {}
        return (image.algebra,), {(w,): c for w, c in image.terms.items()}
    return image.legs, dict(image.terms)


def tensor_product_map(maps, t):
    """
    Apply ``maps[i]`` to leg ``i`` of ``t`` (``None`` stands for the
    identity) and relinearize. Maps into the ground field drop their leg;
    maps into tensor products split it.
    """
    if len(maps) != t.arity:
        raise PresentationError('arity mismatch: %d maps for %d legs' % (len(maps), t.arity))

    for m, leg in zip(maps, t.legs):
        if m is not None and m.source.name != leg.name:
            raise PresentationError('map %s cannot act on leg %s' % (m.name, leg.name))

    legs = None
    terms = {}
    for words, coeff in t.terms.items():
        parts = [_leg_image(m, leg, w) for m, leg, w in zip(maps, t.legs, words)]
        part_legs = tuple(leg for p in parts for leg in p[0])
        if legs is None:
            legs = part_legs

        expanded = {(): coeff}
        for _, image_terms in parts:
            nxt = {}
            for key, c in expanded.items():
                for ikey, ic in image_terms.items():
                    _add_term(nxt, key + ikey, c * ic)
            expanded = nxt

        for key, c in expanded.items():
            _add_term(terms, key, c)

    if legs is None:
        legs = ()
        for m, leg in zip(maps, t.legs):
            legs += (leg,) if m is None else m.live_targets()

    if not legs:
        return terms.get((), t.field.zero)

    return _relinearize(list(legs), terms)


def apply_free(m, a):
    """
    Extend ``m`` to ``a`` in the free algebra of its target, without
    reducing any product. Only ``hom`` and ``anti`` maps qualify.
    """
    if m.kind == TENSOR:
        raise PresentationError('map %s has tensor values' % m.name)
    if a.algebra.name != m.source.name:
        raise PresentationError('map %s expects an element of %s, got %s' % (
            m.name, m.source.name, a.algebra.name))

    target = m.targets[0]
    result = Element(target)
    for word, coeff in a.terms.items():
        image = Element.unit(target)
        for x in word:
            image = m.images[x] * image if m.kind == ANTI else image * m.images[x]
        result = result + image.scale(coeff)
    return result
