"""
Haar functionals given by tables of values on normal words.
"""

import logging

from qflag.errors import PresentationError
from qflag.freealg.element import Element, TensorElement

log = logging.getLogger(__name__)


class HaarFamily:

    """
    The normal words ``x1^n x2^n … xk^n`` (``n >= 0``) with the value
    ``formula`` in ``n``. An empty pattern stands for the unit word only.
    """

    def __init__(self, pattern, formula):
        self.pattern = tuple(pattern)
        self.formula = formula

    def __repr__(self):
        return '<HaarFamily %s>' % (self.formula,)

    def match(self, word):
        """
        The exponent ``n`` if ``word`` belongs to the family, else ``None``.
        """
        if not self.pattern:
            return 0 if not word else None

        k = len(self.pattern)
        if len(word) % k:
            return None

        n = len(word) // k
        expected = tuple(x for x in self.pattern for _ in range(n))
        return n if tuple(word) == expected else None


class HaarFunctional:

    """
    A linear functional on a presentation defined on normal words by a list
    of :class:`HaarFamily` tables and zero elsewhere::

        h = catalog.haar_functional('Uq2')
        h.field.format(h(gamma * gamma_star))
        # -> 1/(q^2+1)
    """

    def __init__(self, algebra, families):
        self.algebra = algebra
        self.families = list(families)
        self._values = {}

    def __repr__(self):
        return '<HaarFunctional %s (%d families)>' % (self.algebra.name, len(self.families))

    @property
    def field(self):
        return self.algebra.field

    def value(self, word):
        word = tuple(word)
        if word not in self._values:
            value = self.field.one if not word else self.field.zero
            for family in self.families:
                n = family.match(word)
                if n is not None:
                    value = self.field.parse(family.formula, n=n)
                    break
            self._values[word] = value
        return self._values[word]

    def __call__(self, a):
        if a.algebra.name != self.algebra.name:
            raise PresentationError('haar functional of %s applied to %s' % (
                self.algebra.name, a.algebra.name))

        total = self.field.zero
        for word, coeff in self.algebra.normal_form(a).terms.items():
            value = self.value(word)
            if value:
                total += coeff * value
        return total

    def apply_to_leg(self, t, leg=-1):
        """
        ``(id ⊗ h)`` on the given leg of a tensor element; the leg is
        dropped from the result.
        """
        leg = leg % t.arity
        if t.legs[leg].name != self.algebra.name:
            raise PresentationError('leg %d of the tensor is not %s' % (leg, self.algebra.name))

        terms = {}
        for words, coeff in t.terms.items():
            rest = words[:leg] + words[leg + 1:]
            for word, c in self.algebra.normal_form_word(words[leg]).items():
                value = self.value(word)
                if value:
                    terms[rest] = terms.get(rest, self.field.zero) + coeff * c * value

        legs = t.legs[:leg] + t.legs[leg + 1:]
        terms = {w: c for w, c in terms.items() if c}
        if len(legs) == 1:
            return Element(legs[0], {w[0]: c for w, c in terms.items()})
        return TensorElement(legs, terms)


def averaging(hopf, a, epi, haar):
    """
    The averaging map ``E(a) = (id ⊗ h)∘ϱ(a)`` for the right coaction along
    ``epi``.
    """
    return haar.apply_to_leg(hopf.coaction(a, epi), leg=1)


def left_invariance_defect(hopf, haar, h):
    """
    ``(id ⊗ hm)∘Δ(h) - hm(h)·1``, which vanishes for a left integral.
    """
    image = haar.apply_to_leg(hopf.coproduct(h), leg=1)
    return image - Element.scalar(hopf.algebra, haar(h))
