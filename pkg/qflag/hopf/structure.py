"""
Hopf structures on presentations.

A :class:`HopfStructure` bundles the coproduct, counit and (optional)
antipode of a presentation as :class:`~qflag.freealg.maps.MapSpec` objects
and derives the maps built from them: the inverse antipode, the map
``(S ⊗ id)∘Δ``, and the coactions ``(id ⊗ π)∘Δ`` and ``(π ⊗ id)∘Δ``
along Hopf epimorphisms ``π``.
"""

import logging

from qflag.errors import PresentationError
from qflag.freealg.element import (
    Element, TensorElement, flip, sandwich,
)
from qflag.freealg.maps import ANTI, TENSOR, MapSpec, apply_map, tensor_product_map

log = logging.getLogger(__name__)

RIGHT = 'right'
LEFT = 'left'


class HopfStructure:

    """
    Coproduct ``Δ: A → A ⊗ A``, counit ``ε: A → k`` and antipode ``S``
    (``None`` for bialgebras) of the presentation ``algebra``::

        H = catalog.hopf_structure('Uq2')
        H.coproduct(catalog.presentation('Uq2').element('gamma'))
        # -> u*.alpha* ⊗ gamma + gamma ⊗ alpha
    """

    def __init__(self, algebra, coproduct, counit, antipode=None):
        self.algebra = algebra
        self.coproduct_map = coproduct
        self.counit_map = counit
        self.antipode_map = antipode
        self._inverse_antipode = None
        self._coactions = {}
        self._ell_letters = {}
        self._ell_words = {}

        if coproduct.kind != TENSOR or len(coproduct.targets) != 2:
            raise PresentationError('%s: coproduct must map into a tensor square' % algebra.name)
        if antipode is not None and antipode.kind != ANTI:
            raise PresentationError('%s: antipode must be an anti-homomorphism' % algebra.name)

    def __repr__(self):
        return '<HopfStructure %s%s>' % (self.algebra.name, '' if self.has_antipode else ' (bialgebra)')

    @property
    def has_antipode(self):
        return self.antipode_map is not None

    @property
    def ground(self):
        return self.counit_map.targets[0]

    def _check(self, a):
        if a.algebra.name != self.algebra.name:
            raise PresentationError('%s: expected an element of %s' % (a.algebra.name, self.algebra.name))

    def coproduct(self, a):
        self._check(a)
        return apply_map(self.coproduct_map, a)

    def counit(self, a):
        """
        The scalar ``ε(a)``.
        """
        self._check(a)
        return apply_map(self.counit_map, a).terms.get((), self.algebra.field.zero)

    def antipode(self, a):
        self._check(a)
        if not self.has_antipode:
            raise PresentationError('%s has no antipode' % self.algebra.name)
        return apply_map(self.antipode_map, a)

    @property
    def inverse_antipode_map(self):
        """
        ``S⁻¹ = star∘S∘star`` on generators.
        """
        if self._inverse_antipode is None:
            algebra = self.algebra
            images = {}
            for x in range(len(algebra.alphabet)):
                starred = algebra.star(Element.word(algebra, (x,)))
                images[x] = algebra.normal_form(algebra.star(self.antipode(starred)))
            self._inverse_antipode = MapSpec('Sinv', algebra, algebra, ANTI, images)
        return self._inverse_antipode

    def inverse_antipode(self, a):
        self._check(a)
        return apply_map(self.inverse_antipode_map, a)

    # (S ⊗ id)∘Δ ##############################################################

    def _ell_letter(self, x):
        if x not in self._ell_letters:
            delta = self.coproduct(Element.word(self.algebra, (x,)))
            self._ell_letters[x] = tensor_product_map([self.antipode_map, None], delta)
        return self._ell_letters[x]

    def antipode_coproduct_word(self, word):
        """
        ``(S ⊗ id)∘Δ`` of a word, assembled letter by letter with the
        sandwich rule.
        """
        word = tuple(word)
        cached = self._ell_words.get(word)
        if cached is not None:
            return cached

        if not word:
            result = TensorElement.unit((self.algebra, self.algebra))
        elif len(word) == 1:
            result = self._ell_letter(word[0])
        else:
            result = sandwich(self.antipode_coproduct_word(word[:-1]), self._ell_letter(word[-1]))

        self._ell_words[word] = result
        return result

    def antipode_coproduct(self, a):
        self._check(a)
        result = TensorElement((self.algebra, self.algebra))
        for word, coeff in a.terms.items():
            result = result + self.antipode_coproduct_word(word).scale(coeff)
        return result

    # Coactions ###############################################################

    def coaction_map(self, epi, side=RIGHT):
        """
        The homomorphism ``(id ⊗ π)∘Δ`` (``side='right'``) or ``(π ⊗ id)∘Δ``
        (``side='left'``) as a map into a tensor product.
        """
        if epi.source.name != self.algebra.name:
            raise PresentationError('%s does not start at %s' % (epi.name, self.algebra.name))

        key = (epi.name, side)
        if key not in self._coactions:
            maps = [None, epi] if side == RIGHT else [epi, None]
            images = {}
            for x in range(len(self.algebra.alphabet)):
                delta = self.coproduct(Element.word(self.algebra, (x,)))
                images[x] = tensor_product_map(maps, delta)

            targets = (self.algebra, epi.target) if side == RIGHT else (epi.target, self.algebra)
            name = 'coaction(%s, %s)' % (epi.name, side)
            self._coactions[key] = MapSpec(name, self.algebra, targets, TENSOR, images)
            log.debug('built %s on %s', name, self.algebra.name)
        return self._coactions[key]

    def coaction(self, a, epi, side=RIGHT):
        self._check(a)
        return apply_map(self.coaction_map(epi, side), a)

    def left_coaction(self, a, epi, target):
        """
        ``λ(a) = Σ S⁻¹(a₍₁₎) ⊗ a₍₀₎`` for the right coaction along ``epi``;
        ``target`` is the Hopf structure of the codomain of ``epi``.
        """
        return tensor_product_map([target.inverse_antipode_map, None], flip(self.coaction(a, epi)))
