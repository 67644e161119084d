"""
The bicolinear section ``j: O(U_q(2)) → O(SU_q(3))``.

``j`` is linear and defined on the ordered-monomial basis of ``O(U_q(2))``::

    a(k,l,m,n) = u^k α^l γ^m (-q γ* u*)^n      ↦  u11^k u22^l u32^m u23^n
    b(k,l,m,n) = u^k γ^l (-q γ* u*)^m (α* u*)^n ↦  u11^k u32^l u23^m u33^n

with ``k ∈ ℤ`` (``u11^k`` standing for ``star(u11)^-k`` if ``k < 0``),
``l, m, n >= 0`` and ``n >= 1`` for the ``b`` family. Normal words of
``O(U_q(2))`` are these basis elements up to powers of ``-q``.
"""

import itertools
import logging

from qflag.errors import PresentationError
from qflag.freealg.element import Element, map_leg, multiply
from qflag.freealg.maps import apply_map
from qflag.hopf.structure import LEFT
from qflag.normalform.ideal import DEFAULT_CAP
from qflag.results import CheckResult

log = logging.getLogger(__name__)

A_FAMILY = 'a'
B_FAMILY = 'b'

DEFAULT_EXPONENT_CAP = 2


class SectionJ:

    """
    The section ``j`` of the Hopf epimorphism ``epi: A → H``, where
    ``source`` and ``target`` are the Hopf structures of ``A`` and ``H``::

        j = catalog.section('j')
        j(catalog.presentation('Uq2').element('alpha'))
        # -> u22
    """

    def __init__(self, name, source, target, epi):
        self.name = name
        self.source = source
        self.target = target
        self.epi = epi
        self._words = {}

        A, H = self.A, self.H
        if (epi.source.name, epi.target.name) != (A.name, H.name):
            raise PresentationError('%s does not map %s to %s' % (epi.name, A.name, H.name))

        self.matrix = {(i, k): A.element('u%d%d' % (i, k)) for i in (1, 2, 3) for k in (1, 2, 3)}
        self.u = self._letter(1, 1)
        self.alpha = self._letter(2, 2)
        self.gamma = self._letter(3, 2)
        self.u_star = self._starred(self.u)
        self.alpha_star = self._starred(self.alpha)
        self.gamma_star = self._starred(self.gamma)
        self.minus_q = -H.field.q

    def __repr__(self):
        return '<SectionJ %s: %s -> %s>' % (self.name, self.H.name, self.A.name)

    @property
    def A(self):
        return self.source.algebra

    @property
    def H(self):
        return self.target.algebra

    def _letter(self, i, k):
        image = self.H.normal_form(apply_map(self.epi, self.matrix[(i, k)]))
        if len(image.terms) != 1:
            raise PresentationError('%s(u%d%d) is not a generator' % (self.epi.name, i, k))
        (word, coeff), = image.terms.items()
        if len(word) != 1 or coeff != self.H.field.one:
            raise PresentationError('%s(u%d%d) is not a generator' % (self.epi.name, i, k))
        return word[0]

    def _starred(self, x):
        image = self.H.star_images[x]
        (word, _), = image.terms.items()
        return word[0]

    # Coordinates #############################################################

    def to_b_coordinates(self, word):
        """
        Write a normal word of ``H`` as ``c·a(k,l,m,n)`` or ``c·b(k,l,m,n)``
        and return ``(c, family, (k, l, m, n))``.
        """
        counts = self.H.exponents(word)
        K = counts[self.u] - counts[self.u_star]
        if counts[self.u] and counts[self.u_star]:
            raise PresentationError('%s is not a normal word' % self.H.format_word(word))

        l, m, n = counts[self.alpha], counts[self.gamma], counts[self.gamma_star]
        p = counts[self.alpha_star]
        if l and p:
            raise PresentationError('%s is not a normal word' % self.H.format_word(word))

        letter = self.u if K >= 0 else self.u_star
        if p:
            ordered = (letter,) * abs(K) + (self.gamma,) * m + (self.gamma_star,) * n + (self.alpha_star,) * p
            family, exponents = B_FAMILY, (K + n + p, m, n, p)
        else:
            ordered = (letter,) * abs(K) + (self.alpha,) * l + (self.gamma,) * m + (self.gamma_star,) * n
            family, exponents = A_FAMILY, (K + n, l, m, n)

        if tuple(word) != ordered:
            raise PresentationError('%s is not an ordered monomial' % self.H.format_word(word))

        coeff = self.H.field.power(self.minus_q, -n)
        return coeff, family, exponents

    def from_b_coordinates(self, family, exponents):
        """
        The basis element ``a(k,l,m,n)`` or ``b(k,l,m,n)`` of ``H``.
        """
        H = self.H
        k, l, m, n = exponents
        u = Element.word(H, (self.u if k >= 0 else self.u_star,))
        v23 = multiply(Element.word(H, (self.gamma_star,)), Element.word(H, (self.u_star,))).scale(self.minus_q)
        if family == A_FAMILY:
            factors = [(u, abs(k)), (Element.word(H, (self.alpha,)), l),
                       (Element.word(H, (self.gamma,)), m), (v23, n)]
        else:
            v33 = multiply(Element.word(H, (self.alpha_star,)), Element.word(H, (self.u_star,)))
            factors = [(u, abs(k)), (Element.word(H, (self.gamma,)), l), (v23, m), (v33, n)]

        result = H.unit()
        for x, e in factors:
            for _ in range(e):
                result = multiply(result, x)
        return result

    def basis_words(self, cap=DEFAULT_EXPONENT_CAP):
        """
        ``(family, exponents)`` of the basis elements with every exponent at
        most ``cap`` in absolute value.
        """
        for k, l, m, n in itertools.product(range(-cap, cap + 1), *[range(cap + 1)] * 3):
            yield A_FAMILY, (k, l, m, n)
        for k, l, m, n in itertools.product(range(-cap, cap + 1), *[range(cap + 1)] * 2, range(1, cap + 1)):
            yield B_FAMILY, (k, l, m, n)

    # Evaluation ##############################################################

    def image_of_basis(self, family, exponents):
        k, l, m, n = exponents
        A = self.A
        u11 = self.matrix[(1, 1)] if k >= 0 else A.star(self.matrix[(1, 1)])
        if family == A_FAMILY:
            factors = [(u11, abs(k)), (self.matrix[(2, 2)], l), (self.matrix[(3, 2)], m), (self.matrix[(2, 3)], n)]
        else:
            factors = [(u11, abs(k)), (self.matrix[(3, 2)], l), (self.matrix[(2, 3)], m), (self.matrix[(3, 3)], n)]

        result = A.unit()
        for x, e in factors:
            for _ in range(e):
                result = multiply(result, x)
        return result

    def image_of_word(self, word):
        word = tuple(word)
        if word not in self._words:
            coeff, family, exponents = self.to_b_coordinates(word)
            self._words[word] = self.image_of_basis(family, exponents).scale(coeff)
        return self._words[word]

    def __call__(self, h):
        if h.algebra.name != self.H.name:
            raise PresentationError('%s expects an element of %s' % (self.name, self.H.name))

        result = Element(self.A)
        for word, coeff in self.H.normal_form(h).terms.items():
            result = result + self.image_of_word(word).scale(coeff)
        return result

    # Checks ##################################################################

    def check_bicolinearity(self, cap=DEFAULT_EXPONENT_CAP, check_cap=DEFAULT_CAP):
        """
        ``π∘j = id``, ``j(1) = 1`` and both colinearity squares on every basis
        element with exponents at most ``cap``.
        """
        result = CheckResult('bicolinearity %s' % self.name, check_cap)
        A, H = self.A, self.H
        result.expect_equal('unit', self(H.unit()), A.unit())

        for family, exponents in self.basis_words(cap):
            h = self.from_b_coordinates(family, exponents)
            label = '%s%s' % (family, ','.join(map(str, exponents)))
            jh = self(h)
            delta = self.target.coproduct(h)

            result.expect_equal('section %s' % label, apply_map(self.epi, jh), h)
            result.expect_equal('right %s' % label, self.source.coaction(jh, self.epi),
                                map_leg(delta, 0, self, (A,)))
            result.expect_equal('left %s' % label, self.source.coaction(jh, self.epi, side=LEFT),
                                map_leg(delta, 1, self, (A,)))

        log.debug('%r', result)
        return result
