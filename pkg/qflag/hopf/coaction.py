"""
Maps built from a right coaction ``ϱ = (id ⊗ π)∘Δ``.
"""

import logging

from qflag.freealg.element import Element, components, left_multiply, normalize
from qflag.freealg.maps import tensor_product_map
from qflag.normalform.ideal import DEFAULT_CAP, decide_zero
from qflag.presentations.presentation import ZERO_DEGREE

log = logging.getLogger(__name__)


def canonical_map(hopf, a, b, epi):
    """
    The canonical map ``a ⊗ b ↦ (a ⊗ 1)·ϱ(b)``::

        canonical_map(H, A.unit(), A.element('u21'), pi)
        # -> u21 ⊗ u
    """
    return left_multiply(hopf.algebra.normal_form(a), hopf.coaction(b, epi))


def second_leg_parts(t):
    """
    The second-leg elements of a normalized two-leg tensor, grouped by the
    first-leg word.
    """
    return components(normalize(t), leg=1)


def cotensor_check(t, coideal, hopf, epi, target, cap=DEFAULT_CAP):
    """
    Whether ``t ∈ A ⊗ C`` lies in the cotensor product ``A □_H C`` for the
    coideal subalgebra ``C`` of ``H``: every second leg must lie in ``C``
    and ``(ϱ ⊗ id)(t) = (id ⊗ Δ_H)(t)``.

    ``hopf`` and ``target`` are the Hopf structures of ``A`` and ``H``.
    """
    t = normalize(t)
    for part in components(t, leg=1).values():
        if not coideal.contains(part, cap=cap):
            log.debug('cotensor check: second leg %s is outside %s', part, coideal.name)
            return False

    left = tensor_product_map([hopf.coaction_map(epi), None], t)
    right = tensor_product_map([None, target.coproduct_map], t)
    return decide_zero(left - right, cap=cap)


def retraction_defect(hopf, a, epi, target):
    """
    ``(id ⊗ ε)∘ϱ(a) - a``.
    """
    return tensor_product_map([None, target.counit_map], hopf.coaction(a, epi)) - a


def conditional_expectation(a):
    """
    The projection onto the degree ``(0,0)`` part: normal words of degree
    ``(0,0)`` are kept, all others dropped.
    """
    algebra = a.algebra
    a = algebra.normal_form(a)
    return Element(algebra, {w: c for w, c in a.terms.items()
                             if algebra.degree_of_word(w) == ZERO_DEGREE})
