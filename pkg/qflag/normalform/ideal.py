"""
Ideal membership and bases of graded components.

:func:`is_zero_mod_ideal` decides whether an element vanishes in the
quotient. A normal form of zero settles the question; presentations marked
``complete`` have canonical normal forms, so a nonzero normal form settles it
the other way. Otherwise the element is tested against the span of all
products ``m1·r·m2`` of relations with words, one homogeneous block at a
time, bounded by the element's own word length.
"""

import logging

from qflag.errors import QFlagError, UndecidedError
from qflag.freealg.element import Element, normalize
from qflag.normalform.linalg import EchelonBasis, SpanOracle
from qflag.scalars import random_qpoints

log = logging.getLogger(__name__)

DEFAULT_CAP = 4000

SPECIALIZED = 'specialized'
SYMBOLIC = 'symbolic'

MODES = (SPECIALIZED, SYMBOLIC)


def relation_products(presentation, degree, length):
    """
    Yield the vectors ``m1·r·m2`` for every raw relation ``r`` and words
    ``m1, m2`` such that the product has at most ``length`` letters in its
    longest word and lies in the homogeneous block ``degree``.
    """
    degree = presentation.as_degree(degree)
    for label, relation in presentation.relations:
        rlength = relation.max_length()
        rdegree = presentation.degree_of(relation)
        room = length - rlength
        if room < 0:
            continue

        for l1 in range(room + 1):
            for l2 in range(room - l1 + 1):
                for m1 in presentation.words(l1):
                    d2 = degree - rdegree - presentation.degree_of_word(m1)
                    for m2 in presentation.words(l2, d2):
                        yield {m1 + w + m2: c for w, c in relation.terms.items()}


def span_contains(a, cap=DEFAULT_CAP):
    """
    Decide ``a ∈ I`` by linear algebra in each homogeneous component of ``a``.
    """
    presentation = a.algebra
    for degree, component in presentation.homogeneous_components(a).items():
        length = component.max_length()
        oracle = SpanOracle(a.field, relation_products(presentation, degree, length), cap=cap)
        log.debug('%s: block %s up to length %d has rank %d',
                  presentation.name, degree, length, oracle.rank)
        if not oracle.contains(component.terms):
            return False
    return True


def _decide(a, cap, method):
    if not a:
        return True

    if method == 'span':
        return span_contains(a, cap=cap)

    if not a.algebra.normal_form(a):
        return True

    if a.algebra.complete:
        return False

    return span_contains(a, cap=cap)


def decide_zero(x, cap=DEFAULT_CAP):
    """
    Whether the element or tensor element ``x`` vanishes in its quotient,
    decided over the field ``x`` already lives in.

    Tensor elements are reduced legwise; a nonzero result is conclusive
    only if every leg has canonical normal forms.
    """
    if isinstance(x, Element):
        return _decide(x, cap, 'auto')

    if not normalize(x):
        return True

    if all(leg.complete for leg in x.legs):
        return False

    raise UndecidedError('%s: no canonical normal forms on every leg' % ' ⊗ '.join(x.leg_names()),
                         bound=cap)


def specialize_element(a, q0):
    algebra = a.algebra.specialize(q0)
    return algebra.convert(a)


def is_zero_mod_ideal(a, mode=SPECIALIZED, qpoints=None, cap=DEFAULT_CAP, method='auto'):
    """
    Whether ``a`` lies in the two-sided ideal of its presentation.

    In ``specialized`` mode an element over ``ℚ(q)`` is tested at each of the
    ``qpoints`` (three seeded points by default) and is zero only if it
    vanishes at all of them; elements already over ``ℚ`` are tested as they
    are. ``symbolic`` mode requires ``ℚ(q)`` coefficients. ``method`` is
    ``auto`` (normal form first) or ``span`` (linear algebra only).

    Raises :class:`~qflag.errors.UndecidedError` if a block exceeds ``cap``.
    """
    if mode not in MODES:
        raise ValueError('unknown mode: %s' % mode)

    if isinstance(a, Element) and not a:
        return True

    symbolic = a.field.symbolic
    if mode == SYMBOLIC:
        if not symbolic:
            raise QFlagError('symbolic mode needs coefficients in Q(q)')
        return _decide(a, cap, method)

    if not symbolic:
        return _decide(a, cap, method)

    if qpoints is None:
        qpoints = random_qpoints()

    return all(_decide(specialize_element(a, q0), cap, method) for q0 in qpoints)


def quotient_basis(presentation, degree, length, cap=DEFAULT_CAP, shorter=False):
    """
    Words of the given length and degree whose images in the quotient are
    linearly independent, chosen greedily in ascending word order. With
    ``shorter`` the candidates are all words of at most ``length`` letters,
    shortest first, and the result spans the filtered piece of the block.
    """
    lengths = range(length + 1) if shorter else [length]
    candidates = [word for n in lengths for word in presentation.words(n, degree)]
    if len(candidates) > cap:
        raise UndecidedError('%d candidate words exceed the cap' % len(candidates),
                             bound=cap, dimension=len(candidates))

    basis = EchelonBasis(presentation.field)
    if presentation.complete:
        def image(word):
            return presentation.normal_form_word(word)
    else:
        for vector in relation_products(presentation, degree, length):
            basis.add(vector)

        def image(word):
            return {word: presentation.field.one}

    selected = []
    for word in candidates:
        if basis.add(image(word)):
            selected.append(word)
    return selected
