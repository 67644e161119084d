"""
Verification sweeps over Hopf structures and Hopf epimorphisms.

Each function returns a :class:`~qflag.results.CheckResult` with one
assertion per generator, relation or word it looked at.
"""

import logging

from qflag.errors import PresentationError
from qflag.freealg.element import Element, components, multiply_legs, normalize, tensor
from qflag.freealg.maps import apply_map, tensor_product_map
from qflag.hopf.coaction import conditional_expectation
from qflag.hopf.haar import left_invariance_defect
from qflag.normalform.ideal import DEFAULT_CAP
from qflag.presentations.presentation import INHOMOGENEOUS, ZERO_DEGREE
from qflag.results import CheckResult

log = logging.getLogger(__name__)


def generators(algebra):
    for x, symbol in enumerate(algebra.alphabet):
        yield symbol, Element.word(algebra, (x,))


def normal_words(algebra, length):
    """
    The normal words of at most ``length`` letters, shortest first.
    """
    rewriter = algebra.rewriter
    for n in range(length + 1):
        for word in algebra.words(n):
            if rewriter.is_normal(word):
                yield word


def check_hopf_axioms(hopf, cap=DEFAULT_CAP):
    """
    Coassociativity, counitality and the antipode axioms on every generator,
    and compatibility of ``Δ``, ``ε`` and ``S`` with every relation.
    """
    algebra = hopf.algebra
    delta = hopf.coproduct_map
    result = CheckResult('hopf-axioms %s' % algebra.name, cap)

    for symbol, x in generators(algebra):
        d = hopf.coproduct(x)
        result.expect_equal('coassociativity %s' % symbol,
                            tensor_product_map([delta, None], d),
                            tensor_product_map([None, delta], d))
        result.expect_equal('counit left %s' % symbol,
                            tensor_product_map([hopf.counit_map, None], d), x)
        result.expect_equal('counit right %s' % symbol,
                            tensor_product_map([None, hopf.counit_map], d), x)

        if hopf.has_antipode:
            unit = Element.scalar(algebra, hopf.counit(x))
            S = hopf.antipode_map
            result.expect_equal('antipode left %s' % symbol,
                                multiply_legs(tensor_product_map([S, None], d)), unit)
            result.expect_equal('antipode right %s' % symbol,
                                multiply_legs(tensor_product_map([None, S], d)), unit)

    for label, relation in algebra.relations:
        result.expect_zero('coproduct of %s' % label, hopf.coproduct(relation))
        value = hopf.counit(relation)
        result.expect('counit of %s' % label, not value, algebra.field.format(value))
        if hopf.has_antipode:
            result.expect_zero('antipode of %s' % label, hopf.antipode(relation))

    log.debug('%r', result)
    return result


def check_presentation(algebra, cap=DEFAULT_CAP):
    """
    Every relation vanishes modulo the ideal (for complete presentations
    this is decided by the rewrite rules), every rule preserves degrees and
    the star of a letter has the opposite degree.
    """
    result = CheckResult('presentation %s' % algebra.name, cap)

    for label, relation in algebra.relations:
        result.expect_zero('relation %s' % label, relation)

    for rule in algebra.rules:
        degree = algebra.degree_of_word(rule.lhs)
        found = {algebra.degree_of_word(word) for word in rule.rhs}
        result.expect('degree of rule %s' % rule.name, found <= {degree},
                      ', '.join(str(d) for d in sorted(found)))

    if algebra.has_star:
        for x, image in sorted(algebra.star_images.items()):
            if not image:
                continue
            expected = -algebra.degrees[x]
            found = algebra.degree_of(image)
            result.expect('degree of star %s' % algebra.alphabet[x], found == expected,
                          '%s != %s' % (found, expected))

    log.debug('%r', result)
    return result


def check_star_structure(algebra, hopf=None, cap=DEFAULT_CAP):
    """
    ``star`` is an involution preserving the ideal, and (given ``hopf``)
    compatible with the coproduct, the counit and the antipode.
    """
    result = CheckResult('star %s' % algebra.name, cap)

    for label, relation in algebra.relations:
        result.expect('homogeneous %s' % label, algebra.degree_of(relation) != INHOMOGENEOUS)
        result.expect_zero('star of %s' % label, algebra.star(relation))

    for symbol, x in generators(algebra):
        starred = algebra.star(x)
        result.expect_equal('involution %s' % symbol, algebra.star(starred), x)

        if hopf is None:
            continue

        star = algebra.star_map
        result.expect_equal('coproduct %s' % symbol, hopf.coproduct(starred),
                            tensor_product_map([star, star], hopf.coproduct(x)))
        result.expect('counit %s' % symbol, hopf.counit(starred) == hopf.counit(x))
        if hopf.has_antipode:
            twice = hopf.antipode(algebra.star(hopf.antipode(starred)))
            result.expect_equal('antipode %s' % symbol, twice, x)

    return result


def check_epimorphism(epi, source, target, triangle=None, graded=False, cap=DEFAULT_CAP):
    """
    ``epi`` maps every relation of its source into the ideal of its target
    and intertwines coproducts, counits, antipodes and stars on generators.

    ``source`` and ``target`` are the Hopf structures at both ends.
    ``triangle`` is an optional pair ``(first, second)`` of maps for which
    ``first∘epi = second`` is checked on generators. With ``graded`` the
    images of generators must keep their degrees.
    """
    A, H = source.algebra, target.algebra
    if (epi.source.name, epi.target.name) != (A.name, H.name):
        raise PresentationError('%s does not map %s to %s' % (epi.name, A.name, H.name))

    result = CheckResult('epimorphism %s' % epi.name, cap)

    for label, relation in A.relations:
        result.expect_zero('relation %s' % label, apply_map(epi, relation))

    stars = A.has_star and H.has_star
    for symbol, x in generators(A):
        image = apply_map(epi, x)
        result.expect_equal('coproduct %s' % symbol, target.coproduct(image),
                            tensor_product_map([epi, epi], source.coproduct(x)))
        result.expect('counit %s' % symbol, target.counit(image) == source.counit(x))

        if source.has_antipode and target.has_antipode:
            result.expect_equal('antipode %s' % symbol, target.antipode(image),
                                apply_map(epi, source.antipode(x)))

        if stars:
            result.expect_equal('star %s' % symbol, H.star(image), apply_map(epi, A.star(x)))

        if triangle is not None:
            first, second = triangle
            result.expect_equal('triangle %s' % symbol, apply_map(first, image), apply_map(second, x))

        if graded:
            image = H.normal_form(image)
            if image:
                expected = A.degree_of(x)
                found = H.degree_of(image)
                result.expect('degree %s' % symbol, found == expected, '%s != %s' % (found, expected))

    return result


def torus_monomial(torus, degree):
    """
    ``U1^m U2^n`` in a two-letter-pair torus algebra, with starred letters
    for negative exponents.
    """
    letters = {}
    for x, d in enumerate(torus.degrees):
        letters.setdefault(tuple(d), x)

    word = ()
    for value, step in ((degree[0], (1, 0)), (degree[1], (0, 1))):
        if value < 0:
            step = (-step[0], -step[1])
        if value and step not in letters:
            raise PresentationError('%s has no letter of degree (%d,%d)' % ((torus.name,) + step))
        if value:
            word += (letters[step],) * abs(value)
    return Element.word(torus, word)


def check_gauge(hopf, gauge, length=3, cap=DEFAULT_CAP):
    """
    The torus coaction ``(id ⊗ gauge)∘Δ`` sends a word of degree ``(m,n)``
    to ``w ⊗ U1^m U2^n``, and the conditional expectation keeps a word iff
    its degree is ``(0,0)``. All words of at most ``length`` letters.
    """
    algebra = hopf.algebra
    torus = gauge.target
    result = CheckResult('gauge %s' % gauge.name, cap)

    for n in range(length + 1):
        for word in algebra.words(n):
            w = Element.word(algebra, word)
            degree = algebra.degree_of_word(word)
            label = algebra.format_word(word) or '1'

            expected = tensor(w, torus_monomial(torus, degree))
            result.expect_equal('coaction %s' % label, hopf.coaction(w, gauge), expected)

            projected = conditional_expectation(w)
            if degree == ZERO_DEGREE:
                result.expect_equal('expectation %s' % label, projected, w)
            else:
                result.expect('expectation %s' % label, not projected, str(projected))

    return result


def check_haar(hopf, haar, length=2, cap=DEFAULT_CAP):
    """
    Left invariance and normalization of ``haar`` on the normal words of at
    most ``length`` letters.
    """
    algebra = hopf.algebra
    result = CheckResult('haar %s' % algebra.name, cap)
    result.expect('normalization', haar(algebra.unit()) == algebra.field.one)

    for word in normal_words(algebra, length):
        h = Element.word(algebra, word)
        result.expect_zero('left invariance %s' % (algebra.format_word(word) or '1'),
                           left_invariance_defect(hopf, haar, h))
    return result


def check_coideal(hopf, coideal, elements, expected=None, cap=DEFAULT_CAP):
    """
    ``Δ`` maps each of ``elements`` into ``H ⊗ C`` for the subalgebra ``C``;
    ``expected`` optionally lists closed forms of the coproducts.
    """
    result = CheckResult('coideal %s' % coideal.name, cap)
    expected = expected or [None] * len(elements)

    for element, closed_form in zip(elements, expected):
        label = str(element)
        result.expect('member %s' % label, coideal.contains(element, cap=cap))

        d = normalize(hopf.coproduct(element))
        for part in components(d, leg=1).values():
            result.expect('second leg of %s' % label, coideal.contains(part, cap=cap), str(part))

        if closed_form is not None:
            result.expect_equal('closed form %s' % label, d, closed_form)

    return result
