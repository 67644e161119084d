"""
The left module splitting ``σ`` of the multiplication of the flag manifold
over ``CP²_q``, and the connection ``∇ = 1 ⊗ x - σ(x)`` it induces::

    σ(a) = Σ a(1)·ℓ(π(a(2)))

where ``a(1) ⊗ π(a(2)) = ϱ(a)`` is the right coaction along ``π``.
"""

import logging

from qflag.errors import UndecidedError
from qflag.freealg.element import (
    Element, TensorElement, components, left_multiply, multiply, multiply_legs, normalize,
    right_multiply, tensor,
)
from qflag.freealg.maps import tensor_product_map
from qflag.hopf.coaction import cotensor_check, retraction_defect
from qflag.normalform.ideal import DEFAULT_CAP, decide_zero, quotient_basis
from qflag.normalform.linalg import SpanOracle
from qflag.presentations.presentation import ZERO_DEGREE
from qflag.results import CheckResult

from .formulas import (
    coaction_w_closed_form, flag_generators, nabla_closed_form, sigma_closed_form, star_u, u,
    universal_d, w as flag_w,
)

log = logging.getLogger(__name__)

DEFAULT_FLAG_LENGTH = 3
DEFAULT_DIMENSION_LENGTH = 2


class Splitting:

    """
    ``σ`` and ``∇`` for the strong connection ``ell``; ``base`` and
    ``flag`` are the subalgebras ``CP2q`` and ``Flag`` of ``SUq3``.
    """

    def __init__(self, ell, base, flag):
        self.ell = ell
        self.base = base
        self.flag = flag

    def __repr__(self):
        return '<Splitting %s over %s>' % (self.flag.name, self.base.name)

    @property
    def A(self):
        return self.ell.A

    @property
    def hopf(self):
        return self.ell.hopf

    @property
    def epi(self):
        return self.ell.epi

    def sigma(self, a):
        A = self.A
        result = TensorElement((A, A))
        coaction = normalize(self.hopf.coaction(a, self.epi))
        for (word,), x in components(coaction, leg=0).items():
            result = result + left_multiply(x, self.ell.ell_word(word), leg=0)
        return result

    def nabla(self, a):
        return tensor(self.A.unit(), a) - self.sigma(a)

    def leibniz_defect(self, b, s):
        """
        ``∇(b·s) - d(b)·s - b·∇(s)``.
        """
        return (self.nabla(multiply(b, s))
                - right_multiply(universal_d(b), s, leg=-1)
                - left_multiply(b, self.nabla(s), leg=0))

    def _legs_inside(self, result, label, t):
        t = normalize(t)
        try:
            first = all(self.base.contains(x, cap=result.cap) for x in components(t, leg=0).values())
            second = all(self.flag.contains(x, cap=result.cap) for x in components(t, leg=1).values())
        except UndecidedError as e:
            result.undecide(label, e)
            return
        result.expect('first legs of %s' % label, first)
        result.expect('second legs of %s' % label, second)

    def check_splitting(self, cap=DEFAULT_CAP, leibniz=((1, 2, 3),)):
        """
        On all 27 generators ``w_ijk``: the closed forms of ``ϱ(w)``,
        ``σ(w)`` and ``∇(w)``, ``μ∘σ = id``, ``μ∘∇ = 0``, and the legs of
        ``σ(w)`` in ``CP2q ⊗ Flag``. The Leibniz rule is checked with
        ``b = u11·star(u11)`` on the generators listed in ``leibniz``.
        """
        A = self.A
        H = self.ell.H
        result = CheckResult('sigma-nabla %s' % self.flag.name, cap)

        unit = A.unit()
        result.expect_equal('sigma(1)', self.sigma(unit), tensor(unit, unit))
        result.expect_zero('nabla(1)', self.nabla(unit))

        for (i, j, k), w in flag_generators(A):
            label = 'w%d%d%d' % (i, j, k)
            s = self.sigma(w)
            n = self.nabla(w)

            result.expect_equal('coaction %s' % label, self.hopf.coaction(w, self.epi),
                                coaction_w_closed_form(A, H, i, j, k))
            result.expect_equal('sigma %s' % label, s, sigma_closed_form(A, i, j, k))
            result.expect_equal('nabla %s' % label, n, nabla_closed_form(A, i, j, k))
            result.expect_equal('splitting %s' % label, multiply_legs(s), w)
            result.expect_zero('one-form %s' % label, multiply_legs(n))
            self._legs_inside(result, 'sigma %s' % label, s)

        b = multiply(u(A, 1, 1), star_u(A, 1, 1))
        for i, j, k in leibniz:
            result.expect_zero('leibniz w%d%d%d' % (i, j, k), self.leibniz_defect(b, flag_w(A, i, j, k)))

        log.debug('%r', result)
        return result


def flag_monomials(A, length):
    """
    Words of at most ``length`` letters of degree ``(0,0)``.
    """
    for n in range(length + 1):
        for word in A.words(n, ZERO_DEGREE):
            yield word


def cotensor_dimension(hopf, target, epi, coideal, length, cap=DEFAULT_CAP):
    """
    The dimension of the solutions ``x ∈ A ⊗ C`` of
    ``(ϱ ⊗ id)(x) = (id ⊗ Δ)(x)`` whose first legs have at most ``length``
    letters, where ``C`` is spanned by the words ``coideal`` contains.

    Every solution is ``ϱ(a)`` for ``a = (id ⊗ ε)(x)``, so this is the
    dimension of ``{a ∈ A≤length : ϱ(a) ∈ A ⊗ C}``; the identity itself is
    verified on every basis word. Returns ``(dimension, failures)``.
    """
    A = hopf.algebra
    H = target.algebra

    degrees = sorted({A.degree_of_word(word) for n in range(length + 1) for word in A.words(n)})
    dimension = 0
    failures = []
    for degree in degrees:
        words = quotient_basis(A, degree, length, cap=cap, shorter=True)
        vectors = []
        for word in words:
            x = normalize(hopf.coaction(Element.word(A, word), epi))
            lhs = tensor_product_map([hopf.coaction_map(epi), None], x)
            rhs = tensor_product_map([None, target.coproduct_map], x)
            if not decide_zero(lhs - rhs, cap=cap):
                failures.append(A.format_word(word) or '1')
            vectors.append({key: c for key, c in x.terms.items()
                            if not coideal.contains(Element.word(H, key[1]), cap=cap)})
        oracle = SpanOracle(A.field, vectors, cap=cap)
        dimension += len(words) - oracle.rank
        log.debug('block %s: %d basis words, rank %d', degree, len(words), oracle.rank)
    return dimension, failures


def flag_dimension(algebra, length, cap=DEFAULT_CAP):
    """
    The dimension of the degree ``(0,0)`` component in words of at most
    ``length`` letters.
    """
    return len(quotient_basis(algebra, ZERO_DEGREE, length, cap=cap, shorter=True))


def check_cotensor_theorem(hopf, target, epi, coideal, length=DEFAULT_FLAG_LENGTH,
                           dimension_length=DEFAULT_DIMENSION_LENGTH, cap=DEFAULT_CAP):
    """
    The flag manifold as the cotensor product ``A □_H CP1q`` at bounded
    word length:

    * ``ϱ(w)`` lies in the cotensor product for every flag monomial ``w``
      of at most ``length`` letters, and ``(id ⊗ ε)∘ϱ(w) = w``;
    * the solutions of the cotensor identity with first legs of at most
      ``dimension_length`` letters (:func:`cotensor_dimension`) are as many
      as the flag component has dimensions at that length.

    ``hopf`` and ``target`` are the Hopf structures of ``A`` and ``H``.
    """
    A = hopf.algebra
    result = CheckResult('cotensor %s' % coideal.name, cap)

    count = 0
    for word in flag_monomials(A, length):
        w = Element.word(A, word)
        label = A.format_word(word) or '1'
        try:
            inside = cotensor_check(hopf.coaction(w, epi), coideal, hopf, epi, target, cap=cap)
        except UndecidedError as e:
            result.undecide('cotensor %s' % label, e)
        else:
            result.expect('cotensor %s' % label, inside)
        result.expect_zero('retraction %s' % label, retraction_defect(hopf, w, epi, target))
        count += 1
    log.debug('cotensor check on %d flag monomials', count)

    label = 'dimension at length %d' % dimension_length
    try:
        dimension, failures = cotensor_dimension(hopf, target, epi, coideal, dimension_length, cap=cap)
        expected = flag_dimension(A, dimension_length, cap=cap)
    except UndecidedError as e:
        result.undecide(label, e)
        return result

    for failure in failures:
        result.expect('cotensor identity %s' % failure, False)
    result.expect(label, dimension == expected, '%d != %d' % (dimension, expected))
    result.note('cotensor dimension at length %d: %d of %d' % (dimension_length, dimension, expected))
    return result
