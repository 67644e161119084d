"""
Subalgebras described by a degree condition and/or generating letters.

Membership of an element is decided on its normal form: first the degree
condition, then (if generators are declared) a span test per homogeneous
component against products of the generators and their stars, bounded by
the element's own word length. Beyond ``span_length`` letters the span test
is replaced by the coinvariance test ``ϱ(b) = b ⊗ 1`` if a coaction has been
attached.
"""

import logging

from qflag.errors import PresentationError, UndecidedError
from qflag.freealg.element import Element, multiply, tensor
from qflag.normalform.ideal import DEFAULT_CAP, decide_zero
from qflag.normalform.linalg import SpanOracle

log = logging.getLogger(__name__)

DEFAULT_SPAN_LENGTH = 9


def exponent_vectors(weights, budget):
    """
    All tuples ``e`` of non-negative integers with ``Σ e[i]·weights[i] <=
    budget``; weights must be positive.
    """
    if not weights:
        yield ()
        return

    head, rest = weights[0], weights[1:]
    for e in range(budget // head + 1):
        for tail in exponent_vectors(rest, budget - e * head):
            yield (e,) + tail


class Subalgebra:

    def __init__(self, name, algebra, degree=None, generators=(), ordered=False,
                 span_length=DEFAULT_SPAN_LENGTH):
        self.name = name
        self.algebra = algebra
        self.degree = None if degree is None else algebra.as_degree(degree)
        self.symbols = list(generators)
        self.ordered = ordered
        self.span_length = span_length
        self.coaction = None
        self.coaction_name = None
        self._oracles = {}
        self._powers = {}

        self.generators = [algebra.element(s) for s in self.symbols]
        self.conjugates = []
        if self.generators and algebra.has_star:
            self.conjugates = [algebra.normal_form(algebra.star(x)) for x in self.generators]

    def __repr__(self):
        return '<Subalgebra %s in %s>' % (self.name, self.algebra.name)

    def attach_coaction(self, coaction, name=None):
        """
        Use ``coaction(b)`` (an element of ``A ⊗ H``) to decide membership
        of elements longer than ``span_length``. ``name`` is the map the
        coaction is taken along, kept for serialization.
        """
        self.coaction = coaction
        self.coaction_name = name

    # Candidates ##############################################################

    def _power(self, x, exponent):
        key = (str(x), exponent)
        if key not in self._powers:
            result = Element.unit(self.algebra)
            for _ in range(exponent):
                result = multiply(result, x)
            self._powers[key] = result
        return self._powers[key]

    def _monomial(self, factors, exponents):
        result = Element.unit(self.algebra)
        for x, e in zip(factors, exponents):
            if e:
                result = multiply(result, self._power(x, e))
        return result

    def _weighted(self, factors):
        return [max(x.max_length(), 1) for x in factors]

    def _degree(self, factors, exponents):
        degree = self.algebra.as_degree((0, 0))
        for x, e in zip(factors, exponents):
            d = self.algebra.degree_of(x)
            degree = degree + (e * d.m, e * d.n)
        return degree

    def candidates(self, degree, length):
        """
        The spanning candidates of the block ``(degree, length)``: ordered
        monomials in the generators followed by ordered monomials in their
        stars, and the reverse order.
        """
        if not self.ordered:
            return list(self._all_products(degree, length))

        xs, ys = self.generators, self.conjugates
        wx, wy = self._weighted(xs), self._weighted(ys)

        found = []
        for a in exponent_vectors(wx, length):
            used = sum(e * w for e, w in zip(a, wx))
            for b in exponent_vectors(wy, length - used):
                if self._degree(xs, a) + self._degree(ys, b) != degree:
                    continue
                x = self._monomial(xs, a)
                y = self._monomial(ys, b)
                found.append(multiply(x, y))
                if any(a) and any(b):
                    found.append(multiply(y, x))
        return found

    def _all_products(self, degree, length):
        factors = self.generators + self.conjugates
        weights = self._weighted(factors)

        def extend(current, budget):
            yield current
            for x, w in zip(factors, weights):
                if w <= budget:
                    for more in extend(multiply(current, x), budget - w):
                        yield more

        for candidate in extend(Element.unit(self.algebra), length):
            if candidate and self.algebra.degree_of(candidate) == degree:
                yield candidate

    def _oracle(self, degree, length, cap):
        key = (degree, length)
        if key not in self._oracles:
            candidates = self.candidates(degree, length)
            if len(candidates) > cap:
                raise UndecidedError('%s: %d candidates at length %d exceed the cap' % (
                    self.name, len(candidates), length), bound=cap, dimension=len(candidates))

            log.debug('%s: %d candidates in block %s up to length %d',
                      self.name, len(candidates), degree, length)
            self._oracles[key] = SpanOracle(self.algebra.field, [c.terms for c in candidates], cap=cap)
        return self._oracles[key]

    # Membership ##############################################################

    def coinvariant(self, a, cap=DEFAULT_CAP):
        if self.coaction is None:
            raise PresentationError('%s has no coaction attached' % self.name)

        image = self.coaction(a)
        unit = Element.unit(image.legs[-1])
        return decide_zero(image - tensor(a, unit), cap=cap)

    def contains(self, a, cap=DEFAULT_CAP):
        """
        Whether ``a`` lies in the subalgebra. Raises
        :class:`~qflag.errors.UndecidedError` if a span block exceeds ``cap``.
        """
        if a.algebra.name != self.algebra.name:
            raise PresentationError('%s is a subalgebra of %s, not %s' % (
                self.name, self.algebra.name, a.algebra.name))

        a = self.algebra.normal_form(a)
        if not a:
            return True

        if self.degree is not None and self.algebra.degree_of(a) != self.degree:
            return False

        if not self.generators:
            return True

        if a.max_length() > self.span_length and self.coaction is not None:
            return self.coinvariant(a, cap=cap)

        for degree, component in self.algebra.homogeneous_components(a).items():
            if not self._oracle(degree, component.max_length(), cap).contains(component.terms):
                return False
        return True
