"""
Exact coefficients for everything in :mod:`qflag`.

Symbolic computations take place in the rational function field ``ℚ(q)``,
realized by :mod:`sympy.polys.fields` over the integers so that every value
is a reduced fraction of integer polynomials with a canonical denominator.
Specialized computations substitute a rational number for ``q`` and work in
:data:`sympy.QQ`.

Both coefficient fields share one interface::

    K = RationalFunctionField()
    K.format(K.q + K.one / K.q)
    # -> (q^2+1)/q

    F = SpecializedField(QQ(1, 2))
    F.format(F.from_scalar(K.q - K.one / K.q))
    # -> -3/2
"""

import logging
import random
from tokenize import TokenError

from sympy import Integer, QQ, Symbol, ZZ
from sympy.parsing.sympy_parser import (
    convert_xor, parse_expr, standard_transformations,
)
from sympy.polys.fields import FracElement, field

from qflag.errors import ScalarError

log = logging.getLogger(__name__)

QFIELD, Q = field('q', ZZ)

_SYMBOL = Symbol('q')
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def scalar(num, den=1):
    """
    Build the canonical ``ℚ(q)`` element ``num/den`` from integers, sympy
    expressions or existing field elements.
    """
    num = _to_field(num)
    den = _to_field(den)
    if not den:
        raise ScalarError('division by zero')

    return num / den


def _to_field(value):
    if isinstance(value, FracElement):
        return value

    if isinstance(value, int):
        return QFIELD(value)

    return QFIELD.from_expr(value)


def scalar_arith(a, b, op):
    """
    Exact arithmetic on two ``ℚ(q)`` elements. ``op`` is one of ``add``,
    ``sub``, ``mul`` and ``div``.
    """
    a = _to_field(a)
    b = _to_field(b)

    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    elif op == 'div':
        if not b:
            raise ScalarError('division by zero')
        return a / b

    raise ValueError('unknown operation: %s' % op)


def evaluate_poly(poly, q0):
    value = QQ(0)
    for (exponent,), coeff in poly.terms():
        value += QQ(int(coeff)) * q0 ** exponent
    return value


def specialize(a, q0):
    """
    Evaluate the ``ℚ(q)`` element ``a`` at the rational ``q0``::

        specialize(scalar(1, Q ** 2 + 1), QQ(1, 2))
        # -> 4/5
    """
    a = _to_field(a)
    q0 = QQ.convert(q0)

    den = evaluate_poly(a.denom, q0)
    if not den:
        raise ScalarError('zero denominator at q = %s' % format_rational(q0))

    return evaluate_poly(a.numer, q0) / den


def parse_scalar(text, n=None):
    """
    Parse the textual form of a ``ℚ(q)`` element, e.g. ``(q^2-1)/(q^4-1)``.

    If ``n`` is given, the symbol ``n`` may appear in integer exponents and is
    replaced by that value.
    """
    local_dict = {'q': _SYMBOL}
    if n is not None:
        local_dict['n'] = Integer(n)

    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, TokenError) as e:
        raise ScalarError('malformed scalar %r: %s' % (text, e))

    if expr.free_symbols - {_SYMBOL}:
        raise ScalarError('unknown symbol in scalar %r' % text)

    try:
        return QFIELD.from_expr(expr)
    except (ValueError, ZeroDivisionError) as e:
        raise ScalarError('malformed scalar %r: %s' % (text, e))


def _poly_text(poly):
    terms = sorted(((e, int(c)) for (e,), c in poly.terms()), reverse=True)
    if not terms:
        return '0'

    pieces = []
    for i, (exponent, coeff) in enumerate(terms):
        sign = '-' if coeff < 0 else '+'
        coeff = abs(coeff)

        if exponent == 0:
            text = str(coeff)
        else:
            power = 'q' if exponent == 1 else 'q^%d' % exponent
            text = power if coeff == 1 else '%d*%s' % (coeff, power)

        if i == 0:
            pieces.append(text if sign == '+' else '-' + text)
        else:
            pieces.append(sign + text)

    return ''.join(pieces)


def _is_bare(poly):
    terms = poly.terms()
    return len(terms) == 1 and (terms[0][0] == (0,) or terms[0][1] == 1)


def format_scalar(a):
    """
    Print a ``ℚ(q)`` element in the form accepted by :func:`parse_scalar`.
    """
    a = _to_field(a)

    num = _poly_text(a.numer)
    if a.denom == 1:
        return num

    if len(a.numer.terms()) > 1:
        num = '(%s)' % num

    den = _poly_text(a.denom)
    if not _is_bare(a.denom):
        den = '(%s)' % den

    return '%s/%s' % (num, den)


def format_rational(value):
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def parse_rational(text):
    text = text.strip()
    try:
        if '/' in text:
            num, den = text.split('/', 1)
            return QQ(int(num), int(den))
        return QQ(int(text))
    except (ValueError, ZeroDivisionError):
        raise ScalarError('malformed rational %r' % text)


def random_qpoints(seed=0, count=3, denominator=97):
    """
    Return ``count`` distinct rationals in ``(0,1)`` chosen by a seeded
    generator; equal seeds give equal points.
    """
    rng = random.Random(seed)
    numerators = sorted(rng.sample(range(1, denominator), count))
    points = [QQ(n, denominator) for n in numerators]
    log.debug('q-points for seed %s: %s', seed, ', '.join(map(format_rational, points)))
    return points


class RationalFunctionField:

    """
    The coefficient field ``ℚ(q)``. Its elements are sympy field elements
    and support the usual arithmetic operators.
    """

    symbolic = True
    key = 'symbolic'

    def __init__(self):
        self.domain = QFIELD.to_domain()
        self.zero = QFIELD.zero
        self.one = QFIELD.one
        self.q = Q

    def __repr__(self):
        return 'RationalFunctionField()'

    def from_int(self, value):
        return QFIELD(value)

    def from_scalar(self, value):
        return _to_field(value)

    def parse(self, text, n=None):
        return parse_scalar(text, n=n)

    def format(self, value):
        return format_scalar(value)

    def divide(self, a, b):
        if not b:
            raise ScalarError('division by zero')
        return a / b

    def power(self, value, exponent):
        if exponent < 0:
            return self.divide(self.one, value) ** (-exponent)
        return value ** exponent


class SpecializedField:

    """
    The field ``ℚ`` obtained by substituting the rational ``q0`` for ``q``.
    ``from_scalar`` converts ``ℚ(q)`` elements by exact evaluation.
    """

    symbolic = False

    def __init__(self, q0):
        q0 = QQ.convert(q0)
        if not 0 < q0 < 1:
            raise ScalarError('q-point %s is not in (0,1)' % format_rational(q0))

        self.q0 = q0
        self.key = 'q=%s' % format_rational(q0)
        self.domain = QQ
        self.zero = QQ(0)
        self.one = QQ(1)
        self.q = q0

    def __repr__(self):
        return 'SpecializedField(%s)' % format_rational(self.q0)

    def from_int(self, value):
        return QQ(value)

    def from_scalar(self, value):
        if isinstance(value, FracElement):
            return specialize(value, self.q0)
        return QQ.convert(value)

    def parse(self, text, n=None):
        return specialize(parse_scalar(text, n=n), self.q0)

    def format(self, value):
        return format_rational(value)

    def divide(self, a, b):
        if not b:
            raise ScalarError('division by zero')
        return a / b

    def power(self, value, exponent):
        if exponent < 0:
            return self.divide(self.one, value) ** (-exponent)
        return value ** exponent


SYMBOLIC = RationalFunctionField()
