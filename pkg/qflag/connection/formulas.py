"""
Closed-form expressions for the flag bundle ``SU_q(3) → SU_q(3)/T²``.

Every builder takes the presentations it needs (``A`` for ``SUq3``, ``H``
for ``Uq2``) and returns elements or tensor elements over their common
field. The builders are independent of the machinery they are compared
with: they only multiply generators and their stars.

Some forms are also known in a variant with misprints. Builders with a
``variant`` flag return the derived form by default and the variant with
``variant=True``; checks assert the derived form and note any difference.
"""

from functools import reduce

from qflag.errors import PresentationError
from qflag.freealg.element import Element, TensorElement, multiply, tensor

INDICES = (1, 2, 3)


def u(A, i, j):
    return A.element('u%d%d' % (i, j))


def star_u(A, i, j):
    return A.normal_form(A.star(u(A, i, j)))


def product(*factors):
    return reduce(multiply, factors)


def w(A, i, j, k):
    """
    The flag manifold generator ``w_ijk = u_i1 u_j2 u_k3``.
    """
    return product(u(A, i, 1), u(A, j, 2), u(A, k, 3))


def flag_generators(A):
    """
    ``((i, j, k), w_ijk)`` for all 27 index triples.
    """
    for i in INDICES:
        for j in INDICES:
            for k in INDICES:
                yield (i, j, k), w(A, i, j, k)


def v_element(H, i, j):
    """
    The entry ``v_ij`` of the fundamental matrix of ``U_q(2)``::

        ( u  0        0      )
        ( 0  alpha    -q γ* u* )
        ( 0  gamma    α* u*   )
    """
    q = H.field.q
    if (i, j) == (1, 1):
        return H.element('u')
    if (i, j) == (2, 2):
        return H.element('alpha')
    if (i, j) == (3, 2):
        return H.element('gamma')
    if (i, j) == (2, 3):
        return multiply(H.element('gamma*'), H.element('u*')).scale(-q)
    if (i, j) == (3, 3):
        return multiply(H.element('alpha*'), H.element('u*'))
    if i in INDICES and j in INDICES:
        return Element(H)
    raise PresentationError('no entry v%d%d' % (i, j))


def _zero(*legs):
    return TensorElement(legs)


# Coaction, splitting and connection on w_ijk ##################################

def coaction_w_closed_form(A, H, i, j, k):
    """
    ``ϱ(w_ijk) = w ⊗ 1 - q u_i1 u_j2 u_k2 ⊗ αγ* - q u_i1 (u_j3 u_k2 + q u_j2 u_k3) ⊗ γγ*
    + u_i1 u_j3 u_k3 ⊗ γα*``.
    """
    q = H.field.q
    alpha, gamma = H.element('alpha'), H.element('gamma')
    alpha_star, gamma_star = H.element('alpha*'), H.element('gamma*')

    first = u(A, i, 1)
    inner = product(u(A, j, 3), u(A, k, 2)) + product(u(A, j, 2), u(A, k, 3)).scale(q)
    return (tensor(w(A, i, j, k), H.unit())
            - tensor(product(first, u(A, j, 2), u(A, k, 2)), multiply(alpha, gamma_star)).scale(q)
            - tensor(multiply(first, inner), multiply(gamma, gamma_star)).scale(q)
            + tensor(product(first, u(A, j, 3), u(A, k, 3)), multiply(gamma, alpha_star)))


def _splitting_sums(A, i, j, k):
    """
    The two sums shared by ``σ(w_ijk)`` and ``∇(w_ijk)``.
    """
    q = A.field.q
    result = _zero(A, A)

    head = product(u(A, i, 1), u(A, j, 3))
    for m in INDICES:
        for n in INDICES:
            first = product(head, star_u(A, m, 3), star_u(A, n, 1))
            result = result + tensor(first, w(A, n, m, k))

    for l in INDICES:
        for m in INDICES:
            inner = (product(u(A, j, 2), u(A, k, 2), star_u(A, l, 2), star_u(A, m, 2))
                     + product(u(A, j, 2), u(A, k, 3), star_u(A, l, 2), star_u(A, m, 3)).scale(q)
                     - product(u(A, j, 3), u(A, k, 1), star_u(A, l, 1), star_u(A, m, 3)))
            for n in INDICES:
                first = product(u(A, i, 1), inner, star_u(A, n, 1))
                result = result + tensor(first, w(A, n, m, l))
    return result


def sigma_closed_form(A, i, j, k):
    return tensor(w(A, i, j, k), A.unit()) + _splitting_sums(A, i, j, k)


def universal_d(b):
    """
    ``d(b) = 1 ⊗ b - b ⊗ 1``.
    """
    unit = b.algebra.unit()
    return tensor(unit, b) - tensor(b, unit)


def nabla_closed_form(A, i, j, k):
    return universal_d(w(A, i, j, k)) - _splitting_sums(A, i, j, k)


# Strong connection on generators ##############################################

def _ell_matrix_entry(A, i, j):
    """
    ``(S ⊗ id)∘Δ(u_ij) = Σ_k star(u_ki) ⊗ u_kj``.
    """
    result = _zero(A, A)
    for k in INDICES:
        result = result + tensor(star_u(A, k, i), u(A, k, j))
    return result


def ell_v_closed_form(A, i, j):
    """
    ``ℓ(v_ij) = Σ_k star(u_ki) ⊗ u_kj`` for ``i, j`` in ``{2, 3}``.
    """
    if i not in (2, 3) or j not in (2, 3):
        raise PresentationError('no closed form for ell(v%d%d)' % (i, j))
    return _ell_matrix_entry(A, i, j)


ELL_SYMBOLS = ('u', 'u*', 'alpha', 'gamma', 'gamma*', 'alpha*')


def ell_closed_form(A, symbol, variant=False):
    """
    ``ℓ`` of a generator of ``U_q(2)``. For ``alpha*`` and ``gamma*`` the
    variant forms put the two factors of the second leg in the opposite
    order.
    """
    q = A.field.q
    result = _zero(A, A)

    if symbol == 'u':
        return _ell_matrix_entry(A, 1, 1)

    if symbol == 'u*':
        for k in INDICES:
            result = result + tensor(u(A, k, 1), star_u(A, k, 1)).scale(q ** (2 * (k - 1)))
        return result

    if symbol == 'alpha':
        return _ell_matrix_entry(A, 2, 2)

    if symbol == 'gamma':
        return _ell_matrix_entry(A, 3, 2)

    if symbol not in ('alpha*', 'gamma*'):
        raise PresentationError('no closed form for ell(%s)' % symbol)

    column = 3 if symbol == 'alpha*' else 2
    for a in INDICES:
        for b in INDICES:
            if variant:
                first = multiply(star_u(A, a, 1), star_u(A, b, column))
                second = multiply(u(A, b, 3), u(A, a, 1))
            else:
                first = multiply(star_u(A, b, column), star_u(A, a, 1))
                second = multiply(u(A, a, 1), u(A, b, 3))
            result = result + tensor(first, second)

    if symbol == 'gamma*':
        result = result.scale(-A.field.divide(A.field.one, q))
    return result


# Idempotents ##################################################################

def q1(A):
    """
    ``Q(1)_ab = u_a1 star(u_b1)``.
    """
    return [[multiply(u(A, a, 1), star_u(A, b, 1)) for b in INDICES] for a in INDICES]


def qminus1(A):
    """
    ``Q(-1)_ab = q^(a+b-2) star(u_a1) u_b1``.
    """
    q = A.field.q
    return [[multiply(star_u(A, a, 1), u(A, b, 1)).scale(q ** (a + b - 2)) for b in INDICES]
            for a in INDICES]


def q2bar(A):
    """
    ``Q̄(2)_ab = u_a2 star(u_b2) + u_a3 star(u_b3)``, so that
    ``Q(1) + Q̄(2) = 1``.
    """
    return [[multiply(u(A, a, 2), star_u(A, b, 2)) + multiply(u(A, a, 3), star_u(A, b, 3))
             for b in INDICES] for a in INDICES]


def v2_factor(field, j, variant=False):
    """
    The weight of the block ``j`` (``j`` in ``{2, 3}``) of ``Q(2)``:
    ``q^(2(j-2))/(1+q²)``; the variant is ``q^(2(3-j))/(1+q²)``.
    """
    exponent = 2 * (3 - j) if variant else 2 * (j - 2)
    return field.divide(field.q ** exponent, field.one + field.q ** 2)


V2_LABELS = tuple((i, (a, k)) for i in (2, 3) for k in (2, 3) for a in INDICES)


def q2(A, variant=False):
    """
    The 12×12 matrix ``Q(2)`` with rows and columns labelled ``(i, (a, k))``
    in the order of :data:`V2_LABELS`: the entry at ``(i, (a, k))``,
    ``(j, (b, l))`` is ``δ_ik δ_jl c_j Q̄(2)_ab``.
    """
    bar = q2bar(A)
    rows = []
    for i, (a, k) in V2_LABELS:
        row = []
        for j, (b, l) in V2_LABELS:
            if i == k and j == l:
                row.append(bar[a - 1][b - 1].scale(v2_factor(A.field, j, variant)))
            else:
                row.append(Element(A))
        rows.append(row)
    return rows


CLOSED_FORMS = {
    'q1': q1,
    'qminus1': qminus1,
    'q2bar': q2bar,
    'q2': q2,
}


# The coideal CP1q #############################################################

def coideal_expansions(H, variant=False):
    """
    ``[(γγ*, Δ(γγ*)), (αγ*, Δ(αγ*))]`` written with the entries ``v_ij``.
    The variant expansion of ``Δ(αγ*)`` has ``v_3j`` where ``v_2j``
    belongs.
    """
    q_inv = H.field.divide(H.field.one, H.field.q)
    unit = H.element('u')

    def expansion(first, second, row):
        result = _zero(H, H)
        for i in (2, 3):
            for j in (2, 3):
                left = product(unit, v_element(H, first, i), v_element(H, row, j))
                right = product(unit, v_element(H, i, second[0]), v_element(H, j, second[1]))
                result = result + tensor(left, right)
        return result.scale(-q_inv)

    gamma_gamma = multiply(H.element('gamma'), H.element('gamma*'))
    alpha_gamma = multiply(H.element('alpha'), H.element('gamma*'))
    return [
        (gamma_gamma, expansion(2, (3, 2), 3)),
        (alpha_gamma, expansion(2, (2, 3), 3 if variant else 2)),
    ]
