# flake8: noqa

from .section import A_FAMILY, B_FAMILY, DEFAULT_EXPONENT_CAP, SectionJ
from .ell import ConnectionEll, connection_sample
from .splitting import (
    DEFAULT_DIMENSION_LENGTH,
    DEFAULT_FLAG_LENGTH,
    Splitting,
    check_cotensor_theorem,
    cotensor_dimension,
    flag_dimension,
    flag_monomials,
)
from .idempotents import (
    Comodule,
    IdempotentMatrix,
    build_idempotent,
    check_idempotent,
    check_idempotent_sum,
    closed_form_matrix,
    first_tensorand_coordinates,
)
from .formulas import (
    CLOSED_FORMS,
    ELL_SYMBOLS,
    V2_LABELS,
    coaction_w_closed_form,
    coideal_expansions,
    ell_closed_form,
    ell_v_closed_form,
    flag_generators,
    nabla_closed_form,
    q1,
    q2,
    q2bar,
    qminus1,
    sigma_closed_form,
    universal_d,
    v2_factor,
    v_element,
    w,
)
