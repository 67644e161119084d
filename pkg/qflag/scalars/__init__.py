# flake8: noqa

from .field import (
    Q,
    QFIELD,
    SYMBOLIC,
    RationalFunctionField,
    SpecializedField,
    format_rational,
    format_scalar,
    parse_rational,
    parse_scalar,
    random_qpoints,
    scalar,
    scalar_arith,
    specialize,
)
