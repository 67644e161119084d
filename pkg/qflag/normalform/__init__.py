# flake8: noqa

from .rewriter import (
    DEFAULT_MAX_STEPS,
    CentralRelation,
    ReductionStep,
    ReductionTrace,
    Rewriter,
    Rule,
)
from .linalg import EchelonBasis, SpanOracle, express
from .ideal import (
    DEFAULT_CAP,
    MODES,
    SPECIALIZED,
    SYMBOLIC,
    decide_zero,
    is_zero_mod_ideal,
    quotient_basis,
    relation_products,
    span_contains,
    specialize_element,
)
