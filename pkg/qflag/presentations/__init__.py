# flake8: noqa

from .presentation import (
    INHOMOGENEOUS,
    ZERO_DEGREE,
    Degree,
    Presentation,
    convert_element,
    ground,
)
from .catalog import Catalog
from .subalgebras import DEFAULT_SPAN_LENGTH, Subalgebra, exponent_vectors
from .standard import (
    STANDARD_NAMES,
    build_standard_catalog,
    build_standard_presentations,
    generated_source,
    standard_source,
)
