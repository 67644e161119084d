# flake8: noqa

from .element import (
    Element,
    TensorElement,
    components,
    contract_middle,
    flip,
    from_components,
    left_multiply,
    map_leg,
    multiply,
    multiply_legs,
    normalize,
    right_multiply,
    sandwich,
    tensor,
    tensor_multiply,
)
from .maps import ANTI, HOM, TENSOR, MapSpec, apply_free, apply_map, tensor_product_map
