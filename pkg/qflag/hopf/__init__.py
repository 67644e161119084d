# flake8: noqa

from .structure import LEFT, RIGHT, HopfStructure
from .haar import HaarFamily, HaarFunctional, averaging, left_invariance_defect
from .coaction import (
    canonical_map,
    conditional_expectation,
    cotensor_check,
    retraction_defect,
    second_leg_parts,
)
from .checks import (
    check_coideal,
    check_epimorphism,
    check_gauge,
    check_haar,
    check_hopf_axioms,
    check_presentation,
    check_star_structure,
    normal_words,
    torus_monomial,
)
