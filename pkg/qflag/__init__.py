# flake8: noqa

__version__ = '0.1'

import qflag.scalars
import qflag.freealg
import qflag.normalform
import qflag.presentations
import qflag.hopf
import qflag.connection
import qflag.dsl

from qflag.errors import (
    QFlagError,
    ParserError,
    PresentationError,
    ReductionError,
    ScalarError,
    UndecidedError,
)

from qflag.scalars import (
    SYMBOLIC,
    SpecializedField,
)

from qflag.freealg import (
    Element,
    TensorElement,
    MapSpec,
)

from qflag.normalform import (
    is_zero_mod_ideal,
)

from qflag.presentations import (
    Catalog,
    Presentation,
    build_standard_catalog,
)

from qflag.hopf import (
    HopfStructure,
    HaarFunctional,
)

from qflag.connection import (
    ConnectionEll,
    SectionJ,
    Splitting,
)

from qflag.dsl import (
    Reader as ScriptReader,
    Writer as ScriptWriter,
    parse,
    run_suite,
)
