"""Exact additive and linear codes in Doob schemes, with their MacWilliams identities."""

from .codes import (
    HERM,
    PSI_PAIRING,
    TR,
    AdditiveCode,
    Pairing,
    additive_closure,
    dual,
    is_linear,
    linear_closure,
)
from .enumerators import (
    BivariateEnum,
    coweight_enumerator,
    macwilliams_transform,
    weight_enumerator,
)
from .errors import BudgetExceededError, ParseError, ShapeMismatchError, TransformError
from .rings import E4Elem, F4Elem, GaussInt
from .space import LMap, MixedVector, SpaceShape, parse_vector
from .zrep import MINUS, PLUS, ZShape, ZVector

__version__ = "0.1.0"
