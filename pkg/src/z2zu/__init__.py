"""Linear codes over the mixed alphabet Z2^alpha x R^beta with R = Z2 + uZ2,
u^2 = 0: construction from generator matrices, Gray images, duals, LCD
criteria, LCD-preserving constructions, and seeded random search.
"""

from .ambient import BinaryVector, MixedVector, Shape, gray_inverse, inner_product
from .code import BinaryCode, Code, ZERO_CODE_DISTANCE
from .errors import (
    ConstructionError,
    EnumerationCapError,
    ParseError,
    ShapeMismatchError,
    TheoremInapplicableError,
    Z2ZUError,
)
from .formats import parse_matrix, parse_vector, serialize_matrix, serialize_vector
from .lcd import LcdReport, SeparableVerdict, analyze, is_lcd_ground_truth, r_independent
from .linalg import (
    BinaryMatrix,
    MixedMatrix,
    StandardForm,
    binary_dual,
    binary_row_reduce,
    dual_generator,
    gram,
    r_invertible,
    standard_form,
    untwisted_gram,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "BinaryMatrix",
    "BinaryVector",
    "Code",
    "ConstructionError",
    "EnumerationCapError",
    "LcdReport",
    "MixedMatrix",
    "MixedVector",
    "ParseError",
    "SeparableVerdict",
    "Shape",
    "ShapeMismatchError",
    "StandardForm",
    "TheoremInapplicableError",
    "Z2ZUError",
    "ZERO_CODE_DISTANCE",
    "analyze",
    "binary_dual",
    "binary_row_reduce",
    "dual_generator",
    "gram",
    "gray_inverse",
    "inner_product",
    "is_lcd_ground_truth",
    "parse_matrix",
    "parse_vector",
    "r_independent",
    "r_invertible",
    "serialize_matrix",
    "serialize_vector",
    "standard_form",
    "untwisted_gram",
    "__version__",
]
