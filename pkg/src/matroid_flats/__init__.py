"""Output-sensitive enumeration of matroid flats, with zonotope applications.

Flats are generated rank by rank through their pointers (minimum-label
bases) behind a pluggable independence oracle; the running time is
linear in the number of flats produced.  For vectorial matroids an
exact-rational echelon fast path replaces oracle queries entirely, and
the rank-(d-1) flats yield zonotope H-representations.
"""

from .bruteforce import (
    GROUND_SET_CAP,
    GroundSetTooLargeError,
    brute_flats,
    brute_pointer,
)
from .engine import (
    EnumerationReport,
    FlatRecord,
    NotSimpleError,
    SimplificationMap,
    enumerate_flats,
    enumerate_pointers,
    expand_flats,
    is_pointer,
    simplify,
    simplify_columns,
    unsimplify,
)
from .labels import (
    clear_leading,
    expansions,
    format_label,
    format_members,
    full_label,
    label_of,
    leading_digit,
    members_of,
    parse_label,
    prefix_below,
)
from .linalg import (
    EchelonState,
    RationalMatrix,
    canonicalize_vector,
    dot,
    echelon_empty,
    echelon_from,
    extend,
    hyperplane_normal,
    in_span,
    parse_rational,
    rational_from_float,
)
from .oracles import (
    GraphicOracle,
    IndependenceOracle,
    RelabeledOracle,
    UniformOracle,
    VectorialOracle,
)
from .zonotope import (
    HalfSpace,
    HRepresentation,
    RankDeficientError,
    hrep,
    membership,
)

__version__ = "0.1.0"

__all__ = [
    "EchelonState",
    "EnumerationReport",
    "FlatRecord",
    "GROUND_SET_CAP",
    "GraphicOracle",
    "GroundSetTooLargeError",
    "HRepresentation",
    "HalfSpace",
    "IndependenceOracle",
    "NotSimpleError",
    "RankDeficientError",
    "RationalMatrix",
    "RelabeledOracle",
    "SimplificationMap",
    "UniformOracle",
    "VectorialOracle",
    "brute_flats",
    "brute_pointer",
    "canonicalize_vector",
    "clear_leading",
    "dot",
    "echelon_empty",
    "echelon_from",
    "enumerate_flats",
    "enumerate_pointers",
    "expand_flats",
    "expansions",
    "extend",
    "format_label",
    "format_members",
    "full_label",
    "hrep",
    "hyperplane_normal",
    "in_span",
    "is_pointer",
    "label_of",
    "leading_digit",
    "members_of",
    "membership",
    "parse_label",
    "parse_rational",
    "prefix_below",
    "rational_from_float",
    "simplify",
    "simplify_columns",
    "unsimplify",
]
