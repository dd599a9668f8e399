"""Exact computational engine for the colored planar rook monoid.

Diagram arithmetic, the diagram algebra with its alternating-sum basis,
the complete irreducible module theory with characters, and the
restriction tower realizing Pascal's simplex — all over exact rationals,
with finite verification for every structural claim.
"""

from .algebra import (
    AlgebraElement,
    embed,
    format_element,
    from_diagram,
    identity,
    left_action_x,
    right_action_x,
    subdiagrams,
    to_x_coordinates,
    x_of,
    x_pair_product,
)
from .bratteli import BratteliGraph, adjacency_count, build, emit, vertex_count
from .diagrams import (
    CapExceededError,
    Diagram,
    InvalidDiagramError,
    MismatchError,
    NonPlanarError,
    ParseError,
    Profile,
    bottom_profile,
    cardinality,
    enumerate_planar,
    format_diagram,
    from_profiles,
    is_planar,
    multiply,
    parse_diagram,
    tensor,
    top_profile,
    vertical_subdiagram,
)
from .representations import (
    IrrepLabel,
    ModuleSpace,
    action_matrix,
    action_matrix_elem,
    are_isomorphic,
    character,
    character_table_csv,
    module_space,
    regular_decomposition,
    restriction_decomposition,
    verify_irreducible,
)

__all__ = [
    "AlgebraElement",
    "BratteliGraph",
    "CapExceededError",
    "Diagram",
    "InvalidDiagramError",
    "IrrepLabel",
    "MismatchError",
    "ModuleSpace",
    "NonPlanarError",
    "ParseError",
    "Profile",
    "action_matrix",
    "action_matrix_elem",
    "adjacency_count",
    "are_isomorphic",
    "bottom_profile",
    "build",
    "cardinality",
    "character",
    "character_table_csv",
    "embed",
    "emit",
    "enumerate_planar",
    "format_diagram",
    "format_element",
    "from_diagram",
    "from_profiles",
    "identity",
    "is_planar",
    "left_action_x",
    "module_space",
    "multiply",
    "parse_diagram",
    "regular_decomposition",
    "restriction_decomposition",
    "right_action_x",
    "subdiagrams",
    "tensor",
    "to_x_coordinates",
    "top_profile",
    "vertex_count",
    "vertical_subdiagram",
    "verify_irreducible",
    "x_of",
    "x_pair_product",
]
