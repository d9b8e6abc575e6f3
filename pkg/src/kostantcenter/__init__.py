"""Exact computation of the center of Kostant's strongly commuting algebra.

The package computes, in exact rational arithmetic, the spectrum of the
center of the commutant of a diagonal enveloping-algebra action twisted by a
finite-dimensional representation: its irreducible components, closed-form
rank-one presentations in three coordinate systems, the graded degeneration,
the coefficient/generator symmetries, and the linkage structure of Verma
tensor products, together with an operator-level verification engine.
"""

from .mpoly import ArityMismatchError, MPoly, resultant
from .roots import (
    EnumerationBoundError,
    RootSystem,
    Weight,
    WeightSystem,
    WeylElement,
    build_root_system,
    is_multiplicity_free,
    orbit_decomposition,
    parse_algebra,
    weight_system,
    weyl_dimension,
    weyl_group,
)
from .characters import (
    CharacterPoint,
    InvariantBasis,
    character_point,
    invariant_generators,
    same_character,
)
from .center import (
    CenterComponent,
    CenterPresentation,
    center_components,
    center_ideal_rank1,
    change_presentation,
    fiber_dimension,
    graded_medium,
    interpolate_relations,
    is_self_dual,
    klein_action,
    membership_test,
    phi_involution,
    restriction_surjection_check,
    rozhkovskaya_presentation,
    swap_variables,
)
from .tensor import (
    LinkageBlock,
    LinkageDecomposition,
    WeightBlockMatrix,
    casimir_block_matrix,
    casimir_value,
    discriminant_sl2,
    linkage_decomposition_sl2,
    operator_relation_check,
    tensor_characters,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatchError",
    "CenterComponent",
    "CenterPresentation",
    "CharacterPoint",
    "EnumerationBoundError",
    "InvariantBasis",
    "LinkageBlock",
    "LinkageDecomposition",
    "MPoly",
    "RootSystem",
    "Weight",
    "WeightBlockMatrix",
    "WeightSystem",
    "WeylElement",
    "build_root_system",
    "casimir_block_matrix",
    "casimir_value",
    "center_components",
    "center_ideal_rank1",
    "change_presentation",
    "character_point",
    "discriminant_sl2",
    "fiber_dimension",
    "graded_medium",
    "interpolate_relations",
    "invariant_generators",
    "is_multiplicity_free",
    "is_self_dual",
    "klein_action",
    "linkage_decomposition_sl2",
    "membership_test",
    "operator_relation_check",
    "orbit_decomposition",
    "parse_algebra",
    "phi_involution",
    "restriction_surjection_check",
    "resultant",
    "rozhkovskaya_presentation",
    "same_character",
    "swap_variables",
    "tensor_characters",
    "weight_system",
    "weyl_dimension",
    "weyl_group",
]
