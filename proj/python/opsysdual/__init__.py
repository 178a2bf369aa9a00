"""Duals of graph operator systems for chordal tolerance relations.

Thin re-export of the compiled core: tolerance relations (graphs with
implicit self-loops), partial Hermitian matrices, PSD completion, dual-cone
membership, extremal-ray certification, and C*-envelope block structure.
"""

from opsysdual._core import (
    DykstraResult,
    EnvelopeDescriptor,
    Error,
    ExtremalityReport,
    InvalidInputError,
    NotChordalError,
    NotInConeError,
    NotPartiallyPositiveError,
    NumericalError,
    PartialHermitianMatrix,
    SpanResult,
    ToleranceRelation,
    ZeroElementError,
    ampliate,
    ampliated_member,
    band_relation,
    band_vector_extremal,
    certify_extremal,
    chordal_complete,
    clique_block_map,
    connected_components,
    diameter,
    dual_cone_member,
    dual_span_generators,
    dykstra_complete,
    eig_hermitian,
    envelope_of_dual,
    envelope_of_primal,
    extremal_from_vector,
    face_dimension,
    is_chordal,
    is_equivalence,
    is_partially_positive,
    is_psd,
    maximal_cliques,
    mcs_order,
    numerical_rank,
    pattern_space_basis,
    project_to_pattern,
    propagation_dual,
    propagation_primal,
    recover_generating_vector,
    span_propagation,
    verify_peo,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
