"""Exact lattice-point counting for polyhedra with bounded minors."""

from .conedecomp import (
    HalfVector,
    SignedCone,
    find_half_vector,
    polarize_unimodular,
    sign_decompose,
    triangulate,
)
from .ehrhart import (
    QuasiPolynomial,
    dilation_period,
    ehrhart_quasipolynomial,
    eval_quasipolynomial,
)
from .evaluate import (
    GenericDirection,
    ToddTable,
    evaluate_at,
    generic_direction,
    specialize_count,
    todd_values,
)
from .genfun import (
    HalfOpenCone,
    ShortRationalFunction,
    SRFTerm,
    gf_inequality,
    gf_standard,
    gf_vrep,
    half_open_flags,
    parallelepiped_points,
    srf_from_json,
    srf_to_json,
    vertex_round,
)
from .intlinalg import (
    HnfResult,
    IntMatrix,
    MinorStats,
    SnfResult,
    adjugate,
    delta_stats,
    det,
    hnf,
    snf,
)
from .oracle import Box, brute_count, indicator_identity_check
from .polyhedron import (
    Classification,
    HRepPolyhedron,
    StandardTransform,
    VertexInfo,
    classify,
    feasible_cone_polar_generators,
    normalize_standard,
    standard_to_inequality,
    vertices,
)

__all__ = [
    "Box",
    "Classification",
    "GenericDirection",
    "HRepPolyhedron",
    "HalfOpenCone",
    "HalfVector",
    "HnfResult",
    "IntMatrix",
    "MinorStats",
    "QuasiPolynomial",
    "SRFTerm",
    "ShortRationalFunction",
    "SignedCone",
    "SnfResult",
    "StandardTransform",
    "ToddTable",
    "VertexInfo",
    "adjugate",
    "brute_count",
    "classify",
    "delta_stats",
    "det",
    "dilation_period",
    "ehrhart_quasipolynomial",
    "eval_quasipolynomial",
    "evaluate_at",
    "feasible_cone_polar_generators",
    "find_half_vector",
    "generic_direction",
    "gf_inequality",
    "gf_standard",
    "gf_vrep",
    "half_open_flags",
    "hnf",
    "indicator_identity_check",
    "normalize_standard",
    "parallelepiped_points",
    "polarize_unimodular",
    "sign_decompose",
    "snf",
    "specialize_count",
    "srf_from_json",
    "srf_to_json",
    "standard_to_inequality",
    "todd_values",
    "triangulate",
    "vertex_round",
    "vertices",
]
