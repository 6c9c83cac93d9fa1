"""Gabidulin rank-metric codes: encoding and minimal list decoding."""

from ._core import (
    Ambiguous,
    Code,
    DecodeEntry,
    DecodeResult,
    Field,
    FieldElement,
    GabidulinError,
    InterpolationBasis,
    LinPoly,
    MinimalBasis,
    ModuleElement,
    OracleEntry,
    OracleResult,
    annihilator,
    check_candidate,
    code_from_json,
    code_to_json,
    decode_result_to_json,
    decode_unique,
    enumerate_distance_t,
    error_span_poly,
    field_from_json,
    field_to_json,
    in_module,
    interpolation_module,
    left_divide,
    list_decode,
    minimal_basis,
    oracle_closest,
    oracle_within,
    q_lagrange,
    rank_distance,
    random_error,
    right_divide,
    root_space,
    run_selftest,
    vanishes_at_points,
    weighted_qdeg,
)

__all__ = [
    "Ambiguous",
    "Code",
    "DecodeEntry",
    "DecodeResult",
    "Field",
    "FieldElement",
    "GabidulinError",
    "InterpolationBasis",
    "LinPoly",
    "MinimalBasis",
    "ModuleElement",
    "OracleEntry",
    "OracleResult",
    "annihilator",
    "check_candidate",
    "code_from_json",
    "code_to_json",
    "decode_result_to_json",
    "decode_unique",
    "enumerate_distance_t",
    "error_span_poly",
    "field_from_json",
    "field_to_json",
    "in_module",
    "interpolation_module",
    "left_divide",
    "list_decode",
    "minimal_basis",
    "oracle_closest",
    "oracle_within",
    "q_lagrange",
    "rank_distance",
    "random_error",
    "right_divide",
    "root_space",
    "run_selftest",
    "vanishes_at_points",
    "weighted_qdeg",
]
