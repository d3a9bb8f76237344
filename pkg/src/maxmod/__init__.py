"""Classify and numerically trace the maximum modulus set of complex
polynomials near the origin (and, via reciprocals, near infinity)."""

from .classify import (
    Classification,
    ExceptionalWitness,
    PredictedJ,
    classify,
    cubic_magic,
    is_exceptional,
    omega_angles,
    predict_J,
)
from .errors import (
    CurveBirthDeathError,
    FloorViolationError,
    MaxmodError,
    MonomialAllPlaneError,
    NotCubicFamilyError,
    PolyParseError,
    RefinementFailureError,
    TruncatedSeriesError,
    ZeroPolynomialError,
)
from .modulus import ModulusExpansion, direct_mod2, expand
from .poly import (
    HaymanForm,
    MonomialVerdict,
    Polynomial,
    core_polynomial,
    format_poly,
    inner_degree,
    normalize,
    parse_poly,
    poly_from_json,
    reciprocal,
)
from .tracer import (
    CurveSample,
    TraceConfig,
    TraceResult,
    ambiguity_radius,
    brute_force_mset,
    circle_argmax,
    floor_radius,
    trace,
    trace_at_infinity,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "CurveSample",
    "CurveBirthDeathError",
    "ExceptionalWitness",
    "FloorViolationError",
    "HaymanForm",
    "MaxmodError",
    "ModulusExpansion",
    "MonomialAllPlaneError",
    "MonomialVerdict",
    "NotCubicFamilyError",
    "PolyParseError",
    "Polynomial",
    "PredictedJ",
    "RefinementFailureError",
    "TraceConfig",
    "TruncatedSeriesError",
    "TraceResult",
    "ZeroPolynomialError",
    "ambiguity_radius",
    "brute_force_mset",
    "circle_argmax",
    "classify",
    "core_polynomial",
    "cubic_magic",
    "direct_mod2",
    "expand",
    "floor_radius",
    "format_poly",
    "inner_degree",
    "is_exceptional",
    "normalize",
    "omega_angles",
    "parse_poly",
    "poly_from_json",
    "predict_J",
    "reciprocal",
    "trace",
    "trace_at_infinity",
    "write_csv",
]
