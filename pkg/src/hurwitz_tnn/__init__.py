"""Exact total-nonnegativity checks for Hurwitz-type matrices of Laurent series."""

from .errors import (
    DegenerateSpec,
    EmptyWindow,
    InvalidSpec,
    OutOfWindow,
    PoleHit,
    ShapeMismatch,
    TnnError,
    UntrustedEntry,
    ZeroCoefficient,
)
from .laurent import (
    EdreiSpec,
    LaurentWindow,
    edrei_coeffs,
    exp_factor_coeffs,
    reverse_series,
    shift_mul_z,
    window_add,
    window_mul,
    window_scale,
)
from .matrices import MatrixSection, hurwitz_section, matmul, selector_section, toeplitz_section
from .sfunc import (
    ChainViolation,
    NotSForm,
    PartialFractions,
    SFunctionSpec,
    check_halfplane_map,
    evaluate,
    evaluate_exact,
    normalize,
    partial_fractions,
    ratio_classify,
    reciprocal_transform,
    validate_interlacing,
)
from .tnn import MinorWitness, SectionSchedule, TnnReport, check_tnn, det_exact, find_negative_minor
from .transforms import (
    cauchy_binet_check,
    combine,
    remove_pole_left,
    remove_pole_right,
    whitney_reduce,
)

__version__ = "0.1.0"

__all__ = [
    "ChainViolation",
    "DegenerateSpec",
    "EdreiSpec",
    "EmptyWindow",
    "InvalidSpec",
    "LaurentWindow",
    "MatrixSection",
    "MinorWitness",
    "NotSForm",
    "OutOfWindow",
    "PartialFractions",
    "PoleHit",
    "SFunctionSpec",
    "SectionSchedule",
    "ShapeMismatch",
    "TnnError",
    "TnnReport",
    "UntrustedEntry",
    "ZeroCoefficient",
    "cauchy_binet_check",
    "check_halfplane_map",
    "check_tnn",
    "combine",
    "det_exact",
    "edrei_coeffs",
    "evaluate",
    "evaluate_exact",
    "exp_factor_coeffs",
    "find_negative_minor",
    "hurwitz_section",
    "matmul",
    "normalize",
    "partial_fractions",
    "ratio_classify",
    "reciprocal_transform",
    "remove_pole_left",
    "remove_pole_right",
    "reverse_series",
    "selector_section",
    "shift_mul_z",
    "toeplitz_section",
    "validate_interlacing",
    "whitney_reduce",
    "window_add",
    "window_mul",
    "window_scale",
]
