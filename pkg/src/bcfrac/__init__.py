"""bcfrac: bicomplex algebra, fractional line calculus, and weighted
reconstruction identities, verified by deterministic quadrature.

The package layers as follows: scalar bicomplex/hyperbolic arithmetic,
one-dimensional fractional integrals and derivatives on segments, plane
quadrature engines, weighted first-order operators and their kernels in one
complex variable, their componentwise bicomplex versions, and finally the
four-axis fractional operators with Gauss-type and reconstruction
identities.  The harness module runs named verification scenarios across
refinement levels and reports residuals and convergence orders.
"""

from .bicomplex import E, E_DAG, UNIT_J, BCNumber, HyperbolicNumber, inner_c
from .errors import (
    ConfigError,
    DegeneracyError,
    DomainError,
    IllConditionedError,
    NumericError,
    SingularityError,
)
from .fields import BCProductField, CField
from .frac1d import (
    FracScheme,
    LineFunction,
    Segment,
    rl_derivative,
    rl_integral,
    rl_power_oracle,
)
from .frac_bicomplex import (
    AlphaVec,
    FracBPParts,
    FracBPResult,
    FracEvalPoint,
    Rect4,
    calibrate_c_hat,
    di_residuals,
    frac_bp_parts,
    frac_bp_reconstruct,
    frac_bp_residual,
    frac_D,
    frac_gauss_residual,
    frac_I,
    frac_I_component,
    frac_P,
    frac_T,
    mixed_point_sum,
)
from .quadrature import (
    Circle,
    Disk,
    Rect2,
    estimate_order,
    integrate_circle,
    integrate_disk_area,
    integrate_disk_wedge,
    integrate_rect_area,
)
from .registry import FIELDS, field_names, get_field
from .weighted_bicomplex import (
    BCBall,
    REDUCTION_KINDS,
    WeightedBPResult,
    WeightPairBC,
    apply_D_thetaphi,
    bbpf_reconstruct,
    bc_gauss_residual,
    bc_weighted_bp_reconstruct,
    bc_weights_orthogonal,
    fields_A_B,
    reduction_reference,
    reduction_weights,
)
from .weighted_complex import (
    PsiPair,
    TransformT,
    apply_D_psi,
    cauchy_pompeiu_reconstruct,
    compute_c_psi,
    eval_kernel_E_psi,
    gauss_residual_complex,
    psi_orthogonal,
    sigma_boundary_integral,
    solve_transform_T,
    weighted_monomial,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ConfigError",
    "DegeneracyError",
    "DomainError",
    "IllConditionedError",
    "NumericError",
    "SingularityError",
    # bicomplex scalars
    "BCNumber",
    "HyperbolicNumber",
    "E",
    "E_DAG",
    "UNIT_J",
    "inner_c",
    # 1-d fractional calculus
    "Segment",
    "FracScheme",
    "LineFunction",
    "rl_integral",
    "rl_derivative",
    "rl_power_oracle",
    # quadrature
    "Circle",
    "Disk",
    "Rect2",
    "integrate_circle",
    "integrate_disk_area",
    "integrate_disk_wedge",
    "integrate_rect_area",
    "estimate_order",
    # fields and registry
    "CField",
    "BCProductField",
    "FIELDS",
    "get_field",
    "field_names",
    # weighted complex layer
    "PsiPair",
    "TransformT",
    "psi_orthogonal",
    "apply_D_psi",
    "solve_transform_T",
    "eval_kernel_E_psi",
    "compute_c_psi",
    "weighted_monomial",
    "sigma_boundary_integral",
    "gauss_residual_complex",
    "cauchy_pompeiu_reconstruct",
    # weighted bicomplex layer
    "WeightPairBC",
    "BCBall",
    "bc_weights_orthogonal",
    "apply_D_thetaphi",
    "fields_A_B",
    "bc_gauss_residual",
    "bbpf_reconstruct",
    "WeightedBPResult",
    "bc_weighted_bp_reconstruct",
    "REDUCTION_KINDS",
    "reduction_weights",
    "reduction_reference",
    # fractional bicomplex layer
    "AlphaVec",
    "Rect4",
    "FracEvalPoint",
    "frac_D",
    "frac_I",
    "frac_I_component",
    "frac_P",
    "frac_T",
    "mixed_point_sum",
    "di_residuals",
    "frac_gauss_residual",
    "FracBPParts",
    "frac_bp_parts",
    "calibrate_c_hat",
    "frac_bp_residual",
    "FracBPResult",
    "frac_bp_reconstruct",
]
