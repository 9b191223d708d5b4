"""Rotational hypersurfaces in Euclidean n-space.

Profile curves, their immersions and curvature data, the family of
higher-order divergence operators acting on the unit normal, an eigencase
classifier, minimal-profile integration with closed forms, and an exact
integer audit of the obstruction identity behind the classification.
"""

from .classifier import (
    ClassificationVerdict,
    EigenMatrixCandidate,
    Tolerances,
    VerdictCase,
    classify,
    eigen_residual_decomposition,
    fit_eigen_matrix,
    hypersphere_fitted_matrix,
    hypersphere_matrix,
)
from .errors import (
    ConventionMismatchError,
    DegenerateChartError,
    DomainError,
    InvalidDimensionError,
    InvalidOrderError,
    RotHypError,
    SingularFormulaError,
    SingularProfileError,
    SpecDocumentError,
    ToleranceError,
    UnderdeterminedFitError,
    UnitSpeedError,
)
from .geometry_core import (
    CurvatureSpectrum,
    FundamentalForms,
    adapted_frame,
    fundamental_forms,
    gauss_map,
    generalized_cross,
    immerse,
    parity_sign,
    rotation_matrix,
    shape_spectrum,
    unit_direction,
    validate_chart,
)
from .lk_operator import (
    LkGaussValue,
    PositionConstantReport,
    default_step,
    lk_gauss_closed,
    lk_gauss_numeric,
    lk_position_constant,
    lk_scalar,
)
from .profile_solvers import (
    Fixture,
    MinimalProfileSolution,
    SeriesValue,
    fixture_expectations,
    fixture_profiles,
    flat_profile,
    gauss_hypergeometric,
    solve_minimal_profile,
)
from .profiles import (
    CatenaryProfile,
    CircleProfile,
    LineProfile,
    ProfileCurve,
    ProfileJet,
    TurningAngleProfile,
    cone_profile,
    cylinder_profile,
    plane_profile,
    require_unit_speed,
    sphere_profile,
    turning_angle,
    turning_rates,
)
from .proof_audit import (
    SEED_POLYNOMIALS,
    AuditRow,
    CompositeValues,
    RadialCoefficients,
    SeedValues,
    audit_table,
    base_polynomials,
    composite_polynomials,
    obstruction_sum,
    obstruction_terms,
    radial_polynomial_coefficients,
    slope_ratio,
    slope_ratio_coefficients,
)
from .specdoc import (
    ProfileSpecDocument,
    document_to_profile,
    emit_document,
    load_profile,
    parse_document,
    profile_to_document,
)
from .symfunc import (
    ClosedFormTable,
    NewtonTransform,
    PenultimateGradient,
    closed_symmetric_functions,
    elementary_symmetric,
    elementary_symmetric_table,
    newton_transform,
    penultimate_gradient,
    reduced_symmetric,
    reduced_table,
    symmetric_derivative,
    symmetric_table,
)

__version__ = "0.1.0"

__all__ = [
    "AuditRow",
    "CatenaryProfile",
    "CircleProfile",
    "ClassificationVerdict",
    "ClosedFormTable",
    "CompositeValues",
    "ConventionMismatchError",
    "CurvatureSpectrum",
    "DegenerateChartError",
    "DomainError",
    "EigenMatrixCandidate",
    "Fixture",
    "FundamentalForms",
    "InvalidDimensionError",
    "InvalidOrderError",
    "LineProfile",
    "LkGaussValue",
    "MinimalProfileSolution",
    "NewtonTransform",
    "PenultimateGradient",
    "PositionConstantReport",
    "ProfileCurve",
    "ProfileJet",
    "ProfileSpecDocument",
    "RadialCoefficients",
    "RotHypError",
    "SEED_POLYNOMIALS",
    "SeedValues",
    "SeriesValue",
    "SingularFormulaError",
    "SingularProfileError",
    "SpecDocumentError",
    "ToleranceError",
    "Tolerances",
    "TurningAngleProfile",
    "UnderdeterminedFitError",
    "UnitSpeedError",
    "VerdictCase",
    "__version__",
    "adapted_frame",
    "audit_table",
    "base_polynomials",
    "classify",
    "closed_symmetric_functions",
    "composite_polynomials",
    "cone_profile",
    "cylinder_profile",
    "default_step",
    "document_to_profile",
    "eigen_residual_decomposition",
    "elementary_symmetric",
    "elementary_symmetric_table",
    "emit_document",
    "fit_eigen_matrix",
    "fixture_expectations",
    "fixture_profiles",
    "flat_profile",
    "fundamental_forms",
    "gauss_hypergeometric",
    "gauss_map",
    "generalized_cross",
    "hypersphere_fitted_matrix",
    "hypersphere_matrix",
    "immerse",
    "lk_gauss_closed",
    "lk_gauss_numeric",
    "lk_position_constant",
    "lk_scalar",
    "load_profile",
    "newton_transform",
    "obstruction_sum",
    "obstruction_terms",
    "parity_sign",
    "parse_document",
    "penultimate_gradient",
    "plane_profile",
    "profile_to_document",
    "radial_polynomial_coefficients",
    "reduced_symmetric",
    "reduced_table",
    "require_unit_speed",
    "rotation_matrix",
    "shape_spectrum",
    "slope_ratio",
    "slope_ratio_coefficients",
    "solve_minimal_profile",
    "sphere_profile",
    "symmetric_derivative",
    "symmetric_table",
    "turning_angle",
    "turning_rates",
    "unit_direction",
    "validate_chart",
]
