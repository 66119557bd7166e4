"""Riemann's auxiliary function R(s): expansions, exact coefficients,
contour-quadrature oracle, region classification, and zero census."""

__version__ = "0.1.0"

from .calibration import calibrate, load_calibration
from .coeffs import (
    CoeffTable,
    PkTable,
    assemble_Dk,
    build_d_table,
    build_pk,
    hermite_decompose,
    symbolic_dk,
)
from .errors import RauxError
from .expansion import (
    ExpansionResult,
    eval_auto,
    expand_left,
    expand_right,
    half_line_neg_asymptotic,
    leading_third_quadrant,
    left_bound_scan,
    z_of_t,
    zeta_sum_approx,
    zeta_via_rs,
)
from .frames import LeftFrame, SaddleFrame, left_frame, saddle_frame
from .gfunc import (
    StripPoint,
    g_asymptotic,
    g_eval,
    g_jet,
    nonvanishing_certificate,
    strip_coords,
)
from .jets import GaussianRational, Jet, RationalPoly, hermite_poly, jet_algebra
from .oracle import (
    QuadratureSpec,
    d0_quad,
    dk_quad,
    inequality_scans,
    r_quad_origin,
    r_quad_saddle,
    rg_remainder_direct,
)
from .regions import RegionLabel, classify_region, phi_of_r, phi_series
from .scaled import ScaledComplex
from .special import chi, gamma_log, theta_rs, zeta_em
from .zeros import ZeroBox, count_zeros, refine_zero

__all__ = [
    "CoeffTable", "PkTable", "ExpansionResult", "LeftFrame", "SaddleFrame",
    "StripPoint", "RegionLabel", "ScaledComplex", "GaussianRational", "Jet",
    "RationalPoly", "QuadratureSpec", "ZeroBox", "RauxError",
    "assemble_Dk", "build_d_table", "build_pk", "hermite_decompose",
    "symbolic_dk", "calibrate", "load_calibration", "eval_auto",
    "expand_left", "expand_right", "half_line_neg_asymptotic",
    "leading_third_quadrant", "left_bound_scan", "z_of_t", "zeta_sum_approx",
    "zeta_via_rs", "left_frame", "saddle_frame", "g_asymptotic", "g_eval",
    "g_jet", "nonvanishing_certificate", "strip_coords", "hermite_poly",
    "jet_algebra", "d0_quad", "dk_quad", "inequality_scans", "r_quad_origin",
    "r_quad_saddle", "rg_remainder_direct", "classify_region", "phi_of_r",
    "phi_series", "chi", "gamma_log", "theta_rs", "zeta_em", "count_zeros",
    "refine_zero",
]
