"""Conformal invariants, hyperbolic-type metrics, and distortion bounds."""

from .metrics import (
    CANONICAL_DOMAIN_NAMES,
    INFINITY,
    ConnectivityError,
    DomainSpec,
    ExtendedPoint,
    InconsistentBoundsError,
    MetricValue,
    NoApplicableBoundError,
    apollonian,
    as_point,
    canonical_domain,
    chordal,
    cross_ratio,
    hyperbolic_ball,
    j_diameter,
    j_metric,
    lambda_bounds,
    lambda_inverse_bounds,
    lambda_punctured_plane_circle,
    mu_ball_center,
    mu_bounds,
    quasihyperbolic_exact,
    quasihyperbolic_numeric,
    r_ratio,
    seittenranta,
)
from .ball_geometry import (
    BallInclusionReport,
    DegenerateFamilyError,
    PuncturedDiskModuli,
    antipodal_quartic,
    antipodal_threshold,
    circumscribed_lambda_radius,
    antipodal_irrelevance_radius,
    puncture_irrelevance_radius,
    inner_separating_modulus,
    joining_family_modulus,
    lambda_ball_constants,
    mu_ball_constants,
    outer_separating_modulus,
    punctured_disk_moduli,
    quasiball_radii,
)
from .transfer_chart import (
    DomainProps,
    MetricId,
    MissingPropertyError,
    TransferChart,
    TransferRangeError,
    TransferResult,
    ZetaEdge,
    builtin_chart,
    chart_rows,
    eval_edge,
    query,
    union_modulus,
)
from .distortion import (
    DistortionBound,
    GENERAL_LINEAR_RATE,
    PLANAR_LINEAR_RATE,
    PreconditionError,
    QUANTITY_LABELS,
    ValidityWindowError,
    annular_image_bounds,
    cylinder_bound,
    distortion_bound,
    distortion_inequality_report,
    eps_to_K,
    eta_star_one_bound,
    id_boundary_euclid_bound,
    id_boundary_rho_bound,
    j_distortion_bound,
    lens_admissible_configs,
    lens_diam_bound_linear,
    lens_diam_bound_sqrt,
    lens_diam_brute,
    lens_window,
    radial_stretch_delta,
    tangent_domination_M,
    tangent_domination_endpoint,
    tangent_domination_lhs,
    tangent_domination_rhs,
    two_point_growth_bounds,
)
from .harmonic_qr import (
    AliasingError,
    BoundaryFunction1D,
    HARMONIC_SCHWARZ_FACTOR,
    HarmonicPlanarMap,
    InjectivityError,
    OrientationError,
    QuadratureAccuracyError,
    SingularPointError,
    SphereBoundaryFunction,
    alpha_f_disk,
    alternating_cosine_map,
    boundary_modulus,
    boundary_samples_of,
    check_subharmonic,
    closed_modulus,
    grad_abs_f_sq,
    laplacian_abs_f_p,
    laplacian_abs_f_sq,
    modulus_profile,
    poisson_ball3,
    poisson_disk_extend,
    polyline_interior_domain,
    qh_bilipschitz_estimate,
    quasiregularity_constant,
    subharmonic_exponent,
    subharmonic_profile,
)
from .special_functions import (
    Interval,
    agm,
    check_dimension,
    ell_K,
    eta_K_n,
    gamma2,
    gamma2_inv,
    gamma_n_bounds,
    lambda_n_interval,
    mu,
    mu_inv,
    omega_sphere,
    phi_K,
    phi_Kn_lower,
    tau2,
    tau2_inv,
    tau_n_bounds,
    tau_n_inv_bounds,
    teichmuller_p_circle,
)

__version__ = "0.1.0"
