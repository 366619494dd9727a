"""Volterra integration operators T_g f = int_0^z f g' on generalized Fock
spaces F^p_{alpha,A}: truncated-series arithmetic, quadrature norms, the
explicit resolvent, and desk-scale spectrum experiments."""

from .series import (
    TruncatedSeries,
    add,
    differentiate,
    evaluate,
    exp_series,
    integrate_from_zero,
    multiply,
    scale,
)
from .spaces import (
    FockParams,
    MembershipVerdict,
    QuadratureScheme,
    SchemeCapacityError,
    build_scheme,
    exp_membership,
    integral_means,
    log_monomial_norm,
    lp_rhs,
    monomial_norm,
    origin_weight_integrals,
    point_eval_bound_check,
    series_norm,
)
from .operators import (
    PolynomialSymbol,
    ShiftMatrix,
    apply_tg,
    resolvent_apply,
    shift_power_norm,
    shift_step_weights,
    tg_matrix,
)
from .spectral import (
    SpectrumDescription,
    UnboundedOperatorError,
    WeightField,
    boundary_term_decay,
    boundedness_diagnostic,
    classify_spectrum,
    lp_ratio_experiment,
    membership_scan,
    resolvent_norm_probe,
    spectral_radius_estimate,
    weighted_lp_experiment,
)
from .symparse import (
    SymbolParseError,
    format_polynomial,
    format_symbol,
    parse_polynomial,
    parse_series,
    parse_symbol,
)

__version__ = "0.1.0"
