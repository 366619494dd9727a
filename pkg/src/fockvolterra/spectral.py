"""Spectrum classification and the desk-scale verification experiments.

The spectrum of T_g on F^p_{alpha,A} is either {0} (compact case, or
non-integer A) or the closed disk of radius |b|/alpha, where b is the
coefficient of z^A in g. Truncated matrices of T_g are nilpotent, so the
disk is witnessed numerically through weighted-shift power norms and through
resolvent blow-up across truncation orders, never through eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .operators import (
    PolynomialSymbol,
    resolvent_apply,
    shift_power_norm,
    tg_matrix,
)
from .series import TruncatedSeries, differentiate, exp_series, multiply, scale
from .spaces import (
    FockParams,
    MembershipVerdict,
    QuadratureScheme,
    _log_abs_values,
    exp_membership,
    log_integral_means_pow,
    lp_rhs,
    series_norm,
)


class UnboundedOperatorError(ValueError):
    """degree(g) > A: T_g is not bounded on the space."""


@dataclass(frozen=True)
class SpectrumDescription:
    kind: str  # "disk" | "origin"
    radius: float | None
    provenance: str  # "TheoremII" | "CompactCase" | "NonIntegerA"

    def __post_init__(self):
        if self.kind not in ("disk", "origin"):
            raise ValueError("kind must be 'disk' or 'origin'")
        if self.kind == "disk" and (self.radius is None or self.radius < 0):
            raise ValueError("disk requires a non-negative radius")


@dataclass(frozen=True)
class WeightField:
    """The subharmonic exponent p Re(g/lambda) - p alpha |z|^A for monomial g."""

    g: PolynomialSymbol
    lam: complex
    params: FockParams

    def __post_init__(self):
        if not self.g.is_monomial():
            raise ValueError("weight field is defined for monomial symbols")
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")

    def value(self, z: complex) -> float:
        p, a = self.params.p, self.params.alpha
        big_a = self.g.degree
        b = self.g.leading_coefficient
        return p * (b * z**big_a / self.lam).real - p * a * abs(z) ** big_a

    def dbar_lower_bound(self, z: complex) -> float:
        """|dbar w| >= (pA/2)(alpha - |b/lam|)|z|^{A-1}; needs alpha > |b/lam|."""
        p, a = self.params.p, self.params.alpha
        big_a = self.g.degree
        margin = a - abs(self.g.leading_coefficient / self.lam)
        if margin <= 0:
            raise ValueError("bound valid only for alpha > |b/lambda|")
        return 0.5 * p * big_a * margin * abs(z) ** (big_a - 1)


def classify_spectrum(g: PolynomialSymbol, params: FockParams) -> SpectrumDescription:
    """Closed disk of radius |b|/alpha when degree(g) = A integer, else {0}."""
    if g.degree > params.big_a:
        raise UnboundedOperatorError(
            f"degree {g.degree} exceeds A = {params.big_a}: operator unbounded"
        )
    if not params.integer_a:
        return SpectrumDescription("origin", None, "NonIntegerA")
    if g.degree < params.big_a:
        return SpectrumDescription("origin", None, "CompactCase")
    radius = abs(g.leading_coefficient) / params.alpha
    return SpectrumDescription("disk", radius, "TheoremII")


def spectral_radius_estimate(
    g: PolynomialSymbol,
    params: FockParams,
    k_max: int,
    max_m: int,
) -> tuple[float, list[float]]:
    """max_k ||T^k||^{1/k} over k <= k_max, plus the whole sequence.

    Monomial symbols only; converges to |b|/alpha from below as max_m grows.
    """
    per_k = [
        shift_power_norm(g, params, k, max_m) ** (1.0 / k) for k in range(1, k_max + 1)
    ]
    return max(per_k), per_k


def membership_scan(
    g: PolynomialSymbol, params: FockParams, grid: list[complex]
) -> list[tuple[complex, MembershipVerdict]]:
    """Classify exp(g/lambda) membership on a lambda grid (0 excluded)."""
    if any(lam == 0 for lam in grid):
        raise ValueError("grid must avoid lambda = 0")
    return [(lam, exp_membership(g, lam, params)) for lam in grid]


def resolvent_norm_probe(
    g: PolynomialSymbol,
    lam: complex,
    params: FockParams,
    probes: list[TruncatedSeries],
    order: int,
    scheme: QuadratureScheme,
) -> float:
    """Lower bound for ||R_{lambda,g}||: max_h ||R h|| / ||h|| over the probes.

    Finite for every truncation; blow-up inside the disk shows up as growth
    of this ratio across truncation orders.
    """
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    if not probes:
        raise ValueError("probes must be nonempty")
    best = 0.0
    for h in probes:
        hn = series_norm(h, params, scheme)
        if hn == 0.0:
            raise ValueError("probes must be nonzero")
        rh = resolvent_apply(g, lam, h, order)
        best = max(best, series_norm(rh, params, scheme) / hn)
    return best


def lp_ratio_experiment(
    family: list[TruncatedSeries],
    params: FockParams,
    scheme: QuadratureScheme,
) -> tuple[float, float]:
    """Extremes of lp_rhs / series_norm over the family (two-sided equivalence)."""
    if not family:
        raise ValueError("family must be nonempty")
    ratios = []
    for f in family:
        nrm = series_norm(f, params, scheme)
        if nrm == 0.0:
            raise ValueError("family contains a zero-norm member")
        ratios.append(lp_rhs(f, params, scheme) / nrm)
    return min(ratios), max(ratios)


def _log_twisted_integral(
    f: TruncatedSeries,
    b: complex,
    big_a: int,
    lam: complex,
    params: FockParams,
    scheme: QuadratureScheme,
    extra_radial_log: np.ndarray | None = None,
) -> float:
    """log of int |f|^p exp(p Re(b z^A / lam)) e^{-p alpha |z|^A} [extra] dA.

    The scheme must be built with the effective decay alpha - |b/lam| so its
    radial range covers the slower-decaying twisted weight; the scheme's own
    Gaussian factor is swapped for the exact pointwise one here.
    """
    if f.is_zero():
        return -math.inf
    p, a = params.p, params.alpha
    a_eff = a - abs(b / lam)
    if (
        scheme.params.p != p
        or scheme.params.big_a != big_a
        or abs(scheme.params.alpha - a_eff) > 1e-12 * a
    ):
        raise ValueError(
            "scheme must be built with the effective weight alpha - |b/lambda|"
        )
    scheme.require_degree(f.order)
    r = scheme.radial_r
    n_theta = scheme.angular_count
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    la = _log_abs_values(f, r, n_theta)  # (nr, ntheta)
    c = b / lam
    angular = np.real(c * np.exp(1j * big_a * theta))  # Re(c e^{iA theta})
    exponent = p * la + p * np.outer(r**big_a, angular) - p * a * r[:, None] ** big_a
    # swap the scheme's e^{-p a_eff r^A} for the exact weight above
    geo = scheme.radial_log_weight + p * a_eff * r**big_a
    if extra_radial_log is not None:
        geo = geo + extra_radial_log
    row = logsumexp(exponent, axis=1) - math.log(n_theta)
    return float(logsumexp(geo + row) + math.log(2.0 * math.pi))


def weighted_lp_experiment(
    b: complex,
    big_a: int,
    lam: complex,
    params: FockParams,
    family: list[TruncatedSeries],
    scheme: QuadratureScheme,
) -> float:
    """max over the family of LHS/RHS of the twisted Littlewood-Paley bound:

    int |f|^p |e^{g/lam}|^p e^{-p alpha |z|^A} dA
      <= C (|f(0)|^p + int |f'|^p |e^{g/lam}|^p e^{-p alpha |z|^A}
                           (1+|z|)^{-(A-1)p} dA)
    """
    if big_a != int(big_a) or big_a < 1:
        raise ValueError("A must be a positive integer")
    if abs(b / lam) >= params.alpha:
        raise ValueError("hypothesis alpha > |b/lambda| violated")
    if not family:
        raise ValueError("family must be nonempty")
    p, big_a = params.p, int(big_a)
    worst = 0.0
    for f in family:
        if f.is_zero():
            continue
        lhs_log = _log_twisted_integral(f, b, big_a, lam, params, scheme)
        fp = differentiate(f)
        terms = []
        f0 = abs(complex(f.coeffs[0]))
        if f0 > 0:
            terms.append(p * math.log(f0))
        if not fp.is_zero():
            extra = -(big_a - 1) * p * np.log1p(scheme.radial_r)
            terms.append(
                _log_twisted_integral(fp, b, big_a, lam, params, scheme, extra)
            )
        rhs_log = logsumexp(terms)
        worst = max(worst, math.exp(lhs_log - rhs_log))
    return worst


def boundary_term_decay(
    f: TruncatedSeries,
    b: complex,
    big_a: int,
    lam: complex,
    params: FockParams,
    r_grid: list[float],
    exp_order: int = 96,
) -> list[tuple[float, float]]:
    """Majorant e^{-p alpha R^A} R^{2-A} M_{p,R}^p(f e^{g/lam}) on an R grid.

    Requires exp(g/lam) to be a member of the space (the circle integrals
    otherwise grow faster than the weight decays).
    """
    g = PolynomialSymbol.from_power_coeffs([0.0] * big_a + [b])
    if exp_membership(g, lam, params) is not MembershipVerdict.MEMBER:
        raise ValueError("exp(g/lambda) is not a member for this lambda")
    if f.is_zero():
        return [(float(r), 0.0) for r in r_grid]
    p, a = params.p, params.alpha
    egl = exp_series(scale(g.as_series(exp_order), 1.0 / lam))
    psi = multiply(f, egl, f.order + exp_order)
    n_theta = 4 * psi.order + 16
    out = []
    for r in r_grid:
        lm = log_integral_means_pow(psi, p, float(r), n_theta)
        val = math.exp(-p * a * r**big_a + (2.0 - big_a) * math.log(r) + lm)
        out.append((float(r), val))
    return out


#: boundedness_diagnostic tail-slope thresholds: the column norms behave like
#: n^{deg/A - 1}, so the log-log slope separates the three regimes by at
#: least 1/A in absolute value on the integer grid in scope
SLOPE_TOLERANCE = 0.12


def boundedness_diagnostic(
    g: PolynomialSymbol, params: FockParams, big_n: int
) -> tuple[str, np.ndarray]:
    """Trend of ||T_g e_n|| for n <= N: Vanishing / Bounded / Diverging.

    Classified from the log-log slope of the tail (n in [N/2, N]); the slope
    tends to degree/A - 1, negative iff compact, positive iff unbounded.
    """
    if params.p != 2:
        raise ValueError("diagnostic runs in the p = 2 basis")
    m = tg_matrix(g, params, big_n + g.degree)
    a_n = m.column_norms()[: big_n + 1]
    lo = max(8, big_n // 2)
    n = np.arange(lo, big_n + 1)
    slope = np.polyfit(np.log(n), np.log(a_n[lo:]), 1)[0]
    if slope < -SLOPE_TOLERANCE:
        trend = "Vanishing"
    elif slope > SLOPE_TOLERANCE:
        trend = "Diverging"
    else:
        trend = "Bounded"
    return trend, a_n
