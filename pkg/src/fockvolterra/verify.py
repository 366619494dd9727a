"""Named verification suites behind the `verify` CLI subcommand.

Each suite returns (rows, all_pass): rows are plain dicts ready for CSV or
JSON emission, each carrying a boolean "pass" field judged against the
frozen constants in calibration.py or against closed-form oracles.
"""

from __future__ import annotations

import math

from . import calibration
from .operators import PolynomialSymbol
from .series import TruncatedSeries, exp_series, scale
from .spaces import (
    FockParams,
    build_scheme,
    log_monomial_norm,
    monomial_norm,
    series_norm,
)
from .spectral import (
    boundary_term_decay,
    boundedness_diagnostic,
    lp_ratio_experiment,
    weighted_lp_experiment,
)

SUITES = ("norms", "lp", "weighted-lp", "boundary", "boundedness")


def lp_family(n_max: int = 40) -> list[TruncatedSeries]:
    """Monomials up to n_max plus partial sums of e^z and e^{z^2/4}."""
    fam = [TruncatedSeries.monomial(n) for n in range(n_max + 1)]
    if n_max >= 4:
        ez = exp_series(TruncatedSeries.monomial(1, order=n_max))
        ez2 = exp_series(scale(TruncatedSeries.monomial(2, order=n_max), 0.25))
        for k in (4, 8, 16, 32):
            if k <= n_max:
                fam.append(ez.truncated(k))
                fam.append(ez2.truncated(k))
    return fam


def suite_norms(n_max: int = 40, tol: float = 1e-10):
    """Quadrature norm vs closed-form Gamma norm on a params grid."""
    rows = []
    for p in (1.0, 2.0):
        for alpha in (0.5, 1.0):
            for big_a in (1.0, 2.0, 2.5):
                params = FockParams(p, alpha, big_a)
                scheme = build_scheme(params, n_max)
                for n in range(0, n_max + 1, 4):
                    closed = monomial_norm(n, params)
                    quad = series_norm(TruncatedSeries.monomial(n), params, scheme)
                    rel = abs(quad / closed - 1.0)
                    rows.append(
                        {
                            "p": p,
                            "alpha": alpha,
                            "A": big_a,
                            "n": n,
                            "closed_form": closed,
                            "quadrature": quad,
                            "rel_error": rel,
                            "pass": rel <= tol,
                        }
                    )
    return rows, all(r["pass"] for r in rows)


def suite_lp(n_max: int = 40):
    """Two-sided Littlewood-Paley ratio band at params (2, 1/2, 2)."""
    if n_max < 0:
        raise ValueError("family is empty")
    params = FockParams(2.0, 0.5, 2.0)
    scheme = build_scheme(params, max(n_max, 1))
    lo, hi = lp_ratio_experiment(lp_family(n_max), params, scheme)
    band_lo, band_hi = calibration.LP_RATIO_BAND
    ok = band_lo <= lo and hi <= band_hi
    rows = [
        {
            "min_ratio": lo,
            "max_ratio": hi,
            "band_lo": band_lo,
            "band_hi": band_hi,
            "quotient": hi / lo,
            "pass": ok,
        }
    ]
    return rows, ok


def suite_weighted_lp(n_funcs: int = 20):
    """Twisted inequality bound for b=1, A=2, alpha=1, p=2, lambda grid."""
    params = FockParams(2.0, 1.0, 2.0)
    fam = [
        TruncatedSeries.monomial(n, coeff=math.exp(-log_monomial_norm(n, params)))
        for n in range(n_funcs)
    ]
    rows = []
    for lam in (4.0, 8.0, -4.0):
        a_eff = params.alpha - abs(1.0 / lam)
        scheme = build_scheme(FockParams(2.0, a_eff, 2.0), n_funcs)
        worst = weighted_lp_experiment(1.0, 2, lam, params, fam, scheme)
        rows.append(
            {
                "lambda": lam,
                "max_lhs_over_rhs": worst,
                "bound": calibration.WEIGHTED_LP_BOUND,
                "pass": worst <= calibration.WEIGHTED_LP_BOUND,
            }
        )
    return rows, all(r["pass"] for r in rows)


def suite_boundary():
    """Boundary-term majorant decay for f=1, b=1, A=2, lambda=4, alpha=1, p=2."""
    params = FockParams(2.0, 1.0, 2.0)
    vals = boundary_term_decay(
        TruncatedSeries.one(0), 1.0, 2, 4.0, params, [1, 2, 3, 4, 5, 6]
    )
    rows = []
    prev = None
    ok = True
    for r, v in vals:
        decreasing = prev is None or v < prev
        if r >= 2 and not decreasing:
            ok = False
        rows.append({"R": r, "majorant": v, "decreasing": decreasing, "pass": True})
        prev = v
    if vals[-1][1] > 1e-8:
        ok = False
    for row in rows:
        row["pass"] = ok
    return rows, ok


def suite_boundedness(g: PolynomialSymbol, params: FockParams, n: int = 400):
    """Column-norm trend vs the degree-versus-A criterion."""
    trend, seq = boundedness_diagnostic(g, params, n)
    if g.degree < params.big_a:
        want = "Vanishing"
    elif g.degree == params.big_a:
        want = "Bounded"
    else:
        want = "Diverging"
    rows = [
        {
            "degree": g.degree,
            "A": params.big_a,
            "trend": trend,
            "expected": want,
            "tail_value": float(seq[-1]),
            "pass": trend == want,
        }
    ]
    return rows, trend == want
