"""Frozen regression constants for the equivalence-type checks.

The two-sided norm comparisons come with unquantified constants, so the
bands below were measured once at the pinned configurations (scheme built
by build_scheme defaults) and frozen. A change that moves a ratio outside
its band is a regression, not a tolerance issue.
"""

# lp_rhs / series_norm over {z^n : n <= 40} plus partial sums of e^z and
# e^{z^2/4}, at params (p=2, alpha=1/2, A=2).
# Measured extremes: 0.564190 .. 0.871948 (quotient 1.54549).
LP_RATIO_BAND = (0.52, 0.92)
LP_RATIO_QUOTIENT = 1.5454881879

# max LHS/RHS of the twisted Littlewood-Paley inequality, b=1, A=2, alpha=1,
# p=2, lambda in {4, 8, -4}, normalized monomials up to degree 19.
# Measured: 1.6223 (lam=+-4), 1.5832 (lam=8).
WEIGHTED_LP_BOUND = 2.0

# pairwise ratios of the three weighted integrals (full plane vs |z|>1 vs
# the f/z variant) on {z^n : 1 <= n <= 40} at params (2, 1/2, 2).
# Measured: full/outer in [1.00, 1.72], full/outer_z in [0.41, 0.75],
# outer/outer_z in [0.33, 0.75].
REMARK1_FULL_OVER_OUTER = (0.95, 1.90)
REMARK1_FULL_OVER_OUTER_Z = (0.35, 0.85)
REMARK1_OUTER_OVER_OUTER_Z = (0.28, 0.85)

# point-evaluation ratio |f(z0)| e^{-alpha |z0|^A} / ||f|| over monomials up
# to degree 20 at params (2, 1/2, 2); measured 0.5642 at z0=0, 0.3422 at
# |z0|=1.
POINT_EVAL_BOUND = 0.65
