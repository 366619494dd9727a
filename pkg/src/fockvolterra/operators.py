"""The integration operator T_g f = int_0^z f g' dzeta and its resolvent.

In the orthonormalized monomial basis e_n = z^n / ||z^n|| (p = 2 only) the
operator is a banded strictly lower triangular matrix; for a monomial symbol
b z^A it is a weighted shift, whose power norms are products of step weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .series import (
    TruncatedSeries,
    add,
    differentiate,
    exp_series,
    integrate_from_zero,
    multiply,
    scale,
)
from .spaces import FockParams, log_monomial_norm


class PolynomialSymbol:
    """Polynomial symbol g with g(0) = 0: coefficients b_1..b_d, b_d != 0.

    A constant term in the input is dropped silently; only g' enters T_g.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        b = np.asarray(coeffs, dtype=np.complex128)
        if b.ndim != 1 or b.size == 0:
            raise ValueError("symbol needs at least one coefficient")
        if not np.all(np.isfinite(b.view(np.float64))):
            raise ValueError("symbol coefficients must be finite")
        while b.size > 1 and b[-1] == 0:
            b = b[:-1]
        if b[-1] == 0:
            raise ValueError("symbol must be a nonzero polynomial with g(0)=0")
        b = b.copy()
        b.setflags(write=False)
        object.__setattr__(self, "coeffs", b)

    def __setattr__(self, name, value):
        raise AttributeError("PolynomialSymbol is immutable")

    @staticmethod
    def from_power_coeffs(coeffs) -> "PolynomialSymbol":
        """Build from dense coefficients c_0..c_d of g; the constant is dropped."""
        c = np.asarray(coeffs, dtype=np.complex128)
        if c.size < 2:
            raise ValueError("symbol must have degree >= 1")
        return PolynomialSymbol(c[1:])

    @property
    def degree(self) -> int:
        return self.coeffs.size

    @property
    def leading_coefficient(self) -> complex:
        return complex(self.coeffs[-1])

    def is_monomial(self) -> bool:
        return not np.any(self.coeffs[:-1])

    def coefficient(self, k: int) -> complex:
        """Coefficient of z^k, k >= 1."""
        if 1 <= k <= self.degree:
            return complex(self.coeffs[k - 1])
        return 0.0

    def as_series(self, order: int | None = None) -> TruncatedSeries:
        if order is None:
            order = self.degree
        c = np.zeros(order + 1, dtype=np.complex128)
        m = min(order, self.degree)
        c[1 : m + 1] = self.coeffs[:m]
        return TruncatedSeries(c)

    def derivative(self) -> TruncatedSeries:
        return differentiate(self.as_series())

    def __repr__(self):
        return f"PolynomialSymbol(coeffs={self.coeffs!r})"


def apply_tg(g: PolynomialSymbol, f: TruncatedSeries) -> TruncatedSeries:
    """T_g f = int_0^z f g'; raises the order by degree(g) and vanishes at 0."""
    prod = multiply(f, g.derivative(), f.order + g.degree - 1)
    return integrate_from_zero(prod)


@dataclass(frozen=True)
class ShiftMatrix:
    """Matrix of T_g in the basis e_n = z^n/||z^n|| (p = 2), stored by band.

    bands[k] holds the entries at positions (n+k, n) for n = 0..size-1-k.
    """

    size: int
    bands: dict[int, np.ndarray] = field(repr=False)

    def __post_init__(self):
        for k, band in self.bands.items():
            if k < 1 or band.size != self.size - k:
                raise ValueError("inconsistent band layout")

    def dense(self) -> np.ndarray:
        m = np.zeros((self.size, self.size), dtype=np.complex128)
        for k, band in self.bands.items():
            m[np.arange(k, self.size), np.arange(self.size - k)] = band
        return m

    def column_norms(self) -> np.ndarray:
        """Euclidean norms of the columns, i.e. ||T_g e_n|| for each n."""
        out = np.zeros(self.size)
        for k, band in self.bands.items():
            out[: self.size - k] += np.abs(band) ** 2
        return np.sqrt(out)

    def apply(self, coords: np.ndarray) -> np.ndarray:
        out = np.zeros(self.size, dtype=np.complex128)
        for k, band in self.bands.items():
            out[k:] += band * coords[: self.size - k]
        return out


def _log_norm_table(n_max: int, params: FockParams) -> np.ndarray:
    return np.array([log_monomial_norm(n, params) for n in range(n_max + 1)])


def tg_matrix(g: PolynomialSymbol, params: FockParams, big_n: int) -> ShiftMatrix:
    """Coordinates of T_g on spans of e_0..e_N; strictly lower triangular.

    Requires p = 2: the monomials are orthogonal only there.
    """
    if params.p != 2:
        raise ValueError("the monomial basis is orthogonal only for p = 2")
    if big_n < g.degree:
        raise ValueError("N must be at least degree(g)")
    size = big_n + 1
    logw = _log_norm_table(big_n, params)
    bands = {}
    for k in range(1, g.degree + 1):
        b_k = g.coefficient(k)
        if b_k == 0:
            continue
        n = np.arange(size - k)
        ratio = np.exp(logw[n + k] - logw[n])
        bands[k] = k * b_k * ratio / (n + k)
    return ShiftMatrix(size=size, bands=bands)


def shift_step_weights(g: PolynomialSymbol, params: FockParams, n_max: int) -> np.ndarray:
    """Step weights s_n = A |b| w_{n+A} / ((n+A) w_n) of the weighted shift T_{b z^A}."""
    if params.p != 2:
        raise ValueError("step weights are defined in the p = 2 basis")
    if not g.is_monomial():
        raise ValueError("symbol must be a monomial b z^A")
    big_a = g.degree
    b = abs(g.leading_coefficient)
    logw = _log_norm_table(n_max + big_a, params)
    n = np.arange(n_max + 1)
    return big_a * b * np.exp(logw[n + big_a] - logw[n]) / (n + big_a)


def shift_power_norm(
    g: PolynomialSymbol, params: FockParams, k: int, max_m: int
) -> float:
    """||T_g^k|| for a monomial symbol, restricted to e_0..e_{max_m + kA}.

    T_g^k maps e_m to (prod_{j<k} s_{m+jA}) e_{m+kA}, so the restricted norm
    is the sup over m <= max_m of that product. Exact for weighted shifts.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    big_a = g.degree
    s = shift_step_weights(g, params, max_m + (k - 1) * big_a)
    logs = np.log(s)
    best = -math.inf
    for m in range(max_m + 1):
        total = logs[m : m + k * big_a : big_a].sum()
        best = max(best, total)
    return math.exp(best)


def resolvent_apply(
    g: PolynomialSymbol,
    lam: complex,
    h: TruncatedSeries,
    order: int | None = None,
) -> TruncatedSeries:
    """The explicit inverse of (I - T_g/lambda) applied to h, truncated.

    R h = h(0) e^{g/lam} + e^{g/lam} int_0^z e^{-g/lam} h'.
    """
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    if order is None:
        order = h.order + 4 * g.degree + 8
    if order < h.order:
        raise ValueError("order must be at least order(h)")
    gl = g.as_series(order)
    e_plus = exp_series(scale(gl, 1.0 / lam))
    e_minus = exp_series(scale(gl, -1.0 / lam))
    inner = integrate_from_zero(multiply(e_minus, differentiate(h), order - 1))
    tail = multiply(e_plus, inner, order)
    head = scale(e_plus, complex(h.coeffs[0]))
    return add(head, tail).truncated(order)
