"""Truncated power series with complex coefficients.

A series of order N keeps coefficients c_0..c_N of z^0..z^N. Everything here
is a pure function of its inputs; the coefficient arrays are frozen after
construction, so values can be shared freely.
"""

from __future__ import annotations

import math

import numpy as np

MAX_ORDER = 512


class TruncatedSeries:
    """Entire function represented by its Taylor coefficients up to some order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.asarray(coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficient vector must be 1-d and nonempty")
        if not np.all(np.isfinite(c.view(np.float64))):
            raise ValueError("coefficients must be finite")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"

    @staticmethod
    def zero(order: int = 0) -> "TruncatedSeries":
        return TruncatedSeries(np.zeros(order + 1, dtype=np.complex128))

    @staticmethod
    def one(order: int = 0) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = 1.0
        return TruncatedSeries(c)

    @staticmethod
    def monomial(n: int, coeff: complex = 1.0, order: int | None = None) -> "TruncatedSeries":
        if order is None:
            order = n
        if order < n:
            raise ValueError("order must be at least the monomial degree")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[n] = coeff
        return TruncatedSeries(c)

    def truncated(self, order: int) -> "TruncatedSeries":
        """Coefficients up to the given order, zero-padded if it exceeds self.order."""
        if order < 0:
            raise ValueError("order must be non-negative")
        c = np.zeros(order + 1, dtype=np.complex128)
        m = min(order, self.order)
        c[: m + 1] = self.coeffs[: m + 1]
        return TruncatedSeries(c)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = max(a.order, b.order)
    c = np.zeros(n + 1, dtype=np.complex128)
    c[: a.order + 1] += a.coeffs
    c[: b.order + 1] += b.coeffs
    return TruncatedSeries(c)


def scale(a: TruncatedSeries, s: complex) -> TruncatedSeries:
    return TruncatedSeries(a.coeffs * s)


def multiply(a: TruncatedSeries, b: TruncatedSeries, order: int) -> TruncatedSeries:
    """Cauchy product truncated to the given order.

    Direct O(N^2) convolution; bit-reproducible and fast for the orders in scope.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    full = np.convolve(a.coeffs, b.coeffs)
    c = np.zeros(order + 1, dtype=np.complex128)
    m = min(order + 1, full.size)
    c[:m] = full[:m]
    return TruncatedSeries(c)


def integrate_from_zero(f: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative vanishing at the origin; raises the order by one."""
    n = f.order
    c = np.zeros(n + 2, dtype=np.complex128)
    c[1:] = f.coeffs / np.arange(1, n + 2)
    return TruncatedSeries(c)


def differentiate(f: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise derivative; an order-0 input yields the zero series."""
    if f.order == 0:
        return TruncatedSeries.zero(0)
    return TruncatedSeries(f.coeffs[1:] * np.arange(1, f.order + 1))


def exp_series(f: TruncatedSeries) -> TruncatedSeries:
    """Taylor coefficients of exp(f) to the same order.

    Uses the linear recurrence E' = (f - f(0))' E with E(0) = 1, then scales
    by exp(f(0)).
    """
    n = f.order
    c0 = complex(f.coeffs[0])
    if c0.real > math.log(np.finfo(np.float64).max):
        raise OverflowError("exp of constant term overflows double precision")
    lead = np.exp(c0)
    u = f.coeffs.copy()
    u[0] = 0.0
    ku = np.arange(n + 1) * u  # k * u_k, i.e. coefficients of z u'(z)
    e = np.zeros(n + 1, dtype=np.complex128)
    e[0] = 1.0
    for k in range(1, n + 1):
        # k e_k = sum_{j=1..k} j u_j e_{k-j}
        e[k] = np.dot(ku[1 : k + 1], e[k - 1 :: -1]) / k
    out = lead * e
    if not np.all(np.isfinite(out.view(np.float64))):
        raise OverflowError("exp_series overflowed double precision")
    return TruncatedSeries(out)


def evaluate(f: TruncatedSeries, z: complex) -> complex:
    """Horner evaluation of the truncated series at a point."""
    acc = 0.0 + 0.0j
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)
