"""Shifted convolution sums, their Dirichlet series, and exponent fits.

The sharp-cutoff sum counts n over all of Z with the square-counting
weight, S(X) = A(h) + 2 sum_{n >= 1, n^2 + h <= X^2} A(n^2 + h), which
is the partial-sum reading of the series below under Perron inversion.
A one-sided variant (n >= 0 only) is exposed for comparison with
single-sided conventions in the literature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .forms import CuspForm, r1


@dataclass
class ShiftedSumSeries:
    h: int
    rows: list = field(default_factory=list)  # (X, S(X)) pairs, X increasing
    fitted_c: float | None = None
    fitted_exponent: float | None = None
    one_sided: bool = False

    def xs(self) -> np.ndarray:
        return np.array([x for x, _ in self.rows])

    def values(self) -> np.ndarray:
        return np.array([s for _, s in self.rows])


def shifted_sum(f: CuspForm, h: int, X_grid, one_sided: bool = False) -> ShiftedSumSeries:
    """Exact partial sums S(X) on an increasing grid, accumulated once."""
    if h <= 0:
        raise ValueError("shift h must be positive")
    X_grid = np.atleast_1d(np.asarray(X_grid, dtype=np.float64))
    if np.any(np.diff(X_grid) <= 0):
        raise ValueError("X grid must be strictly increasing")
    n_needed = math.isqrt(max(int(X_grid[-1] ** 2) - h, 0))
    if n_needed * n_needed + h > f.n_coeffs:
        raise IndexError(
            f"need coefficients to n^2+h = {n_needed**2 + h} > M = {f.n_coeffs}")
    series = ShiftedSumSeries(h=h, one_sided=one_sided)
    weight_half = 1.0 if one_sided else 2.0
    total = (f.A(h) if h <= f.n_coeffs else 0.0)
    n = 1
    for X in X_grid:
        # relative fuzz keeps jump points X = sqrt(n^2 + h) inclusive
        lim = X * X * (1.0 + 8e-16) - h
        while n * n <= lim:
            total += weight_half * f.A(n * n + h)
            n += 1
        series.rows.append((float(X), float(np.real(total)) if np.iscomplexobj(f.coeffs) else float(total)))
    return series


def shifted_sum_scan(f: CuspForm, h: int, X_max: float, one_sided: bool = False):
    """S evaluated at every jump point n^2 + h <= X_max^2 (step function)."""
    lim = int(X_max * X_max - h)
    ns = np.arange(1, math.isqrt(max(lim, 0)) + 1)
    vals = f.A_array(ns * ns + h)
    w = 1.0 if one_sided else 2.0
    cum = f.A(h) + w * np.cumsum(vals)
    xs = np.sqrt(ns.astype(np.float64) ** 2 + h)
    return xs, cum


def dirichlet_D_h(f: CuspForm, h: int, s: complex, cutoff: int):
    """Truncated sum_m r1(m) a(m+h) (m+h)^{-s-k/2+3/4} and a tail estimate.

    Converges absolutely for Re s > 3/4; the tail estimate is the
    Deligne-bound integral comparison with a log factor for the divisor
    growth, honest for newform input but heuristic in general.
    """
    if h <= 0:
        raise ValueError("shift h must be positive")
    if cutoff + h > f.n_coeffs:
        raise IndexError(f"cutoff {cutoff} + h needs M >= {cutoff + h} > {f.n_coeffs}")
    w = s + f.weight / 2.0 - 0.75
    total = f.a(h) * complex(h) ** (-w)
    jmax = math.isqrt(cutoff)
    js = np.arange(1, jmax + 1)
    if len(js):
        ms = js * js + h
        terms = f.coeffs[ms - 1] * np.exp(-w * np.log(ms.astype(np.float64)))
        total += 2.0 * np.sum(terms)
    sigma = np.real(complex(s))
    if sigma <= 0.75:
        tail = math.inf
    else:
        # sum_{j > J} d(j^2+h) (j^2+h)^{1/4 - sigma} ~ integral comparison
        J = max(jmax, 1)
        tail = (2.0 * (math.log(J * J + h) + 1.2)
                * J ** (1.5 - 2.0 * sigma) / (2.0 * sigma - 1.5))
    return complex(total), float(tail)


def fit_exponent(series: ShiftedSumSeries, c: float) -> float:
    """Least-squares slope of log|S(X) - c X| against log X."""
    xs = series.xs()
    if len(xs) < 8:
        raise ValueError("need at least 8 rows for a stable exponent fit")
    resid = np.abs(series.values() - c * xs)
    keep = resid > 1e-12
    if keep.sum() < 2:
        raise ValueError("degenerate grid: residuals vanish")
    slope, _ = np.polyfit(np.log(xs[keep]), np.log(resid[keep]), 1)
    return float(slope)


def fit_main_term(series: ShiftedSumSeries) -> float:
    """Crude main-term constant: S(X)/X at the top grid point."""
    x, s = series.rows[-1]
    return s / x
