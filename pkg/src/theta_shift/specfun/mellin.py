"""The triple-product y-integral against a Whittaker kernel, as a
Mellin-Barnes contour integral, with the direct quadrature as an
independent second route.

For coefficients n1 >= 0, n2 != 0, m = n1 + n2 and spectral data (k, t),
the object is

    int_0^inf y^{k/2 - 3/4} e^{-2 pi (n1 + m) y}
              W_{sgn(n2) kappa/2, it}(4 pi |n2| y) dy / y,

kappa = k - 1/2.  The contour form integrates gamma-factor ratios along
a vertical line inside 0 < Re w < kappa/2 - |Im t|; the integrand decays
like e^{-pi(|v| - |t|)} past |Im w| = |t|, which sets the truncation.
"""

from __future__ import annotations

import math

import numpy as np

from ..quadrature import DEFAULT_SPEC, QuadratureSpec, gl_nodes
from .gammafun import log_gamma_vec
from .whittaker import whittaker_solution


def _validate(n1: int, n2: int, m: int, k: int, t: complex) -> None:
    if n1 < 0:
        raise ValueError("n1 must be >= 0")
    if n2 == 0:
        raise ValueError("n2 must be nonzero")
    if m <= 0:
        raise ValueError("m must be positive")
    if m != n1 + n2:
        raise ValueError(f"need m = n1 + n2, got {n1} + {n2} != {m}")
    if k < 3:
        raise ValueError("weight k must be >= 3")
    t = complex(t)
    if abs(t.real) * abs(t.imag) > 1e-14:
        raise ValueError("spectral parameter must be real or purely imaginary")


def mellin_barnes_G(n1: int, n2: int, m: int, k: int, t: complex, re_w: float,
                    spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """Contour-integral evaluation along Re w = re_w."""
    _validate(n1, n2, m, k, t)
    t = complex(t)
    kappa = k - 0.5
    strip_top = kappa / 2.0 - abs(t.imag)
    if not 0.0 < re_w < strip_top:
        raise ValueError(f"re_w must lie in (0, {strip_top}), got {re_w}")
    if n2 > 0:
        if n1 == 0:
            raise ValueError("contour form needs n1 >= 1 when n2 > 0")
        log_ratio = math.log(n2 / n1)
        pole_shift = 0.5
    else:
        log_ratio = math.log(abs(n2) / m)
        pole_shift = float(k)
    log_front = -(k / 2.0 - 0.75) * math.log(4.0 * math.pi * abs(n2))

    def integrand(v: np.ndarray) -> np.ndarray:
        w = re_w + 1j * v
        lg = (log_gamma_vec(kappa / 2.0 + 1j * t - w)
              + log_gamma_vec(kappa / 2.0 - 1j * t - w)
              + log_gamma_vec(w)
              - log_gamma_vec(pole_shift - w)
              + w * log_ratio + log_front)
        return np.exp(lg)

    tt = abs(t.real) + abs(t.imag)
    v_max = tt + max(12.0, (math.log(1.0 / spec.abs_tol) + k * math.log(2.0 + tt)) / math.pi + 6.0)
    # conjugate symmetry: integral = (1/pi) Re int_0^Vmax
    edges = np.concatenate([
        np.linspace(0.0, tt + 2.0, max(8, int(2 * (tt + 2)))),
        np.linspace(tt + 2.0, v_max, max(8, int(v_max - tt))),
    ])
    edges = np.unique(edges)
    x, wts = gl_nodes(32)
    total = 0.0 + 0.0j
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
        total += half * np.sum(wts * integrand(mid + half * x))
    return complex(total.real / math.pi, 0.0)


def direct_G(n1: int, n2: int, m: int, k: int, t: complex,
             spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Direct y-quadrature of the defining integral (Whittaker route)."""
    _validate(n1, n2, m, k, t)
    t = complex(t)
    kappa = k - 0.5
    eta = kappa / 2.0 if n2 > 0 else -kappa / 2.0
    mu = 1j * t.real if t.imag == 0 else complex(-t.imag, 0.0)
    a = 4.0 * math.pi * abs(n2)
    p = 2.0 * math.pi * (n1 + m)
    decay = p + 0.5 * a  # true exponential rate of the integrand
    nu = k / 2.0 - 0.75
    y_hi = (65.0 + 8.0 * math.log1p(abs(eta) + abs(mu))) / decay
    y_lo = 1e-7
    sol = whittaker_solution(eta, mu, a * y_lo, a * y_hi)

    def f(ys: np.ndarray) -> np.ndarray:
        w = sol.w_values(a * ys)
        return ys ** (nu - 1.0) * np.exp(-p * ys) * w

    x, wts = gl_nodes(32)
    # log-spaced panels near 0 (integrand ~ y^{nu - 1/2}), linear past 1/decay
    edges = list(np.geomspace(y_lo, 1.0 / decay, 12)) + list(
        np.linspace(1.0 / decay, y_hi, 40)[1:])
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
        total += half * float(np.sum(wts * f(mid + half * x)))
    return total
