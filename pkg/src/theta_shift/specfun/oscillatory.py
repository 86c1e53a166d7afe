"""The Bessel-kernel oscillatory integrals I_kappa(omega, t) and their
t-average G_kappa(omega, T).

I_kappa is evaluated through its J-Bessel reduction: a finite integral
over (0, omega) for kappa > 0 and a tail integral over (omega, inf) for
kappa <= 0, of sinh/cosh-weighted combinations of J_{+-2it}.  Near t = 0
the sinh denominator is removable; evaluation averages t = +-1e-4.

G_kappa has two routes:

* g_kappa_t: direct adaptive quadrature of t * I_kappa over [0, T];
* g_kappa: the double-integral form, reduced by one integration by
  parts in q to

      G = omega * A + kappa * omega^{1-kappa} * B,
      A = int (tanh xi / xi)(1 - cos 2T xi) sin(omega cosh xi - pi kappa / 2) dxi,
      B = int (sinh xi / xi)(1 - cos 2T xi) cosh(xi)^{-1-kappa}
              * Im Gamma(kappa, -i omega cosh xi) dxi,

  one formula for the whole range kappa in (-2, 2).  The xi-head is
  integrated on panels resolving the local frequency 2T + omega sinh xi;
  past that the substitution v = omega cosh xi turns both pieces into
  unit-frequency oscillatory tails handled by the alternating rule.
"""

from __future__ import annotations

import math

import numpy as np

from ..quadrature import DEFAULT_SPEC, QuadratureSpec, alternating_tail, gl_nodes, gl_panels
from .besselj import bessel_J_imag_order
from .gammafun import log_gamma
from .incgamma import im_upper_gamma_imag_axis

_T_FLOOR = 1e-4


def _check_kappa(kappa: float) -> None:
    if not -2.0 < kappa < 2.0:
        raise ValueError(f"kappa must lie in (-2, 2), got {kappa}")


def _j_moment_head(kappa: float, t: float, q0: float) -> complex:
    """int_0^q0 J_{2it}(q) q^(kappa-1) dq from the ascending series, termwise."""
    nu = 2j * t
    total = 0.0 + 0.0j
    coef = np.exp(-nu * math.log(2.0) - log_gamma(nu + 1.0))
    k = 0
    while True:
        expo = kappa + 2 * k + nu
        term = coef * q0**(kappa + 2 * k) * np.exp(nu * math.log(q0)) / expo
        total += term
        if abs(term) < 1e-16 * max(1.0, abs(total)) or k > 60:
            break
        k += 1
        coef *= -0.25 / (k * (nu + k))
    return complex(total)


def _j_moment_panels(kappa: float, t: float, a: float, b: float) -> complex:
    """int_a^b J_{2it}(q) q^(kappa-1) dq on geometric-then-unit panels."""
    edges = [a]
    x = a
    while x < min(b, 1.0):
        x = min(2.0 * x, min(b, 1.0))
        edges.append(x)
    while x < b:
        x = min(x + 1.0, b)
        edges.append(x)
    nodes, weights = gl_nodes(24)
    total = 0.0 + 0.0j
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
        pts = mid + half * nodes
        vals = np.array([bessel_J_imag_order(t, q) for q in pts])
        total += half * np.sum(weights * vals * pts ** (kappa - 1.0))
    return complex(total)


def _j_moment_tail(kappa: float, t: float, omega: float) -> complex:
    """int_omega^inf J_{2it}(q) q^(kappa-1) dq, oscillation-accelerated."""
    re = alternating_tail(
        lambda q: np.array([bessel_J_imag_order(t, qq).real for qq in q]) * q ** (kappa - 1.0),
        omega, max_panels=320, n=12)
    im = alternating_tail(
        lambda q: np.array([bessel_J_imag_order(t, qq).imag for qq in q]) * q ** (kappa - 1.0),
        omega, max_panels=320, n=12)
    return complex(re[0], im[0])


def I_kappa(kappa: float, omega: float, t: float,
            spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """The pre-trace-formula kernel integral, real-valued."""
    _check_kappa(kappa)
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if abs(t) < _T_FLOOR:
        return 0.5 * (_I_kappa_at(kappa, omega, _T_FLOOR)
                      + _I_kappa_at(kappa, omega, -_T_FLOOR))
    return _I_kappa_at(kappa, omega, t)


def _I_kappa_at(kappa: float, omega: float, t: float) -> float:
    if kappa > 0:
        q0 = min(omega, 0.25)
        C = _j_moment_head(kappa, t, q0)
        if omega > q0:
            C += _j_moment_panels(kappa, t, q0, omega)
        sign = -1.0
    else:
        C = _j_moment_tail(kappa, t, omega)
        sign = 1.0
    val = (math.cos(math.pi * kappa / 2.0) / math.cosh(math.pi * t) * C.real
           + math.sin(math.pi * kappa / 2.0) / math.sinh(math.pi * t) * C.imag)
    return sign * 2.0 * math.pi * omega ** (1.0 - kappa) * val


def g_kappa_t(kappa: float, omega: float, T: float,
              spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """G by its definition: composite t-quadrature of t * I_kappa."""
    _check_kappa(kappa)
    if T < 0:
        raise ValueError("T must be nonnegative")
    if T == 0:
        return 0.0
    nodes, weights = gl_nodes(16)
    n_panels = max(3, int(math.ceil(T * 2)))
    edges = np.linspace(0.0, T, n_panels + 1)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
        for x, w in zip(nodes, weights):
            tt = mid + half * x
            total += half * w * tt * I_kappa(kappa, omega, tt, spec)
    return total


def g_kappa(kappa: float, omega: float, T: float,
            spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """G via the reduced double-integral form (fast route)."""
    _check_kappa(kappa)
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if T < 0:
        raise ValueError("T must be nonnegative")
    if T == 0:
        return 0.0
    half_pk = 0.5 * math.pi * kappa
    xi_c = math.asinh(4.0 * (2.0 * T + 1.0) / omega)
    v_c = omega * math.cosh(xi_c)

    def a_head(xi):
        out = np.zeros_like(xi)
        nz = xi > 0
        x = xi[nz]
        out[nz] = (np.tanh(x) / x) * (1.0 - np.cos(2.0 * T * x)) \
            * np.sin(omega * np.cosh(x) - half_pk)
        return out

    def b_head(xi):
        out = np.zeros_like(xi)
        nz = xi > 0
        x = xi[nz]
        ch = np.cosh(x)
        out[nz] = (np.sinh(x) / x) * (1.0 - np.cos(2.0 * T * x)) \
            * ch ** (-1.0 - kappa) * im_upper_gamma_imag_axis(kappa, omega * ch)
        return out

    # panels sized to the local frequency 2T + omega*sinh(xi)
    edges = [0.0]
    x = 0.0
    while x < xi_c:
        freq = 2.0 * T + omega * math.sinh(x) + 1.0
        x = min(x + math.pi / freq, xi_c)
        edges.append(x)
    A = gl_panels(a_head, edges, 16)
    B = gl_panels(b_head, edges, 16)

    def a_tail(v):
        xi = np.arccosh(v / omega)
        return (1.0 - np.cos(2.0 * T * xi)) * np.sin(v - half_pk) / (v * xi)

    def b_tail(v):
        xi = np.arccosh(v / omega)
        return (1.0 - np.cos(2.0 * T * xi)) * (omega / v) ** (1.0 + kappa) \
            * im_upper_gamma_imag_axis(kappa, v) / (omega * xi)

    ta, _ = alternating_tail(a_tail, v_c, max_panels=1600, tol=spec.abs_tol)
    tb, _ = alternating_tail(b_tail, v_c, max_panels=1600, tol=spec.abs_tol)
    A += ta
    B += tb
    return omega * A + kappa * omega ** (1.0 - kappa) * B


def I_kappa_contour_check(kappa: float, omega: float, t: float) -> float:
    """Independent oracle: direct contour integration of the defining
    integral over the unit semicircle, using an external K-Bessel."""
    import mpmath as mp

    f = lambda phi: mp.besselk(2j * t, omega * mp.e ** (1j * phi)) * mp.e ** (1j * kappa * phi)
    val = 2 * omega * mp.quad(f, [-mp.pi / 2, 0, mp.pi / 2])
    return float(mp.re(val))
