"""Quadrature controls and the two workhorse rules used across the kernel.

Panel Gauss-Legendre for smooth-by-construction panels, and an
alternating-tail rule (pi-length panels plus iterated averaging of the
partial sums) for integrands that decay only through unit-frequency
oscillation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances, truncation, and subdivision limits for numerical integrals."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    max_subdivisions: int = 4000
    truncation_decades: int = 3

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_SPEC = QuadratureSpec()

_GL_CACHE: dict = {}


def gl_nodes(n: int):
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


def gl_panel(f, a: float, b: float, n: int = 24) -> float:
    """Gauss-Legendre on one panel; f must accept a numpy array."""
    x, w = gl_nodes(n)
    mid, half = 0.5 * (b + a), 0.5 * (b - a)
    return half * float(np.sum(w * f(mid + half * x)))

def gl_panels(f, edges, n: int = 24) -> float:
    """Sum of Gauss-Legendre panels over consecutive edge pairs (vectorized)."""
    edges = np.asarray(edges, dtype=np.float64)
    x, w = gl_nodes(n)
    mids = 0.5 * (edges[1:] + edges[:-1])
    halfs = 0.5 * (edges[1:] - edges[:-1])
    pts = (mids[:, None] + halfs[:, None] * x[None, :]).ravel()
    vals = np.asarray(f(pts), dtype=np.float64).reshape(len(mids), len(x))
    return float(np.sum(halfs * (vals @ w)))


def adaptive_panels(f, a: float, b: float, spec: QuadratureSpec = DEFAULT_SPEC,
                    n: int = 24) -> float:
    """Bisecting panel integration with an n vs 2n error probe per panel."""
    stack = [(a, b)]
    total = 0.0
    splits = 0
    while stack:
        lo, hi = stack.pop()
        coarse = gl_panel(f, lo, hi, n)
        fine = gl_panel(f, lo, hi, 2 * n)
        if abs(fine - coarse) <= spec.abs_tol + spec.rel_tol * abs(fine) or splits >= spec.max_subdivisions:
            total += fine
            continue
        midp = 0.5 * (lo + hi)
        stack.append((lo, midp))
        stack.append((midp, hi))
        splits += 1
    return total


def alternating_tail(f, v0: float, period: float = math.pi, max_panels: int = 600,
                     levels: int = 10, n: int = 16, tol: float = 1e-11):
    """Integral of f over [v0, inf) for unit-frequency oscillatory decay.

    Accumulates period-length panels and applies iterated averaging to
    the partial sums; returns (value, error_estimate).  The estimate is
    the spread of the last few accelerated values.
    """
    x, w = gl_nodes(n)
    panels = []
    a = v0
    batch = 40
    best = None
    for _ in range(max_panels // batch):
        edges = a + period * np.arange(batch + 1)
        mids = 0.5 * (edges[1:] + edges[:-1])
        halfs = 0.5 * (edges[1:] - edges[:-1])
        pts = (mids[:, None] + halfs[:, None] * x[None, :]).ravel()
        vals = np.asarray(f(pts), dtype=np.float64).reshape(batch, n)
        panels.extend((halfs * (vals @ w)).tolist())
        a = edges[-1]
        s = np.cumsum(panels)
        lev = min(levels, len(s) - 2)
        for _ in range(lev):
            s = 0.5 * (s[:-1] + s[1:])
        est = abs(s[-1] - s[-3]) + abs(s[-1] - s[-2]) if len(s) >= 3 else math.inf
        best = (float(s[-1]), float(est))
        if est < tol:
            break
    return best
