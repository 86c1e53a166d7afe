"""q-expansion of the weight-3 eta product q prod (1-q^n)^3 (1-q^{tn})^3.

Cubes of the eta factor expand by the classical alternating-triangular
series prod (1-q^n)^3 = sum_{a>=0} (-1)^a (2a+1) q^{a(a+1)/2}, so the
product has integer coefficients

    a(n) = sum over 1 + a(a+1)/2 + t b(b+1)/2 = n of
           (-1)^(a+b) (2a+1)(2b+1),

computed here by one vectorized scatter per b (indices within one b are
distinct, so fancy-index addition is safe).  t = 7 gives the dihedral
level-7 form with character (-7/.), the workhorse of the experiments.
"""

from __future__ import annotations

import math

import numpy as np

from ..arith import char_from_kronecker
from .forms import CuspForm


def eta_cubed_pair_coeffs(M: int, t: int = 7) -> np.ndarray:
    """Integer coefficients a(1..M)."""
    if M < 1:
        raise ValueError("M must be >= 1")
    out = np.zeros(M + 1, dtype=np.int64)
    amax = (math.isqrt(8 * M + 1) + 1) // 2
    ar = np.arange(amax + 1, dtype=np.int64)
    tri = ar * (ar + 1) // 2
    wa = np.where(ar % 2 == 0, 2 * ar + 1, -(2 * ar + 1))
    b = 0
    while True:
        base = 1 + t * b * (b + 1) // 2
        if base > M:
            break
        wb = (2 * b + 1) if b % 2 == 0 else -(2 * b + 1)
        idx = base + tri
        sel = idx <= M
        out[idx[sel]] += wa[sel] * wb
        b += 1
    return out[1:]


def eta7_cusp_form(M: int) -> CuspForm:
    """The weight-3, level-7 dihedral form, lifted to level 28."""
    coeffs = eta_cubed_pair_coeffs(M, t=7).astype(np.float64)
    chi = char_from_kronecker(-7, 28)
    return CuspForm(level=28, weight=3, character=chi, coeffs=coeffs,
                    label="eta(z)^3 eta(7z)^3, level 7 lifted to 28")
