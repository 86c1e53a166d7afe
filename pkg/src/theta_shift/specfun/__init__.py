from .besselj import bessel_J_imag_order
from .gammafun import digamma, gamma, log_gamma
from .mellin import direct_G, mellin_barnes_G
from .oscillatory import I_kappa, g_kappa, g_kappa_t
from .whittaker import (
    AccuracyWarning,
    WhittakerParams,
    whittaker_W,
    whittaker_W_grid,
    whittaker_l2_norm,
    whittaker_lower_bound_check,
    whittaker_norm_closed_form,
    whittaker_uniform_ratio,
    whittaker_uniform_ratio_grid,
)

__all__ = [
    "AccuracyWarning",
    "I_kappa",
    "WhittakerParams",
    "bessel_J_imag_order",
    "digamma",
    "direct_G",
    "g_kappa",
    "g_kappa_t",
    "gamma",
    "log_gamma",
    "mellin_barnes_G",
    "whittaker_W",
    "whittaker_W_grid",
    "whittaker_l2_norm",
    "whittaker_lower_bound_check",
    "whittaker_norm_closed_form",
    "whittaker_uniform_ratio",
    "whittaker_uniform_ratio_grid",
]
