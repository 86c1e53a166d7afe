"""Twisted half-integral-weight exponential sums, the Whittaker/Bessel
oscillatory kernel, and sharp-cutoff shifted convolution experiments."""

__version__ = "0.1.0"
