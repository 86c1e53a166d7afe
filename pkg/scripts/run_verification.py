#!/usr/bin/env python3
"""Run every seeded verification suite and print the pass/fail report.

Equivalent to the CLI commands verify-mult, expsum-sweep, salie-bounds,
specfun-check, theta-check in one go; exits nonzero on any hard failure.

Usage:
    python scripts/run_verification.py [--fast]
"""

import argparse
import sys
import time

from theta_shift.harness import suites


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--fast", action="store_true", help="smaller sweeps")
    args = ap.parse_args()
    fast = args.fast

    plan = [
        ("twisted multiplicativity",
         lambda: suites.verify_mult_suite(trials=50 if fast else 200,
                                          max_c=3000 if fast else 10_000)),
        ("square-root cancellation",
         lambda: suites.weil_sweep_suite(trials=100 if fast else 1000,
                                         max_c=1024 if fast else 4096,
                                         exhaustive_max=64 if fast else 128)),
        ("prime-power bound",
         lambda: suites.salie_bound_suite(pmax=1000 if fast else 5000)),
        ("Whittaker norm identity", suites.whittaker_norm_suite),
        ("uniform Whittaker envelope", suites.whittaker_ratio_suite),
        ("tail-integral lower bound", suites.whittaker_lower_suite),
        ("J-Bessel envelopes", suites.bessel_bound_suite),
        ("oscillatory kernel map", suites.oscillatory_map_suite),
        ("contour vs direct", suites.mellin_suite),
        ("explicit inner product", suites.remark_suite),
        ("theta multiplier", suites.theta_suite),
    ]
    all_ok = True
    t0 = time.time()
    for name, fn in plan:
        _, lines, ok = fn()
        all_ok &= ok
        for line in lines:
            print(line)
    print(f"total {time.time()-t0:.1f}s; {'ALL PASS' if all_ok else 'FAILURES PRESENT'}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
