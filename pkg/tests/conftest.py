import time

import numpy as np
import pytest

from theta_shift.modforms.eta import eta7_cusp_form

BUILD_SECONDS = {}


@pytest.fixture(scope="session")
def eta7_small():
    return eta7_cusp_form(300_000)


@pytest.fixture(scope="session")
def eta7_big():
    # enough coefficients for n^2 + h through X = 4096, h <= 7
    t0 = time.monotonic()
    f = eta7_cusp_form(16_900_000)
    BUILD_SECONDS["eta7_big"] = time.monotonic() - t0
    return f


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)
