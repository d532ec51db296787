#!/usr/bin/env python3

import os
import sys
import cmath
import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "python3"))

from infoaging import ArModel, REFERENCE_AR4, autocovariance      # noqa: E402


@pytest.fixture(scope="session")
def ar4():
    return REFERENCE_AR4


@pytest.fixture(scope="session")
def ar4_acf(ar4):
    # enough lags for M=50 grids with l up to 6
    return autocovariance(ar4, 120)


@pytest.fixture
def ar1():
    # gamma(k) = 0.5^k, E[Y^2] = 1.1
    return ArModel(coeffs=(0.5,), sigma2_w=0.75, sigma2_n=0.1)


def random_stationary_model(rng, p, radius=0.5):
    """Random AR(p) whose characteristic roots lie in the disc |z| <= radius."""
    roots = []
    while len(roots) < p:
        if p - len(roots) >= 2 and rng.random() < 0.5:
            z = radius * np.sqrt(rng.random()) * cmath.exp(1j * rng.uniform(0, np.pi))
            roots += [z, z.conjugate()]
        else:
            roots.append(rng.uniform(-radius, radius))
    poly = np.real(np.poly(roots))
    return ArModel(coeffs=tuple(-poly[1:]), sigma2_w=rng.uniform(0.1, 2.0), sigma2_n=rng.uniform(0.01, 0.5))


@pytest.fixture
def model_factory():
    return random_stationary_model
