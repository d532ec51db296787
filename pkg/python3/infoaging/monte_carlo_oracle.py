#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.

"""
Seeded simulation of the noisy AR(p) source and the empirical estimators
used to cross-check the closed forms.

Standard errors default to batch means over 100 non-overlapping batches,
which accounts for serial correlation. method="iid" gives the plain
formulas instead: gamma_hat(0) * sqrt(2/n) for autocovariances and
sd / sqrt(n) for mean squared residuals.
"""

import math
import logging
import dataclasses
import numpy as np
import scipy.signal
from numpy.lib.stride_tricks import sliding_window_view
from .util import Util
from .ar_model import validate_model, autocovariance, required_max_lag
from .matrix_kernel import SymMatrix, solve_spd
from .gaussian_information import h2_conditional
from . import errors


GENERATOR = "PCG64"
DEFAULT_BURN_IN = 10000
DEFAULT_SAMPLES = 1000000
DEFAULT_Z_MAX = 5.0
DEFAULT_VALIDATION_POINTS = tuple((delta, l) for delta in (0, 1, 4, 8, 12) for l in (1, 2, 4))

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class Trajectory:

    x: np.ndarray
    y: np.ndarray
    n: int
    seed: int
    burn_in: int
    generator: str = GENERATOR

    def __post_init__(self):
        assert len(self.x) == len(self.y) == self.n
        self.x.setflags(write=False)
        self.y.setflags(write=False)


@dataclasses.dataclass(frozen=True, eq=False)
class EmpiricalAcf:

    gamma: np.ndarray
    stderr: np.ndarray
    max_lag: int
    n: int
    method: str


@dataclasses.dataclass(frozen=True, eq=False)
class MmseEstimate:

    mse: float
    stderr: float
    coefficients: np.ndarray
    samples: int


@dataclasses.dataclass(frozen=True)
class OracleRow:

    delta: int
    l: int
    closed_form: float
    empirical: float
    stderr: float
    z: float


def simulate(model, n, burn_in=DEFAULT_BURN_IN, seed=0):
    """Draw burn_in + n innovations, then n observation noises, from one PCG64 stream."""
    report = validate_model(model)
    if not report.stationary:
        raise errors.NonStationaryModelError(errors.NOT_STATIONARY(report.spectral_radius))
    if n < 1:
        raise ValueError("sample count must be at least 1")
    if burn_in < 0:
        raise ValueError("burn-in must not be negative")

    rng = np.random.Generator(np.random.PCG64(seed))
    w = rng.standard_normal(burn_in + n) * math.sqrt(model.sigma2_w)
    noise = rng.standard_normal(n) * math.sqrt(model.sigma2_n)

    # X starts from zero: lfilter runs the recursion with zero initial conditions
    x = scipy.signal.lfilter([1.0], np.r_[1.0, -np.asarray(model.coeffs)], w)[burn_in:]
    x = np.ascontiguousarray(x)
    y = x + noise

    log.debug("simulated %d samples (burn-in %d, generator %s, seed %d)", n, burn_in, GENERATOR, seed)
    return Trajectory(x=x, y=y, n=n, seed=seed, burn_in=burn_in)


def empirical_acf(traj, max_lag, method=Util.stderrBatchMeans):
    """gamma_hat(k) = 1/n sum x_t x_{t-k}.

    With method "iid" the standard error is the rough Gaussian heuristic
    gamma_hat(0) * sqrt(2/n) for every lag; "batch-means" accounts for the
    serial correlation of the products.
    """
    _checkMethod(method)
    if max_lag < 0 or max_lag >= traj.n / 10:
        raise errors.OracleDataError(errors.MAX_LAG_TOO_LARGE(max_lag, traj.n))

    x = traj.x
    gamma = np.empty(max_lag + 1)
    stderr = np.empty(max_lag + 1)
    for k in range(0, max_lag + 1):
        products = x[k:] * x[:traj.n - k]
        gamma[k] = products.sum() / traj.n
        if method == Util.stderrBatchMeans:
            stderr[k] = Util.batchMeansStderr(products) * (traj.n - k) / traj.n
    if method == Util.stderrIid:
        stderr[:] = gamma[0] * math.sqrt(2.0 / traj.n)

    return EmpiricalAcf(gamma=gamma, stderr=stderr, max_lag=max_lag, n=traj.n, method=method)


def empirical_mmse(traj, delta, l, method=Util.stderrBatchMeans):
    """Least squares of Y_t on [X_{t-delta}, ..., X_{t-delta-l+1}] through the normal equations."""
    _checkMethod(method)
    if delta < 0 or l < 1:
        raise ValueError("need delta >= 0 and l >= 1")
    samples = traj.n - (delta + l - 1)
    if samples < 10 * (l + 1):
        raise errors.OracleDataError(errors.TOO_FEW_SAMPLES(samples, 10 * (l + 1)))

    # row s holds x[s + l - 1], ..., x[s], the feature window for time t = s + delta + l - 1
    design = sliding_window_view(traj.x, l)[:samples, ::-1]
    target = traj.y[delta + l - 1:]

    gram = design.T @ design / samples
    rhs = design.T @ target / samples
    try:
        coefficients = solve_spd(SymMatrix(gram), rhs)
    except errors.NotPositiveDefiniteError:
        raise errors.OracleDataError(errors.GRAM_SINGULAR)

    squared = (target - design @ coefficients) ** 2
    if method == Util.stderrBatchMeans:
        stderr = Util.batchMeansStderr(squared)
    else:
        stderr = Util.iidStderr(squared)
    return MmseEstimate(mse=float(squared.mean()), stderr=stderr, coefficients=coefficients, samples=samples)


def empirical_hlog(traj, delta, l, base=Util.baseNatural, method=Util.stderrBatchMeans):
    # plug-in estimate, valid because the joint law is Gaussian
    mse = empirical_mmse(traj, delta, l, method).mse
    if not mse > 0:
        raise errors.OracleDataError(errors.MSE_NOT_POSITIVE)
    return Util.gaussianEntropy(mse, base)


def compare_with_closed_form(model, traj, points=DEFAULT_VALIDATION_POINTS, method=Util.stderrBatchMeans,
                             closed_form=None, z_max=DEFAULT_Z_MAX, error_callback=None):
    if closed_form is None:
        closed_form = h2_conditional

    maxDelta = max(delta for delta, l in points)
    maxLength = max(l for delta, l in points)
    acf = autocovariance(model, required_max_lag(model.order, maxDelta, maxLength))

    ret = []
    for delta, l in points:
        expected = closed_form(acf, model.sigma2_n, delta, l)
        est = empirical_mmse(traj, delta, l, method)
        if est.stderr > 0:
            z = (expected - est.mse) / est.stderr
        else:
            z = 0.0 if expected == est.mse else math.inf
        if abs(z) > z_max:
            errors.checkErrorCallback(error_callback, errors.CheckCode.Z_SCORE_EXCEEDED, delta, l, abs(z), z_max)
        ret.append(OracleRow(delta, l, expected, est.mse, est.stderr, z))
        log.debug("oracle: delta=%d, l=%d, closed=%.6g, empirical=%.6g, z=%.3f", delta, l, expected, est.mse, z)
    return ret


def _checkMethod(method):
    if method not in Util.stderrList:
        raise ValueError("unknown standard error method \"%s\"" % (method))
