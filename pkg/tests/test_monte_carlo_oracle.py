#!/usr/bin/env python3

import math
import numpy as np
import pytest

from infoaging import ArModel, AutocovTable, autocovariance, h2_conditional, simulate, empirical_acf, empirical_mmse, empirical_hlog, compare_with_closed_form
from infoaging import NonStationaryModelError, OracleDataError, CheckCode
from infoaging.ar_model import yule_walker_residuals
from infoaging.util import Util


IID = Util.stderrIid


def test_simulation_is_deterministic(ar1):
    first = simulate(ar1, 1000, seed=3)
    second = simulate(ar1, 1000, seed=3)
    assert np.array_equal(first.x, second.x) and np.array_equal(first.y, second.y)
    assert not np.array_equal(first.x, simulate(ar1, 1000, seed=4).x)
    assert (first.generator, first.seed, first.burn_in, first.n) == ("PCG64", 3, 10000, 1000)
    assert not first.x.flags.writeable


def test_simulation_rejects_bad_input(ar1):
    with pytest.raises(NonStationaryModelError):
        simulate(ArModel(coeffs=(1.0,), sigma2_w=1.0), 100)
    with pytest.raises(ValueError):
        simulate(ar1, 0)


def test_white_noise_variance():
    traj = simulate(ArModel(coeffs=(0.0,), sigma2_w=1.0), 1000000, seed=0)
    assert abs(np.var(traj.x) - 1.0) <= 0.01
    assert np.array_equal(traj.x, traj.y)


def test_white_noise_acf():
    traj = simulate(ArModel(coeffs=(0.0,), sigma2_w=1.0), 100000, seed=8)
    acf = empirical_acf(traj, 3)
    assert np.all(np.abs(acf.gamma[1:]) <= 5 * acf.stderr[1:])
    assert abs(acf.gamma[0] - 1.0) <= 5 * acf.stderr[0]


def test_ar1_lag_one_correlation(ar1):
    traj = simulate(ar1, 1000000, seed=1)
    acf = empirical_acf(traj, 2)
    assert abs(acf.gamma[1] / acf.gamma[0] - 0.5) <= 0.01
    assert acf.method == Util.stderrBatchMeans


def test_iid_acf_stderr(ar1):
    traj = simulate(ar1, 10000, seed=2)
    acf = empirical_acf(traj, 5, IID)
    assert np.all(acf.stderr == acf.gamma[0] * math.sqrt(2.0 / 10000))
    with pytest.raises(OracleDataError):
        empirical_acf(traj, 1000)


@pytest.mark.slow
def test_acf_against_closed_form(ar4):
    traj = simulate(ar4, 1000000, seed=0)
    est = empirical_acf(traj, 10)
    exact = autocovariance(ar4, 10)
    z = np.abs(est.gamma - exact.gamma) / est.stderr
    assert np.max(z) <= 5

    # the fitted statistics satisfy the Yule-Walker recursion up to sampling noise
    residuals = yule_walker_residuals(ar4, AutocovTable(gamma=est.gamma, max_lag=10))
    assert np.all(residuals <= 5 * est.stderr[1:])


def test_mmse_zero_aoi(ar1):
    traj = simulate(ar1, 100000, seed=5)
    est = empirical_mmse(traj, 0, 1)
    assert abs(est.mse - 0.1) <= 5 * est.stderr
    assert est.coefficients == pytest.approx([1.0], abs=0.01)
    assert est.samples == 100000


def test_mmse_stderr_scaling(ar1):
    small = empirical_mmse(simulate(ar1, 1000, seed=6), 1, 1, IID)
    large = empirical_mmse(simulate(ar1, 1000000, seed=6), 1, 1, IID)
    ratio = small.stderr / large.stderr
    assert math.sqrt(1000) / 2 <= ratio <= 2 * math.sqrt(1000)


def test_mmse_too_few_samples(ar1):
    with pytest.raises(OracleDataError):
        empirical_mmse(simulate(ar1, 30, seed=0), 10, 2)


def test_empirical_hlog(ar1):
    traj = simulate(ar1, 100000, seed=7)
    est = empirical_mmse(traj, 0, 1)
    value = empirical_hlog(traj, 0, 1)
    assert value == pytest.approx(0.5 * math.log(2 * math.pi * math.e * est.mse), rel=1e-12)
    assert abs(value - 0.5 * math.log(2 * math.pi * math.e * 0.1)) <= 5 * est.stderr / (2 * est.mse)
    assert empirical_hlog(traj, 0, 1, "two") == pytest.approx(value / math.log(2), rel=1e-12)


@pytest.mark.slow
def test_mmse_against_closed_form(ar4):
    traj = simulate(ar4, 1000000, seed=0)
    est = empirical_mmse(traj, 5, 2)
    exact = h2_conditional(autocovariance(ar4, 10), ar4.sigma2_n, 5, 2)
    assert abs(est.mse - exact) <= 3 * est.stderr


@pytest.mark.slow
def test_compare_with_closed_form(ar4):
    failures = []
    rows = compare_with_closed_form(ar4, simulate(ar4, 1000000, seed=0),
                                    error_callback=lambda code, msg: failures.append(code))
    assert [(row.delta, row.l) for row in rows] == [(d, l) for d in (0, 1, 4, 8, 12) for l in (1, 2, 4)]
    assert failures == []
    assert sum(1 for row in rows if abs(row.z) <= 3) >= 14


def test_tampered_closed_form_is_caught(ar4):
    def _doubled(acf, sigma2_n, delta, l):
        return 2 * h2_conditional(acf, sigma2_n, delta, l)

    failures = []
    rows = compare_with_closed_form(ar4, simulate(ar4, 50000, seed=0), [(1, 1), (4, 2)], closed_form=_doubled,
                                    error_callback=lambda code, msg: failures.append(code))
    assert len(rows) == 2
    assert failures == [CheckCode.Z_SCORE_EXCEEDED, CheckCode.Z_SCORE_EXCEEDED]


def test_iid_mmse_stderr_is_plain_formula(ar1):
    traj = simulate(ar1, 20000, seed=10)
    est = empirical_mmse(traj, 1, 1, IID)
    residuals = traj.y[1:] - traj.x[:-1] * est.coefficients[0]
    assert est.stderr == pytest.approx(np.std(residuals ** 2, ddof=1) / math.sqrt(residuals.size), rel=1e-9)
