#!/usr/bin/env python3

import math
import numpy as np
import pytest

from infoaging import autocovariance, EpsilonQuery, epsilon_mu_nu, epsilon_l, prop3b_check
from infoaging import IndexRangeError
from infoaging.util import Util


LOG2_RATIO = Util.measureLog2Ratio


def test_zero_nu(ar4, ar4_acf):
    for mu in range(0, 10):
        for l in range(1, 6):
            assert epsilon_mu_nu(ar4_acf, ar4.sigma2_n, mu, 0, l) == 0.0


def test_zero_mu(ar4, ar4_acf):
    # X_t is observed, N_t is independent of the past
    assert epsilon_mu_nu(ar4_acf, ar4.sigma2_n, 0, 3, 1) == 0.0


def test_markov_for_long_features(ar4, ar4_acf):
    for l in [4, 5]:
        for mu in range(0, 20):
            for nu in range(0, 20):
                assert epsilon_mu_nu(ar4_acf, ar4.sigma2_n, mu, nu, l) <= 1e-9


def test_empty_grid(ar4, ar4_acf):
    report = epsilon_l(ar4_acf, ar4.sigma2_n, EpsilonQuery(1, search_bound=0))
    assert report.epsilon == 0.0
    assert (report.argmax_mu, report.argmax_nu) == (0, 0)


def test_ar1_is_markov(ar1):
    acf = autocovariance(ar1, 60)
    for l in [1, 2]:
        report = epsilon_l(acf, ar1.sigma2_n, EpsilonQuery(l, search_bound=20))
        assert report.epsilon <= 1e-9


@pytest.fixture(scope="module")
def ar4_log2_reports(ar4, ar4_acf):
    return {l: epsilon_l(ar4_acf, ar4.sigma2_n, EpsilonQuery(l, measure=LOG2_RATIO)) for l in range(1, 6)}


def test_reference_table(ar4_log2_reports):
    for l, expected in [(1, 1.55), (2, 1.49), (3, 1.39)]:
        assert abs(ar4_log2_reports[l].epsilon - expected) <= 0.02
    assert ar4_log2_reports[4].epsilon <= 1e-9
    assert ar4_log2_reports[5].epsilon <= 1e-9


def test_reference_argmax(ar4_log2_reports):
    assert (ar4_log2_reports[1].argmax_mu, ar4_log2_reports[1].argmax_nu) == (2, 2)
    assert (ar4_log2_reports[2].argmax_mu, ar4_log2_reports[2].argmax_nu) == (2, 2)
    # (1, 1), (1, 2) and (1, 3) tie: once X_{t-1..t-4} is known X_{t-5} adds nothing
    assert (ar4_log2_reports[3].argmax_mu, ar4_log2_reports[3].argmax_nu) == (1, 1)


def test_maximum_is_inside_grid(ar4_log2_reports):
    for l in [1, 2, 3]:
        report = ar4_log2_reports[l]
        assert report.boundary_epsilon < 0.05 * report.epsilon
        assert 0 < report.argmax_mu < 50 and 0 < report.argmax_nu < 50


def test_square_root_measure(ar4, ar4_acf, ar4_log2_reports):
    values = []
    for l in range(1, 6):
        nats = epsilon_l(ar4_acf, ar4.sigma2_n, EpsilonQuery(l))
        bits = epsilon_l(ar4_acf, ar4.sigma2_n, EpsilonQuery(l, base="2"))
        assert nats.epsilon == pytest.approx(math.sqrt(ar4_log2_reports[l].epsilon * math.log(2) / 2), rel=1e-9, abs=1e-12)
        assert bits.epsilon == pytest.approx(nats.epsilon / math.sqrt(math.log(2)), rel=1e-9, abs=1e-12)
        values.append(nats.epsilon)
    assert values[0] == pytest.approx(0.7298, abs=1e-3)
    assert all(values[i + 1] <= values[i] + 1e-9 for i in range(0, 4))
    assert all(x <= 1e-9 for x in values[3:])


def test_ties_keep_smallest_cell(ar4, ar4_acf):
    report = epsilon_l(ar4_acf, ar4.sigma2_n, EpsilonQuery(3, search_bound=5, measure=LOG2_RATIO, keep_grid=True))
    assert report.grid[1, 2] == pytest.approx(report.grid[1, 1], rel=1e-12)
    assert report.grid[1, 3] == pytest.approx(report.grid[1, 1], rel=1e-12)
    assert (report.argmax_mu, report.argmax_nu) == (1, 1)


def test_keep_grid(ar4, ar4_acf):
    report = epsilon_l(ar4_acf, ar4.sigma2_n, EpsilonQuery(2, search_bound=5, keep_grid=True))
    assert report.grid.shape == (6, 6)
    assert np.all(report.grid[:, 0] == 0)
    assert report.grid[report.argmax_mu, report.argmax_nu] == report.epsilon
    assert not report.grid.flags.writeable
    assert epsilon_l(ar4_acf, ar4.sigma2_n, EpsilonQuery(2, search_bound=5)).grid is None


def test_random_models(model_factory):
    rng = np.random.default_rng(11)
    for i in range(0, 50):
        p = int(rng.integers(1, 6))
        model = model_factory(rng, p)
        acf = autocovariance(model, 2 * 20 + p + 2)
        for l in [p, p + 1]:
            assert epsilon_l(acf, model.sigma2_n, EpsilonQuery(l, search_bound=20)).epsilon <= 1e-9


def test_prop3b_check(ar4):
    failures = []
    rows = prop3b_check(ar4, 6, search_bound=20, error_callback=lambda code, msg: failures.append(msg))
    assert [row.l for row in rows] == [1, 2, 3, 4, 5, 6]
    assert all(row.passed for row in rows)
    assert all(row.epsilon <= 1e-9 for row in rows[3:])
    assert rows[0].epsilon > 0.5
    assert failures == []


def test_query_validation(ar4):
    with pytest.raises(ValueError):
        EpsilonQuery(0)
    with pytest.raises(ValueError):
        EpsilonQuery(1, search_bound=-1)
    with pytest.raises(ValueError):
        EpsilonQuery(1, measure="kl")
    with pytest.raises(ValueError):
        EpsilonQuery(1, base="10")
    assert EpsilonQuery(3, search_bound=50).max_offset == 102
    with pytest.raises(IndexRangeError):
        epsilon_l(autocovariance(ar4, 20), ar4.sigma2_n, EpsilonQuery(1, search_bound=11))
