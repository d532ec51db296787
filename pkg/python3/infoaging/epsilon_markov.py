#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.

"""
Divergence from Markovity of Y_t <-> X^l_{t-mu} <-> X^l_{t-mu-nu}.

eps_{mu,nu}(l) is the square root of the Shannon CMI
I(Y_t; X^l_{t-mu-nu} | X^l_{t-mu}); eps(l) is its maximum over the grid
0 <= mu, nu <= M. Overlapping windows (nu < l) are evaluated on the
deduplicated union of offsets.

With measure "log2-ratio" the grid holds log2 of the determinant ratio
instead, which is 2 I in bits.
"""

import math
import logging
import dataclasses
import numpy as np
from .util import Util
from .ar_model import autocovariance, required_max_lag
from .gaussian_information import JointIndexSet, cmi
from . import errors


ZERO_TOL = 1e-9
ARGMAX_RTOL = 1e-12
DEFAULT_SEARCH_BOUND = 50

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class EpsilonQuery:

    l: int
    search_bound: int = DEFAULT_SEARCH_BOUND
    base: str = Util.baseNatural
    measure: str = Util.measureEpsilon
    keep_grid: bool = False

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("feature length must be at least 1")
        if self.search_bound < 0:
            raise ValueError("search bound must not be negative")
        if self.measure not in Util.measureList:
            raise ValueError("unknown measure \"%s\"" % (self.measure))
        object.__setattr__(self, "base", Util.normalizeBase(self.base))

    @property
    def max_offset(self):
        return 2 * self.search_bound + self.l - 1


@dataclasses.dataclass(frozen=True, eq=False)
class EpsilonReport:

    query: EpsilonQuery
    epsilon: float
    argmax_mu: int
    argmax_nu: int
    boundary_epsilon: float
    grid: np.ndarray = None


@dataclasses.dataclass(frozen=True)
class MarkovCheckRow:

    l: int
    epsilon: float
    passed: bool


def epsilon_mu_nu(acf, sigma2_n, mu, nu, l, base=Util.baseNatural, measure=Util.measureEpsilon):
    if mu < 0 or nu < 0:
        raise ValueError("mu and nu must not be negative")
    nats = cmi(acf, sigma2_n, Util.lossLog,
               JointIndexSet.feature(mu, l),
               JointIndexSet.feature(mu + nu, l),
               Util.baseNatural)
    return _toMeasure(nats, base, measure)


def epsilon_l(acf, sigma2_n, query):
    bound = query.search_bound
    if query.max_offset > acf.max_lag:
        raise errors.IndexRangeError(query.max_offset, acf.max_lag, errors.OFFSET_OUT_OF_RANGE(query.max_offset, acf.max_lag))

    # exhaustive; values within ARGMAX_RTOL of the best so far count as ties and
    # the lexicographically smallest (mu, nu) is kept
    grid = np.zeros((bound + 1, bound + 1))
    best, bestMu, bestNu = 0.0, 0, 0
    for mu in range(0, bound + 1):
        for nu in range(1, bound + 1):
            value = epsilon_mu_nu(acf, sigma2_n, mu, nu, query.l, query.base, query.measure)
            grid[mu, nu] = value
            if value > best * (1 + ARGMAX_RTOL):
                best, bestMu, bestNu = value, mu, nu

    boundary = max(float(np.max(grid[bound, :])), float(np.max(grid[:, bound])))
    log.debug("epsilon(%d) = %.17g at mu=%d, nu=%d (M=%d, measure=%s)", query.l, best, bestMu, bestNu, bound, query.measure)

    if query.keep_grid:
        grid.setflags(write=False)
    else:
        grid = None
    return EpsilonReport(query=query, epsilon=best, argmax_mu=bestMu, argmax_nu=bestNu,
                         boundary_epsilon=boundary, grid=grid)


def prop3b_check(model, l_max, search_bound=DEFAULT_SEARCH_BOUND, base=Util.baseNatural, error_callback=None):
    """For l = 1..l_max, epsilon(l) must vanish once l >= p."""
    acf = autocovariance(model, required_max_lag(model.order, max_length=l_max, search_bound=search_bound))
    ret = []
    for l in range(1, l_max + 1):
        report = epsilon_l(acf, model.sigma2_n, EpsilonQuery(l, search_bound, base))
        passed = (l < model.order) or (report.epsilon <= ZERO_TOL)
        if not passed:
            errors.checkErrorCallback(error_callback, errors.CheckCode.EPSILON_NOT_ZERO, l, report.epsilon, model.order)
        ret.append(MarkovCheckRow(l, report.epsilon, passed))
    return ret


def _toMeasure(nats, base, measure):
    if measure == Util.measureLog2Ratio:
        # log2 of the determinant ratio in the eps_{mu,nu} expression, i.e. 2 * I in bits
        return 2.0 * nats / math.log(2)
    return math.sqrt(Util.natsToBase(nats, base))
