#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.

"""
L-entropies, L-conditional entropies and L-(conditional) mutual information
of the target Y_t given windows of the X history.

The pair (Y_t, X history) is jointly Gaussian with zero mean, so:

    quadratic loss:  H_2(Y | X_S)   = E[Y^2] - c R_S^-1 c^T    (MMSE residual)
    log loss:        H_log(Y | X_S) = 1/2 log(2 pi e H_2(Y | X_S))

Offsets always mean "X_{t-j} is included". Y_t, when present, is the first
coordinate of every augmented matrix.
"""

import math
import logging
import dataclasses
import numpy as np
import scipy.linalg
from .util import Util
from .matrix_kernel import SymMatrix, cholesky, logdet_spd, solve_spd, quad_form_inverse
from . import errors


CMI_CLAMP_TOL = 1e-10

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class JointIndexSet:

    x_offsets: tuple = ()
    include_y: bool = False

    def __post_init__(self):
        offsets = set()
        for j in self.x_offsets:
            j = int(j)
            if j < 0:
                raise errors.IndexRangeError(j, None, errors.NEGATIVE_OFFSET(j))
            offsets.add(j)
        object.__setattr__(self, "x_offsets", tuple(sorted(offsets)))

    @classmethod
    def feature(cls, delta, l, include_y=False):
        """The feature vector X^l_{t-delta} = [X_{t-delta}, ..., X_{t-delta-l+1}]."""
        _checkDeltaAndLength(delta, l)
        return cls(tuple(range(delta, delta + l)), include_y)

    @property
    def dim(self):
        return len(self.x_offsets) + (1 if self.include_y else 0)

    @property
    def max_offset(self):
        return self.x_offsets[-1] if self.x_offsets else 0

    def union(self, other):
        return JointIndexSet(self.x_offsets + other.x_offsets, self.include_y or other.include_y)

    def difference(self, other):
        return JointIndexSet(tuple(sorted(set(self.x_offsets) - set(other.x_offsets))), False)

    def with_y(self):
        return JointIndexSet(self.x_offsets, True)

    def without_y(self):
        return JointIndexSet(self.x_offsets, False)


@dataclasses.dataclass(frozen=True)
class EntropyCurve:

    loss: str
    base: str
    l: int
    deltas: tuple
    values: tuple

    def __post_init__(self):
        assert len(self.deltas) == len(self.values)
        assert all(math.isfinite(x) for x in self.values)

    def points(self):
        return list(zip(self.deltas, self.values))

    def is_non_decreasing(self, tol=0.0):
        return len(self.drops(tol)) == 0

    def drops(self, tol=0.0):
        """Every delta where H(delta + 1) < H(delta) - tol."""
        ret = []
        for i in range(0, len(self.values) - 1):
            if self.values[i + 1] < self.values[i] - tol:
                ret.append(self.deltas[i])
        return ret


def corr_matrix(acf, sigma2_n, idx):
    return SymMatrix(_covArray(acf, sigma2_n, idx))


def h2_marginal(acf, sigma2_n):
    return acf.variance + sigma2_n


def h2_conditional(acf, sigma2_n, delta, l):
    _checkRange(acf, JointIndexSet.feature(delta, l))
    if delta == 0:
        # X_t itself is observed, only the observation noise is left
        return float(sigma2_n)

    c = acf.gamma[delta:delta + l]
    rxx = SymMatrix(acf.toeplitz(l))
    return h2_marginal(acf, sigma2_n) - float(np.dot(c, solve_spd(rxx, c)))


def h2_l1(acf, sigma2_n, delta):
    _checkDeltaAndLength(delta, 1)
    return h2_marginal(acf, sigma2_n) - acf[delta] ** 2 / acf[0]


def hlog_marginal(acf, sigma2_n, base=Util.baseNatural):
    return Util.gaussianEntropy(h2_marginal(acf, sigma2_n), base)


def hlog_conditional(acf, sigma2_n, delta, l, base=Util.baseNatural):
    _checkDeltaAndLength(delta, l)
    augmented = corr_matrix(acf, sigma2_n, JointIndexSet.feature(delta, l, include_y=True))
    rxx = SymMatrix(acf.toeplitz(l))
    nats = 0.5 * (logdet_spd(augmented) - logdet_spd(rxx)) + Util.halfLog2PiE
    return Util.natsToBase(nats, base)


def hlog_l1(acf, sigma2_n, delta, base=Util.baseNatural):
    return _logLossEntropy(h2_l1(acf, sigma2_n, delta), base)


def conditional_entropy(acf, sigma2_n, loss, idx, base=Util.baseNatural):
    """H_L(Y_t | X_idx) for an arbitrary offset set; the empty set gives the L-entropy of Y_t."""
    _checkLoss(loss)
    variance = _conditionalVariance(acf, sigma2_n, idx.without_y())
    if loss == Util.lossQuadratic:
        return variance
    return _logLossEntropy(variance, base)


def mutual_information(acf, sigma2_n, loss, idx, base=Util.baseNatural):
    return cmi(acf, sigma2_n, loss, JointIndexSet(), idx, base)


def cmi(acf, sigma2_n, loss, cond_idx, extra_idx, base=Util.baseNatural):
    """I_L(Y_t; X_extra | X_cond) = H_L(Y_t | X_cond) - H_L(Y_t | X_cond, X_extra)."""
    _checkLoss(loss)
    cond = cond_idx.without_y()
    extra = extra_idx.without_y().difference(cond)
    _checkRange(acf, cond.union(extra))

    if extra.dim == 0:
        return 0.0
    if 0 in cond.x_offsets:
        # Y_t - X_t = N_t is independent of every X
        return 0.0

    varY, explained = _partialExplained(acf, sigma2_n, cond, extra)
    if loss == Util.lossQuadratic:
        return _clampCmi(explained)

    remaining = varY - explained
    if not remaining > 0:
        raise errors.NumericalConsistencyError(remaining, errors.NON_POSITIVE_VARIANCE(remaining))
    return _clampCmi(Util.natsToBase(-0.5 * math.log1p(-explained / varY), base))


def logdet_cmi(acf, sigma2_n, cond_idx, extra_idx, base=Util.baseNatural):
    """Log-loss CMI from four log-determinants, evaluated on the deduplicated union."""
    cond = cond_idx.without_y()
    union = cond.union(extra_idx.without_y())

    def _logdetOrZero(idx):
        return logdet_spd(corr_matrix(acf, sigma2_n, idx)) if idx.dim > 0 else 0.0

    nats = 0.5 * (_logdetOrZero(union) + logdet_spd(corr_matrix(acf, sigma2_n, cond.with_y()))
                  - _logdetOrZero(cond) - logdet_spd(corr_matrix(acf, sigma2_n, union.with_y())))
    return _clampCmi(Util.natsToBase(nats, base))


def entropy_curve(acf, sigma2_n, loss, l, max_aoi, base=Util.baseNatural):
    """H_L(Y_t | X^l_{t-delta}) for delta = 0..max_aoi."""
    _checkLoss(loss)
    values = []
    for delta in range(0, max_aoi + 1):
        if loss == Util.lossQuadratic:
            values.append(h2_conditional(acf, sigma2_n, delta, l))
        else:
            values.append(hlog_conditional(acf, sigma2_n, delta, l, base))
    log.debug("entropy curve: loss=%s, l=%d, max_aoi=%d", loss, l, max_aoi)
    return EntropyCurve(loss, _curveBase(loss, base), l, tuple(range(0, max_aoi + 1)), tuple(values))


def g1_curve(acf, sigma2_n, loss, l, max_aoi, base=Util.baseNatural):
    """g1(delta) = H_L(Y_t | X^l_t) + sum_{k<delta} I_L(Y_t; X^l_{t-k} | X^l_{t-k-1}), non-decreasing by construction."""
    _checkLoss(loss)
    _checkRange(acf, JointIndexSet.feature(max_aoi, l + 1))

    if loss == Util.lossQuadratic:
        current = h2_conditional(acf, sigma2_n, 0, l)
    else:
        current = hlog_conditional(acf, sigma2_n, 0, l, base)

    values = [current]
    for k in range(0, max_aoi):
        current += cmi(acf, sigma2_n, loss, JointIndexSet.feature(k + 1, l), JointIndexSet.feature(k, l), base)
        values.append(current)
    log.debug("g1 curve: loss=%s, l=%d, max_aoi=%d", loss, l, max_aoi)
    return EntropyCurve(loss, _curveBase(loss, base), l, tuple(range(0, max_aoi + 1)), tuple(values))


def _covArray(acf, sigma2_n, idx):
    _checkRange(acf, idx)
    offs = np.asarray(idx.x_offsets, dtype=int)
    xx = acf.gamma[np.abs(offs[:, None] - offs[None, :])]
    if not idx.include_y:
        return xx

    ret = np.empty((offs.size + 1, offs.size + 1))
    ret[0, 0] = acf.variance + sigma2_n
    ret[0, 1:] = acf.gamma[offs]
    ret[1:, 0] = acf.gamma[offs]
    ret[1:, 1:] = xx
    return ret


def _conditionalVariance(acf, sigma2_n, idx):
    _checkRange(acf, idx)
    if idx.dim == 0:
        return h2_marginal(acf, sigma2_n)
    if 0 in idx.x_offsets:
        return float(sigma2_n)
    c = acf.gamma[np.asarray(idx.x_offsets)]
    return h2_marginal(acf, sigma2_n) - quad_form_inverse(corr_matrix(acf, sigma2_n, idx), c)


def _partialExplained(acf, sigma2_n, cond, extra):
    # covariance of [Y_t, X_extra] given X_cond, then the part of var(Y_t | X_cond)
    # explained by X_extra. When Markovity holds the cross term is zero up to
    # backward error of the regression, not up to a difference of log-dets.
    cov = _covArray(acf, sigma2_n, extra.with_y())
    if cond.dim > 0:
        x = np.asarray(cond.x_offsets)
        z = np.asarray(extra.x_offsets)
        cross = np.empty((x.size, z.size + 1))
        cross[:, 0] = acf.gamma[x]
        cross[:, 1:] = acf.gamma[np.abs(x[:, None] - z[None, :])]
        lower = cholesky(corr_matrix(acf, sigma2_n, cond))
        a = scipy.linalg.solve_triangular(lower, cross, lower=True)
        cov = cov - a.T @ a
        cov = 0.5 * (cov + cov.T)

    varY = float(cov[0, 0])
    explained = quad_form_inverse(SymMatrix(cov[1:, 1:]), cov[0, 1:])
    return varY, explained


def _clampCmi(value):
    if value < 0:
        if value < -CMI_CLAMP_TOL:
            raise errors.NumericalConsistencyError(value, errors.NEGATIVE_CMI(value))
        return 0.0
    return float(value)


def _logLossEntropy(variance, base):
    if not variance > 0:
        raise errors.NumericalConsistencyError(variance, errors.NON_POSITIVE_VARIANCE(variance))
    return Util.gaussianEntropy(variance, base)


def _curveBase(loss, base):
    return Util.normalizeBase(base) if loss == Util.lossLog else None


def _checkLoss(loss):
    if loss not in Util.lossList:
        raise ValueError("unknown loss function \"%s\"" % (loss))


def _checkDeltaAndLength(delta, l):
    if delta < 0:
        raise ValueError("AoI must not be negative")
    if l < 1:
        raise ValueError("feature length must be at least 1")


def _checkRange(acf, idx):
    if idx.max_offset > acf.max_lag:
        raise errors.IndexRangeError(idx.max_offset, acf.max_lag, errors.OFFSET_OUT_OF_RANGE(idx.max_offset, acf.max_lag))
