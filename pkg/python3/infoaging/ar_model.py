#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.

"""
Noisy AR(p) source and its exact stationary second-order statistics.

    X_t = a_1 X_{t-1} + ... + a_p X_{t-p} + W_t,    W_t ~ N(0, sigma2_w)
    Y_t = X_t + N_t,                                 N_t ~ N(0, sigma2_n)
"""

import json
import math
import logging
import dataclasses
import numpy as np
import scipy.linalg
import pydantic
from . import errors


STATIONARITY_TOL = 1e-9
PIVOT_TOL = 1e-14
YULE_WALKER_TOL = 1e-10

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ArModel:

    coeffs: tuple
    sigma2_w: float
    sigma2_n: float = 0.0

    def __post_init__(self):
        coeffs = tuple(float(x) for x in self.coeffs)
        if len(coeffs) == 0:
            raise errors.InvalidModelError(errors.NO_COEFFICIENTS)
        if not all(math.isfinite(x) for x in coeffs):
            raise errors.InvalidModelError(errors.NOT_FINITE("coeffs"))
        for name in ["sigma2_w", "sigma2_n"]:
            if not math.isfinite(float(getattr(self, name))):
                raise errors.InvalidModelError(errors.NOT_FINITE(name))
        if not float(self.sigma2_w) > 0:
            raise errors.InvalidModelError(errors.SIGMA2_W_NOT_POSITIVE)
        if float(self.sigma2_n) < 0:
            raise errors.InvalidModelError(errors.SIGMA2_N_NEGATIVE)

        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "sigma2_w", float(self.sigma2_w))
        object.__setattr__(self, "sigma2_n", float(self.sigma2_n))

    @property
    def order(self):
        return len(self.coeffs)


# reference source, also shipped as models/ar4.json
REFERENCE_AR4 = ArModel(coeffs=(0.1, 0.0, 0.0, 0.8), sigma2_w=0.01, sigma2_n=0.001)


@dataclasses.dataclass(frozen=True)
class ValidationReport:

    stationary: bool
    root_magnitudes: tuple

    @property
    def spectral_radius(self):
        return self.root_magnitudes[0]


@dataclasses.dataclass(frozen=True, eq=False)
class AutocovTable:
    """Autocovariances gamma(0..max_lag) of X; gamma(-k) = gamma(k) is implicit."""

    gamma: np.ndarray
    max_lag: int

    def __post_init__(self):
        gamma = np.array(self.gamma, dtype=float)
        assert gamma.ndim == 1 and gamma.size == self.max_lag + 1
        gamma.setflags(write=False)
        object.__setattr__(self, "gamma", gamma)

    def __getitem__(self, lag):
        lag = abs(int(lag))
        if lag > self.max_lag:
            raise errors.IndexRangeError(lag, self.max_lag, errors.OFFSET_OUT_OF_RANGE(lag, self.max_lag))
        return float(self.gamma[lag])

    def __len__(self):
        return self.max_lag + 1

    @property
    def variance(self):
        return float(self.gamma[0])

    def toeplitz(self, dim):
        if dim > self.max_lag + 1:
            raise errors.IndexRangeError(dim - 1, self.max_lag, errors.OFFSET_OUT_OF_RANGE(dim - 1, self.max_lag))
        return scipy.linalg.toeplitz(self.gamma[:dim])


def validate_model(model):
    if model.order < 1:
        raise errors.InvalidModelError(errors.NO_COEFFICIENTS)

    # eigenvalues of the companion matrix are the roots of z^p - a_1 z^(p-1) - ... - a_p
    companion = scipy.linalg.companion(np.r_[1.0, -np.asarray(model.coeffs)])
    magnitudes = sorted((float(x) for x in np.abs(np.linalg.eigvals(companion))), reverse=True)
    return ValidationReport(stationary=(magnitudes[0] < 1 - STATIONARITY_TOL),
                            root_magnitudes=tuple(magnitudes))


def spectral_radius(model):
    return validate_model(model).spectral_radius


def required_max_lag(p, max_aoi=0, max_length=1, search_bound=0):
    return max(max_aoi + max_length + 1, 2 * search_bound + max_length + 1, 2 * p)


def autocovariance(model, max_lag):
    if max_lag < 0:
        raise ValueError("max_lag must not be negative")

    report = validate_model(model)
    if not report.stationary:
        raise errors.NonStationaryModelError(errors.NOT_STATIONARY(report.spectral_radius))

    p = model.order
    a = np.asarray(model.coeffs)

    # Yule-Walker system in gamma(0..p):
    #   gamma(0) - sum_i a_i gamma(i)      = sigma2_w
    #   gamma(k) - sum_i a_i gamma(|k-i|)  = 0,  k = 1..p
    mat = np.zeros((p + 1, p + 1))
    rhs = np.zeros(p + 1)
    rhs[0] = model.sigma2_w
    for k in range(0, p + 1):
        mat[k, k] += 1.0
        for i in range(1, p + 1):
            mat[k, abs(k - i)] -= a[i - 1]

    lu, piv = scipy.linalg.lu_factor(mat, check_finite=True)
    minPivot = float(np.min(np.abs(np.diag(lu))))
    if minPivot < PIVOT_TOL:
        raise errors.DegenerateModelError(errors.YULE_WALKER_SINGULAR(minPivot))
    head = scipy.linalg.lu_solve((lu, piv), rhs)

    gamma = np.empty(max(max_lag, p) + 1)
    gamma[:p + 1] = head
    for k in range(p + 1, gamma.size):
        gamma[k] = np.dot(a, gamma[k - p:k][::-1])

    log.debug("autocovariance: p=%d, max_lag=%d, gamma(0)=%.17g", p, max_lag, gamma[0])
    return AutocovTable(gamma=gamma[:max_lag + 1], max_lag=max_lag)


def yule_walker_residuals(model, acf):
    """|gamma(k) - sum_i a_i gamma(|k-i|)| for k = 1..max_lag."""
    a = np.asarray(model.coeffs)
    ret = []
    for k in range(1, acf.max_lag + 1):
        predicted = sum(a[i - 1] * acf[k - i] for i in range(1, model.order + 1))
        ret.append(abs(acf[k] - predicted))
    return np.array(ret)


def check_yule_walker(model, acf, tol=YULE_WALKER_TOL, error_callback=None):
    ret = True
    for k, residual in enumerate(yule_walker_residuals(model, acf), start=1):
        if residual > tol * acf.variance:
            errors.checkErrorCallback(error_callback, errors.CheckCode.YULE_WALKER_RESIDUAL, k, residual)
            ret = False
    return ret


def target_second_moment(model, acf):
    # E[Y_t X_{t-k}] = gamma(k) because N_t is independent of X; only the diagonal picks up sigma2_n
    return acf.variance + model.sigma2_n


class _ModelFileSchema(pydantic.BaseModel):

    model_config = pydantic.ConfigDict(extra="forbid", allow_inf_nan=False, strict=True)

    coeffs: list[float]
    sigma2_w: float
    sigma2_n: float


def model_from_dict(data):
    try:
        obj = _ModelFileSchema.model_validate(data)
    except pydantic.ValidationError as e:
        detail = "; ".join("%s: %s" % (".".join(str(x) for x in err["loc"]) or "<root>", err["msg"]) for err in e.errors())
        raise errors.InvalidModelError(detail)
    return ArModel(coeffs=tuple(obj.coeffs), sigma2_w=obj.sigma2_w, sigma2_n=obj.sigma2_n)


def model_to_dict(model):
    return {
        "coeffs": list(model.coeffs),
        "sigma2_w": model.sigma2_w,
        "sigma2_n": model.sigma2_n,
    }


def load_model_file(path):
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise errors.InvalidModelError(errors.MODEL_FILE_UNREADABLE(path, str(e).replace("\n", " ")))

    try:
        return model_from_dict(data)
    except errors.InvalidModelError as e:
        raise errors.InvalidModelError(errors.MODEL_FILE_INVALID(path, e.message))
