#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.

from enum import Enum, auto


class CheckCode(Enum):
    Z_SCORE_EXCEEDED = auto()
    EPSILON_NOT_ZERO = auto()
    YULE_WALKER_RESIDUAL = auto()


def checkErrorCallback(error_callback, check_code, *kargs):
    if error_callback is None:
        return

    errDict = {
        CheckCode.Z_SCORE_EXCEEDED: (4, "closed form and oracle disagree at delta={0}, l={1}: |z|={2:.3g} > {3:g}"),
        CheckCode.EPSILON_NOT_ZERO: (3, "epsilon({0}) = {1:.3e} is not zero although l >= p = {2}"),
        CheckCode.YULE_WALKER_RESIDUAL: (2, "Yule-Walker residual at lag {0} is {1:.3e}"),
    }

    argNum, fstr = errDict[check_code]
    assert len(kargs) == argNum
    error_callback(check_code, fstr.format(*kargs))


class InfoAgingError(Exception):

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class InvalidModelError(InfoAgingError):
    pass


class NonStationaryModelError(InvalidModelError):
    pass


class DegenerateModelError(InfoAgingError):
    pass


class NotPositiveDefiniteError(InfoAgingError):

    def __init__(self, dim, message):
        super().__init__(message)
        self.dim = dim


class DimensionMismatchError(InfoAgingError):
    pass


class IndexRangeError(InfoAgingError):

    def __init__(self, offset, max_lag, message):
        super().__init__(message)
        self.offset = offset
        self.max_lag = max_lag


class NumericalConsistencyError(InfoAgingError):

    def __init__(self, value, message):
        super().__init__(message)
        self.value = value


class OracleDataError(InfoAgingError):
    pass


class ConfigError(InfoAgingError):

    def __init__(self, option, message):
        super().__init__(message)
        self.option = option


# common messages for InvalidModelError
NO_COEFFICIENTS = "AR model needs at least one coefficient"
SIGMA2_W_NOT_POSITIVE = "innovation variance sigma2_w must be positive"
SIGMA2_N_NEGATIVE = "observation noise variance sigma2_n must not be negative"
NOT_FINITE = lambda name: f"{name!s} contains a non-finite number"
MODEL_FILE_INVALID = lambda path, detail: f"model file \"{path!s}\" is invalid: {detail!s}"
MODEL_FILE_UNREADABLE = lambda path, detail: f"model file \"{path!s}\" can not be read: {detail!s}"

# common messages for NonStationaryModelError
NOT_STATIONARY = lambda radius: f"AR model is not stationary, largest root magnitude is {radius:.12g}"

# common messages for DegenerateModelError
YULE_WALKER_SINGULAR = lambda pivot: f"Yule-Walker system is singular (pivot {pivot:.3e})"

# common messages for NotPositiveDefiniteError
MATRIX_NOT_SPD = lambda dim, pivot: f"{dim}x{dim} matrix is not positive definite (pivot {pivot:.3e})"
MATRIX_NOT_SYMMETRIC = "matrix is not symmetric"
MATRIX_NOT_SQUARE = "matrix is not square"

# common messages for DimensionMismatchError
VECTOR_LENGTH_MISMATCH = lambda dim, length: f"right hand side has length {length}, matrix has dimension {dim}"

# common messages for IndexRangeError
OFFSET_OUT_OF_RANGE = lambda offset, max_lag: f"offset {offset} exceeds autocovariance table (max lag {max_lag})"
NEGATIVE_OFFSET = lambda offset: f"offset {offset} is negative"

# common messages for NumericalConsistencyError
NEGATIVE_CMI = lambda value: f"conditional mutual information is negative ({value:.3e})"
NON_POSITIVE_VARIANCE = lambda value: f"conditional variance {value:.3e} is not positive, log loss entropy is unbounded"

# common messages for OracleDataError
MAX_LAG_TOO_LARGE = lambda max_lag, n: f"max lag {max_lag} is too large for {n} samples (needs max lag < n/10)"
TOO_FEW_SAMPLES = lambda n, need: f"{n} samples available, {need} needed"
GRAM_SINGULAR = "empirical Gram matrix is singular"
MSE_NOT_POSITIVE = "empirical mean squared error is not positive"
