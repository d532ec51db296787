#!/usr/bin/env python3

# Copyright (c) 2026 infoaging developers
# Released under the MIT License, see __init__.py for the full text.

"""
Small dense symmetric positive-definite linear algebra.

Every determinant is handled in the log domain. A failed Cholesky
factorization is how degenerate (duplicated) index sets are detected.
"""

import dataclasses
import numpy as np
import scipy.linalg
from . import errors


SPD_TOL = 1e-12


@dataclasses.dataclass(frozen=True, eq=False)
class SymMatrix:

    entries: np.ndarray

    def __post_init__(self):
        m = np.array(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise errors.DimensionMismatchError(errors.MATRIX_NOT_SQUARE)
        if not np.array_equal(m, m.T):
            # accumulated sums (X^T X) may differ from their mirror image in the last bit
            if not np.allclose(m, m.T, rtol=1e-12, atol=0):
                raise errors.DimensionMismatchError(errors.MATRIX_NOT_SYMMETRIC)
            m = 0.5 * (m + m.T)
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def dim(self):
        return self.entries.shape[0]

    def __getitem__(self, key):
        return self.entries[key]

    def scaled(self, k):
        return SymMatrix(self.entries * k)


def cholesky(m):
    """Lower Cholesky factor, every pivot L_ii^2 must exceed SPD_TOL * max diagonal entry."""
    tol = SPD_TOL * float(np.max(np.diag(m.entries)))
    try:
        lower = scipy.linalg.cholesky(m.entries, lower=True, check_finite=True)
    except scipy.linalg.LinAlgError:
        raise errors.NotPositiveDefiniteError(m.dim, errors.MATRIX_NOT_SPD(m.dim, float("nan")))
    pivots = np.diag(lower) ** 2
    minPivot = float(np.min(pivots))
    if not minPivot > tol:
        raise errors.NotPositiveDefiniteError(m.dim, errors.MATRIX_NOT_SPD(m.dim, minPivot))
    return lower


def logdet_spd(m):
    return float(2.0 * np.sum(np.log(np.diag(cholesky(m)))))


def solve_spd(m, b):
    b = np.asarray(b, dtype=float)
    if b.ndim != 1 or b.size != m.dim:
        raise errors.DimensionMismatchError(errors.VECTOR_LENGTH_MISMATCH(m.dim, b.size))
    lower = cholesky(m)
    return scipy.linalg.cho_solve((lower, True), b)


def quad_form_inverse(m, b):
    """b^T m^-1 b, evaluated as |L^-1 b|^2 so the result is never negative."""
    b = np.asarray(b, dtype=float)
    if b.ndim != 1 or b.size != m.dim:
        raise errors.DimensionMismatchError(errors.VECTOR_LENGTH_MISMATCH(m.dim, b.size))
    w = scipy.linalg.solve_triangular(cholesky(m), b, lower=True)
    return float(np.dot(w, w))
