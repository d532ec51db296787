#!/usr/bin/env python3

import math
import numpy as np
import pytest

from infoaging import SymMatrix, logdet_spd, solve_spd
from infoaging import NotPositiveDefiniteError, DimensionMismatchError
from infoaging.matrix_kernel import cholesky, quad_form_inverse


def _randomSpd(rng, n):
    b = rng.standard_normal((n, n))
    return SymMatrix(b.T @ b + np.eye(n))


def _cofactorDet(m):
    if len(m) == 1:
        return m[0][0]
    ret = 0.0
    for j in range(0, len(m)):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        ret += (-1) ** j * m[0][j] * _cofactorDet(minor)
    return ret


def test_logdet_simple():
    assert logdet_spd(SymMatrix(np.eye(6))) == 0.0
    assert logdet_spd(SymMatrix([[4.0]])) == pytest.approx(math.log(4))
    assert logdet_spd(SymMatrix([[2.0, 1.0], [1.0, 2.0]])) == pytest.approx(math.log(3))


def test_logdet_against_cofactor_expansion():
    rng = np.random.default_rng(1)
    for n in [1, 2, 3, 5]:
        m = _randomSpd(rng, n)
        assert logdet_spd(m) == pytest.approx(math.log(_cofactorDet(m.entries.tolist())), rel=1e-10)


@pytest.mark.parametrize("k", [0.5, 2.0, 10.0])
def test_logdet_scaling(k):
    m = _randomSpd(np.random.default_rng(2), 4)
    assert logdet_spd(m.scaled(k)) == pytest.approx(logdet_spd(m) + 4 * math.log(k), rel=1e-12, abs=1e-12)


def test_solve_simple():
    b = np.array([1.0, -2.0, 3.0])
    assert np.array_equal(solve_spd(SymMatrix(np.eye(3)), b), b)
    assert solve_spd(SymMatrix(np.diag([2.0, 4.0, 8.0])), b) == pytest.approx([0.5, -0.5, 0.375])


def test_solve_random():
    rng = np.random.default_rng(3)
    for i in range(0, 100):
        n = int(rng.integers(1, 13))
        m = _randomSpd(rng, n)
        b = rng.standard_normal(n)
        x = solve_spd(m, b)
        assert np.max(np.abs(m.entries @ x - b)) <= 1e-9 * np.max(np.abs(b))
        assert quad_form_inverse(m, b) == pytest.approx(float(np.dot(b, x)), rel=1e-10)


def test_not_positive_definite():
    with pytest.raises(NotPositiveDefiniteError):
        cholesky(SymMatrix([[1.0, 2.0], [2.0, 1.0]]))
    with pytest.raises(NotPositiveDefiniteError):
        logdet_spd(SymMatrix([[1.0, 1.0], [1.0, 1.0]]))
    with pytest.raises(NotPositiveDefiniteError):
        solve_spd(SymMatrix([[0.0]]), [1.0])


def test_shape_errors():
    with pytest.raises(DimensionMismatchError):
        SymMatrix([[1.0, 2.0]])
    with pytest.raises(DimensionMismatchError):
        SymMatrix([[1.0, 0.5], [0.0, 1.0]])
    with pytest.raises(DimensionMismatchError):
        solve_spd(SymMatrix(np.eye(2)), [1.0, 2.0, 3.0])


def test_tiny_asymmetry_is_removed():
    m = SymMatrix([[1.0, 0.5], [0.5 * (1 + 1e-15), 1.0]])
    assert m[0, 1] == m[1, 0]
    assert not m.entries.flags.writeable
