import numpy as np
import pytest

from kernels import as_matrix, frob_norm_sq, hadamard, matmul, max_abs, spd_solve, transpose
from utils.errors import DomainError, NotPositiveDefiniteError, ShapeError


def test_matmul_examples():
    b = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert np.array_equal(matmul(np.eye(2), b), b)
    assert np.array_equal(matmul(b, np.ones((2, 1))), np.array([[3.0], [7.0]]))


def test_matmul_shape_error_names_both_dims():
    with pytest.raises(ShapeError) as info:
        matmul(np.ones((2, 3)), np.ones((2, 3)))
    assert "2x3 and 2x3" in str(info.value)


def test_matmul_associative(rng):
    a, b, c = rng.standard_normal((7, 5)), rng.standard_normal((5, 9)), rng.standard_normal((9, 4))
    left, right = matmul(matmul(a, b), c), matmul(a, matmul(b, c))
    assert np.linalg.norm(left - right) <= 1e-9 * np.linalg.norm(left)


def test_hadamard_examples(rng):
    a = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert np.array_equal(hadamard(a, np.ones((2, 2))), a)
    assert np.array_equal(hadamard(a, np.array([[0.0, 1.0], [1.0, 0.0]])), [[0.0, 2.0], [3.0, 0.0]])
    assert not hadamard(a, np.zeros((2, 2))).any()
    x, y = rng.standard_normal((4, 6)), rng.standard_normal((4, 6))
    assert np.array_equal(hadamard(x, y), hadamard(y, x))
    with pytest.raises(ShapeError):
        hadamard(np.ones((2, 2)), np.ones((2, 3)))


def test_frob_norm_sq(rng):
    assert frob_norm_sq(np.zeros((3, 3))) == 0.0
    assert frob_norm_sq(np.array([[3.0, 4.0]])) == 25.0
    a = rng.standard_normal((5, 8))
    assert frob_norm_sq(3.0 * a) == pytest.approx(9.0 * frob_norm_sq(a), rel=1e-12)
    assert frob_norm_sq(a) == frob_norm_sq(transpose(a))


def test_frob_norm_sq_ignores_storage_order(rng):
    for _ in range(200):
        rows, cols = rng.integers(2, 40, size=2)
        a = rng.standard_normal((rows, cols)) * 10.0 ** rng.integers(-3, 4)
        assert frob_norm_sq(a) == frob_norm_sq(transpose(a))
        assert frob_norm_sq(a) == frob_norm_sq(np.asfortranarray(a))


def test_max_abs():
    assert max_abs(np.zeros((2, 2))) == 0.0
    assert max_abs(np.array([[1.0, -5.0], [2.0, 0.0]])) == 5.0
    assert max_abs(np.array([[-0.25]])) == 0.25


def test_transpose():
    a = np.arange(6.0).reshape(2, 3)
    assert np.array_equal(transpose(transpose(a)), a)
    assert np.array_equal(transpose(np.array([[1.0, 2.0, 3.0]])), [[1.0], [2.0], [3.0]])
    sym = np.array([[2.0, 1.0], [1.0, 5.0]])
    assert np.array_equal(transpose(sym), sym)


def test_spd_solve_examples(rng):
    b = rng.standard_normal((3, 2))
    assert np.allclose(spd_solve(np.eye(3), b), b, rtol=0, atol=1e-15)
    x = spd_solve(np.array([[4.0, 0.0], [0.0, 9.0]]), np.array([[8.0], [27.0]]))
    assert np.allclose(x, [[2.0], [3.0]], rtol=0, atol=1e-14)


@pytest.mark.parametrize("size", [1, 2, 5, 17, 64])
def test_spd_solve_residual(rng, size):
    m = rng.standard_normal((size, size))
    a = m.T @ m + np.eye(size)
    b = rng.standard_normal((size, 3))
    x = spd_solve(a, b)
    assert np.linalg.norm(a @ x - b) <= 1e-10 * (1.0 + np.linalg.norm(b))


def test_spd_solve_reports_pivot():
    a = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]])
    with pytest.raises(NotPositiveDefiniteError) as info:
        spd_solve(a, np.ones((3, 1)))
    assert info.value.pivot == 2


def test_spd_solve_rejects_bad_operands():
    with pytest.raises(ShapeError):
        spd_solve(np.ones((2, 3)), np.ones((2, 1)))
    with pytest.raises(ShapeError):
        spd_solve(np.eye(2), np.ones((3, 1)))
    with pytest.raises(DomainError):
        spd_solve(np.array([[2.0, 1.0], [0.0, 2.0]]), np.ones((2, 1)))


def test_kernels_reject_non_finite():
    with pytest.raises(DomainError):
        matmul(np.array([[np.nan]]), np.ones((1, 1)))
    with pytest.raises(DomainError):
        max_abs(np.array([[np.inf, 0.0]]))
    with pytest.raises(ShapeError):
        as_matrix(np.ones(3))
