import numpy as np
import pytest

from helpers import relative
from qzeta import linalg, oracle
from qzeta.errors import ShapeError


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def test_det_examples(rng):
    assert linalg.det(np.eye(5)) == 1
    assert linalg.det([[0, 1], [1, 0]]) == -1
    assert linalg.det(np.zeros((0, 0))) == 1
    M = crandn(rng, 6, 6)
    assert relative(linalg.det(M), oracle.naive_det(M)) <= 1e-10


def test_det_singular():
    assert linalg.det([[1, 2], [2, 4]]) == 0
    assert linalg.det(np.zeros((3, 3))) == 0


def test_det_non_square():
    with pytest.raises(ShapeError):
        linalg.det(np.ones((2, 3)))


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_lu_reconstruction(rng, n):
    M = crandn(rng, n, n)
    perm, L, U, _ = linalg.lu(M)
    assert np.allclose(np.tril(L), L) and np.allclose(np.triu(U), U)
    assert np.all(np.diag(L) == 1)
    assert np.abs(M[perm] - L @ U).max() <= 1e-12 * np.abs(M).max() * n


def test_det_multiplicative(rng):
    for _ in range(50):
        n = int(rng.integers(1, 9))
        M, N = crandn(rng, n, n), crandn(rng, n, n)
        assert relative(linalg.det(M @ N), linalg.det(M) * linalg.det(N)) <= 1e-9


def test_block_scalar_case():
    a, b, c, d = 1 + 2j, 3, -1j, 4
    X = linalg.block2x2([[a]], [[b]], [[c]], [[d]])
    assert np.array_equal(X, np.array([[a, b], [c, d]]))


def test_block_identity_blocks(rng):
    I = np.eye(3)
    B, D = crandn(rng, 3, 3), crandn(rng, 3, 3)
    X = linalg.block2x2(I, B, I, D)
    assert relative(linalg.det(X), linalg.det(D - B)) <= 1e-10


def test_block_commuting_determinant(rng):
    # A and C polynomials in one matrix, hence commuting
    for _ in range(50):
        n = int(rng.integers(1, 6))
        R = crandn(rng, n, n)
        A = 0.5 * np.eye(n) + R + 0.3j * R @ R
        C = -1.5 * np.eye(n) + 2 * R @ R
        B, D = crandn(rng, n, n), crandn(rng, n, n)
        assert np.allclose(A @ C, C @ A)
        X = linalg.block2x2(A, B, C, D)
        assert relative(linalg.det(X), linalg.det(A @ D - C @ B)) <= 1e-9


def test_block_scalar_multiples(rng):
    alpha, beta = 1.3 - 0.2j, 0.7j
    n = 4
    A, C = alpha * np.eye(n), beta * np.eye(n)
    B, D = crandn(rng, n, n), crandn(rng, n, n)
    X = linalg.block2x2(A, B, C, D)
    assert relative(linalg.det(X), linalg.det(A @ D - C @ B)) <= 1e-10


def test_block_mismatch():
    with pytest.raises(ShapeError):
        linalg.block2x2(np.eye(2), np.eye(3), np.eye(2), np.eye(2))
    with pytest.raises(ShapeError):
        linalg.block2x2(np.eye(2), np.eye(2), np.ones((2, 3)), np.eye(2))


def test_standard_suite(rng):
    M = crandn(rng, 3, 4)
    N = crandn(rng, 4, 2)
    assert np.array_equal(linalg.matmul(np.eye(3), M), M)
    assert np.array_equal(linalg.conjugate(linalg.conjugate(M)), M)
    lhs = linalg.transpose(linalg.matmul(M, N))
    rhs = linalg.matmul(linalg.transpose(N), linalg.transpose(M))
    assert np.abs(lhs - rhs).max() <= 1e-12
    assert np.array_equal(linalg.add(M, M), linalg.scale(2, M))
    with pytest.raises(ShapeError):
        linalg.matmul(M, M)
    with pytest.raises(ShapeError):
        linalg.add(M, N)


def test_inputs_not_mutated(rng):
    M = crandn(rng, 4, 4)
    before = M.copy()
    linalg.det(M)
    linalg.lu(M)
    assert np.array_equal(M, before)
