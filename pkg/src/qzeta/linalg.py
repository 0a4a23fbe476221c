"""Dense complex matrix kernel.

Complex matrices are plain 2-D ``numpy`` arrays of dtype ``complex128``.
Every function returns a freshly allocated array and never mutates its
arguments.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError, DomainError


def as_cmatrix(M) -> np.ndarray:
    """Validate and convert ``M`` to a 2-D finite complex array (copying)."""
    A = np.array(M, dtype=complex)
    if A.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got ndim={A.ndim}")
    if not np.all(np.isfinite(A)):
        raise DomainError("matrix has non-finite entries")
    return A


def _require_square(A: np.ndarray) -> int:
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {A.shape}")
    return A.shape[0]


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def lu(M) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """LU factorisation with partial (row) pivoting.

    Returns ``(perm, L, U, swaps)`` such that ``M[perm] == L @ U``, where
    ``L`` is unit lower-triangular and ``swaps`` is the number of row
    transpositions performed.
    """
    A = as_cmatrix(M)
    n = _require_square(A)
    perm = np.arange(n)
    swaps = 0
    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if p != k:
            A[[k, p]] = A[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            swaps += 1
        pivot = A[k, k]
        if pivot == 0:
            # column already eliminated; leave multipliers at zero
            continue
        A[k + 1:, k] /= pivot
        A[k + 1:, k + 1:] -= np.outer(A[k + 1:, k], A[k, k + 1:])
    L = np.tril(A, -1) + np.eye(n, dtype=complex)
    U = np.triu(A)
    return perm, L, U, swaps


def det(M) -> complex:
    """Determinant via LU with partial pivoting; the 0x0 determinant is 1."""
    A = as_cmatrix(M)
    n = _require_square(A)
    if n == 0:
        return 1.0 + 0.0j
    _, _, U, swaps = lu(A)
    d = complex(np.prod(np.diag(U)))
    return -d if swaps % 2 else d


def block2x2(A, B, C, D) -> np.ndarray:
    """Assemble the partitioned matrix ``[[A, B], [C, D]]``."""
    A, B, C, D = (as_cmatrix(X) for X in (A, B, C, D))
    if A.shape[0] != B.shape[0] or C.shape[0] != D.shape[0]:
        raise ShapeError("block rows have mismatched heights")
    if A.shape[1] != C.shape[1] or B.shape[1] != D.shape[1]:
        raise ShapeError("block columns have mismatched widths")
    return np.block([[A, B], [C, D]])


def matmul(M, N) -> np.ndarray:
    M, N = as_cmatrix(M), as_cmatrix(N)
    if M.shape[1] != N.shape[0]:
        raise ShapeError(f"cannot multiply {M.shape} by {N.shape}")
    return M @ N


def add(M, N) -> np.ndarray:
    M, N = as_cmatrix(M), as_cmatrix(N)
    if M.shape != N.shape:
        raise ShapeError(f"cannot add {M.shape} and {N.shape}")
    return M + N


def scale(c: complex, M) -> np.ndarray:
    return complex(c) * as_cmatrix(M)


def conjugate(M) -> np.ndarray:
    """Entrywise complex conjugate (no transpose)."""
    return np.conj(as_cmatrix(M))


def transpose(M) -> np.ndarray:
    return as_cmatrix(M).T.copy()
