"""Quaternionic matrices, the complex embedding psi, and the Study determinant."""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DomainError, NumericalError, ShapeError, StructureError
from .quaternion import Quaternion, hamilton

#: relative bound on the imaginary residue of det(psi(M))
IMAG_RESIDUE_TOL = 1e-8
#: negative values above -NEG_CLAMP_TOL * scale are rounded to zero
NEG_CLAMP_TOL = 1e-10


class QMatrix:
    """Dense quaternionic matrix stored as a ``(rows, cols, 4)`` float array.

    Instances are treated as immutable; the backing array is marked
    read-only.
    """

    __slots__ = ("_a",)

    def __init__(self, data):
        a = np.array(data, dtype=float)
        if a.ndim != 3 or a.shape[2] != 4:
            raise ShapeError(f"expected array of shape (rows, cols, 4), got {a.shape}")
        if not np.all(np.isfinite(a)):
            raise DomainError("quaternionic matrix has non-finite entries")
        a.flags.writeable = False
        self._a = a

    # construction ---------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(np.zeros((rows, cols, 4)))

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        a = np.zeros((n, n, 4))
        a[np.arange(n), np.arange(n), 0] = 1.0
        return cls(a)

    @classmethod
    def from_entries(cls, rows) -> QMatrix:
        """Build from a nested list of Quaternion / real / complex entries."""
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        a = np.zeros((len(rows), ncols, 4))
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise ShapeError("ragged rows")
            for c, x in enumerate(row):
                if isinstance(x, Quaternion):
                    a[r, c] = x.components
                else:
                    z = complex(x)
                    a[r, c, 0], a[r, c, 1] = z.real, z.imag
        return cls(a)

    @classmethod
    def from_symplectic(cls, S, P=None) -> QMatrix:
        """Build ``S + j P`` from complex simplex and perplex parts."""
        S = np.asarray(S, dtype=complex)
        P = np.zeros_like(S) if P is None else np.asarray(P, dtype=complex)
        if S.shape != P.shape or S.ndim != 2:
            raise ShapeError("simplex and perplex parts must be equal-shape 2-D arrays")
        return cls(np.stack([S.real, S.imag, P.real, -P.imag], axis=-1))

    @classmethod
    def diag(cls, entries) -> QMatrix:
        entries = list(entries)
        n = len(entries)
        M = [[0.0] * n for _ in range(n)]
        for r, x in enumerate(entries):
            M[r][r] = x
        return cls.from_entries(M)

    @classmethod
    def scalar(cls, alpha: Quaternion, n: int) -> QMatrix:
        return cls.diag([alpha] * n)

    # access ---------------------------------------------------------------

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape[0], self._a.shape[1]

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    def __getitem__(self, idx) -> Quaternion:
        r, c = idx
        return Quaternion.from_array(self._a[r, c])

    def entries(self) -> list[list[Quaternion]]:
        return [[self[r, c] for c in range(self.cols)] for r in range(self.rows)]

    @property
    def simplex(self) -> np.ndarray:
        return self._a[..., 0] + 1j * self._a[..., 1]

    @property
    def perplex(self) -> np.ndarray:
        return self._a[..., 2] - 1j * self._a[..., 3]

    def is_complex(self) -> bool:
        return not np.any(self._a[..., 2:])

    # algebra --------------------------------------------------------------

    def __add__(self, other: QMatrix) -> QMatrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return QMatrix(self._a + other._a)

    def __sub__(self, other: QMatrix) -> QMatrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return QMatrix(self._a - other._a)

    def __neg__(self) -> QMatrix:
        return QMatrix(-self._a)

    def __matmul__(self, other: QMatrix) -> QMatrix:
        return qmatmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._a, other._a)

    __hash__ = None

    def lmul(self, alpha: Quaternion) -> QMatrix:
        """Left scalar multiple ``alpha M``."""
        return QMatrix(hamilton(alpha.to_array(), self._a))

    def rmul(self, alpha: Quaternion) -> QMatrix:
        """Right scalar multiple ``M alpha``."""
        return QMatrix(hamilton(self._a, alpha.to_array()))

    @property
    def T(self) -> QMatrix:
        """Plain transpose (entries are not conjugated)."""
        return QMatrix(self._a.transpose(1, 0, 2))

    def psi(self) -> np.ndarray:
        return psi(self)

    def __repr__(self):
        return f"QMatrix(shape={self.shape})"


def qmatmul(M: QMatrix, N: QMatrix) -> QMatrix:
    """Quaternionic matrix product; entry (r, s) is sum_k M[r,k] N[k,s] in that order."""
    if M.cols != N.rows:
        raise ShapeError(f"cannot multiply {M.shape} by {N.shape}")
    prod = hamilton(M.array[:, :, None, :], N.array[None, :, :, :])
    return QMatrix(prod.sum(axis=1))


def psi(M: QMatrix) -> np.ndarray:
    """Complex embedding ``[[S, -conj(P)], [P, conj(S)]]`` of ``M = S + j P``."""
    S, P = M.simplex, M.perplex
    return np.block([[S, -np.conj(P)], [P, np.conj(S)]])


def _require_square(M: QMatrix) -> int:
    if M.rows != M.cols:
        raise ShapeError(f"Study determinant needs a square matrix, got {M.shape}")
    return M.rows


def sdet(M: QMatrix) -> float:
    """Study determinant ``det(psi(M))``, a nonnegative real."""
    _require_square(M)
    X = psi(M)
    d = linalg.det(X)
    if abs(d.imag) > IMAG_RESIDUE_TOL * (1.0 + abs(d)):
        raise NumericalError(f"det(psi(M)) has imaginary residue {d.imag:g} (value {d})")
    value = d.real
    if value < 0.0:
        # Hadamard bound sets the scale of attainable round-off
        scale = float(np.prod(np.linalg.norm(X, axis=1))) if X.size else 1.0
        if value < -NEG_CLAMP_TOL * max(scale, 1.0):
            raise NumericalError(f"Study determinant came out negative: {value:g}")
    # also folds -0.0 into +0.0
    return value if value > 0.0 else 0.0


def is_upper_triangular(M: QMatrix) -> bool:
    return not np.any(np.tril(np.any(M.array != 0.0, axis=2), -1))


def is_lower_triangular(M: QMatrix) -> bool:
    return not np.any(np.triu(np.any(M.array != 0.0, axis=2), 1))


def sdet_triangular(M: QMatrix) -> float:
    """Product of squared norms of the diagonal of a triangular matrix."""
    n = _require_square(M)
    if not (is_upper_triangular(M) or is_lower_triangular(M)):
        raise StructureError("matrix is neither upper- nor lower-triangular")
    d = M.array[np.arange(n), np.arange(n)]
    return float(np.prod(np.sum(d * d, axis=1)))
