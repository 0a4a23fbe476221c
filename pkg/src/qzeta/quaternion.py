"""Scalar quaternion arithmetic over the basis 1, i, j, k."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParseError

#: absolute norm floor below which a quaternion is treated as non-invertible
INVERSE_FLOOR = 1e-300


@dataclass(frozen=True)
class Quaternion:
    """x0 + x1 i + x2 j + x3 k with double-precision components."""

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"non-finite quaternion component {name}={v!r}")
            object.__setattr__(self, name, v)

    @classmethod
    def from_array(cls, a) -> Quaternion:
        a0, a1, a2, a3 = (float(v) for v in a)
        return cls(a0, a1, a2, a3)

    @classmethod
    def from_complex(cls, z: complex) -> Quaternion:
        z = complex(z)
        return cls(z.real, z.imag, 0.0, 0.0)

    @classmethod
    def from_symplectic(cls, a: complex, b: complex) -> Quaternion:
        """Inverse of :func:`symplectic_parts`: a + j b."""
        a, b = complex(a), complex(b)
        return cls(a.real, a.imag, b.real, -b.imag)

    @classmethod
    def parse(cls, text: str) -> Quaternion:
        """Parse the ``x0,x1,x2,x3`` textual form."""
        parts = text.strip().split(",")
        if len(parts) != 4:
            raise ParseError(f"expected four comma-separated reals, got {text!r}")
        try:
            return cls(*(float(p) for p in parts))
        except ValueError as exc:
            raise ParseError(f"bad quaternion {text!r}: {exc}") from None

    def to_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2, self.x3])

    def format(self, digits: int = 17) -> str:
        return ",".join(f"{v:.{digits}g}" for v in self.components)

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    def is_real(self) -> bool:
        return self.x1 == 0.0 and self.x2 == 0.0 and self.x3 == 0.0

    def is_complex(self) -> bool:
        return self.x2 == 0.0 and self.x3 == 0.0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(other, self)

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.x0 / other, self.x1 / other,
                              self.x2 / other, self.x3 / other)
        return NotImplemented

    def __abs__(self):
        return norm(self)

    def __str__(self):
        return f"{self.x0:+.12g}{self.x1:+.12g}i{self.x2:+.12g}j{self.x3:+.12g}k"


def _coerce(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, float, np.floating, np.integer)):
        return Quaternion(float(x))
    if isinstance(x, (complex, np.complexfloating)):
        return Quaternion.from_complex(x)
    return NotImplemented


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a b``."""
    a0, a1, a2, a3 = a.x0, a.x1, a.x2, a.x3
    b0, b1, b2, b3 = b.x0, b.x1, b.x2, b.x3
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conj(a: Quaternion) -> Quaternion:
    return Quaternion(a.x0, -a.x1, -a.x2, -a.x3)


def norm_squared(a: Quaternion) -> float:
    return a.x0 * a.x0 + a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3


def norm(a: Quaternion) -> float:
    # hypot avoids overflow for huge components
    return math.hypot(a.x0, a.x1, a.x2, a.x3)


def inverse(a: Quaternion, floor: float = INVERSE_FLOOR) -> Quaternion:
    n = norm(a)
    if n < floor:
        raise DomainError(f"cannot invert quaternion of norm {n:g}")
    c = conj(a)
    n2 = norm_squared(a)
    if 1e-290 < n2 < math.inf:
        return Quaternion(c.x0 / n2, c.x1 / n2, c.x2 / n2, c.x3 / n2)
    # divide by n twice to stay clear of under/overflow in n*n
    return Quaternion(c.x0 / n / n, c.x1 / n / n, c.x2 / n / n, c.x3 / n / n)


def symplectic_parts(a: Quaternion) -> tuple[complex, complex]:
    """Return (simplex, perplex) complex parts with ``a = simplex + j * perplex``."""
    return complex(a.x0, a.x1), complex(a.x2, -a.x3)


def real_part(a: Quaternion) -> float:
    return a.x0


def hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product of quaternion arrays with trailing axis 4."""
    a0, a1, a2, a3 = np.moveaxis(np.asarray(a, dtype=float), -1, 0)
    b0, b1, b2, b3 = np.moveaxis(np.asarray(b, dtype=float), -1, 0)
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ], axis=-1)
