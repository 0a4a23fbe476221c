"""Reciprocal of the quaternionic second weighted zeta function.

Two independent evaluation routes are provided:

* ``reciprocal_hashimoto``: ``Sdet(I_2m - t (B_w - J0))`` with ``t``
  multiplying every entry from the left;
* ``reciprocal_bass``: ``|1 - t^2|^(2m - 2n) Sdet(I_n - W t + (D_w - I_n) t^2)``
  with ``t`` multiplying from the right.

For complex weights and a complex variable the classical determinant
formulas are available as ``reciprocal_complex`` and ``charpoly_identity``;
``ihara_reciprocal`` evaluates the unweighted Bass formula from ``A`` and
``D`` alone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DomainError, NumericalError, ShapeError
from .graph import (Graph, WeightAssignment, edge_matrix_weighted, matrices_classic,
                    matrices_weighted)
from .qmatrix import QMatrix, sdet
from .quaternion import ONE, Quaternion, norm

log = logging.getLogger(__name__)

POLE_TOL = 1e-12
DEFAULT_TOL = 1e-8
NEAR_POLE_FLAG = 1e-6


def relative_discrepancy(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def one_minus_t_squared(t: Quaternion) -> Quaternion:
    return ONE - t * t


def reciprocal_hashimoto(G: Graph, w: WeightAssignment, t: Quaternion) -> float:
    """``Sdet(I_2m - t (B_w - J0))``; entry (e, f) of the product is ``t * w~(e, f)``."""
    E = edge_matrix_weighted(G, w)
    a = 2 * G.m
    return sdet(QMatrix.identity(a) - E.lmul(t))


def bass_matrix(G: Graph, w: WeightAssignment, t: Quaternion) -> QMatrix:
    """``I_n - W t + (D_w - I_n) t^2``."""
    W, Dw, _, _, _ = matrices_weighted(G, w)
    In = QMatrix.identity(G.n)
    return In - W.rmul(t) + (Dw - In).rmul(t * t)


def reciprocal_bass(G: Graph, w: WeightAssignment, t: Quaternion) -> float:
    exponent = 2 * G.m - 2 * G.n
    factor = norm(one_minus_t_squared(t))
    if exponent < 0 and factor <= POLE_TOL:
        raise DomainError(
            f"|1 - t^2| = {factor:g} hits the pole of the tree factor (exponent {exponent})")
    return factor ** exponent * sdet(bass_matrix(G, w, t))


@dataclass
class ZetaReport:
    t: Quaternion
    methods: tuple[str, ...]
    values: dict[str, float] = field(default_factory=dict)
    discrepancies: dict[str, float] = field(default_factory=dict)
    tol: float = DEFAULT_TOL
    warnings: list[str] = field(default_factory=list)
    errors: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        if self.errors or len(self.values) != len(self.methods):
            return False
        return all(d <= self.tol for d in self.discrepancies.values())

    def as_dict(self) -> dict:
        return {
            "t": list(self.t.components),
            "methods": list(self.methods),
            "values": dict(self.values),
            "discrepancies": dict(self.discrepancies),
            "tol": self.tol,
            "passed": self.passed,
            "warnings": list(self.warnings),
            "errors": dict(self.errors),
        }


_METHODS = {"hashimoto": reciprocal_hashimoto, "bass": reciprocal_bass}


def evaluate(G: Graph, w: WeightAssignment, t: Quaternion,
             methods=("hashimoto", "bass"), tol: float = DEFAULT_TOL) -> ZetaReport:
    """Evaluate the requested reciprocals, collecting domain/numerical errors in the report."""
    report = ZetaReport(t=t, methods=tuple(methods), tol=tol)
    factor = norm(one_minus_t_squared(t))
    if factor < NEAR_POLE_FLAG:
        report.warnings.append(f"near-singular |1 - t^2| = {factor:.3g}")
    for name in methods:
        try:
            report.values[name] = _METHODS[name](G, w, t)
        except ShapeError:
            raise
        except (DomainError, NumericalError) as exc:
            report.errors[name] = f"{type(exc).__name__}: {exc}"
    names = list(report.values)
    for k, a in enumerate(names):
        for b in names[k + 1:]:
            report.discrepancies[f"{a}-{b}"] = relative_discrepancy(
                report.values[a], report.values[b])
    return report


def check_identity(G: Graph, w: WeightAssignment, t: Quaternion,
                   tol: float = DEFAULT_TOL) -> ZetaReport:
    """Evaluate both routes and pass iff their relative discrepancy is at most ``tol``."""
    return evaluate(G, w, t, ("hashimoto", "bass"), tol)


# complex and classical specialisations ------------------------------------

def _complex_weights(G: Graph, w: WeightAssignment):
    if not w.is_complex():
        raise DomainError("complex formulas need weights with zero j and k parts")
    W, Dw, Bw, _, _ = matrices_weighted(G, w)
    _, _, _, J0 = matrices_classic(G)
    return W.simplex, Dw.simplex, Bw.simplex - J0


def reciprocal_complex(G: Graph, w: WeightAssignment, t: complex) -> tuple[complex, complex]:
    """Return ``(bass, hashimoto)`` ordinary-determinant values for complex data.

    ``bass = (1 - t^2)^(m - n) det(I_n - t W + t^2 (D_w - I_n))`` and
    ``hashimoto = det(I_2m - t (B_w - J0))``.
    """
    t = complex(t)
    W, Dw, E = _complex_weights(G, w)
    n, m = G.n, G.m
    base = 1.0 - t * t
    if m < n and abs(base) <= POLE_TOL:
        raise DomainError("1 - t^2 = 0 is a pole for trees")
    In = np.eye(n)
    bass = base ** (m - n) * linalg.det(In - t * W + t * t * (Dw - In))
    hashimoto = linalg.det(np.eye(2 * m) - t * E)
    return complex(bass), complex(hashimoto)


def charpoly_identity(G: Graph, w: WeightAssignment, lam: complex) -> tuple[complex, complex]:
    """Both sides of the characteristic-polynomial form of the Bass identity.

    ``det(lam I_2m - (B_w - J0))`` and
    ``(lam^2 - 1)^(m - n) det(lam^2 I_n - lam W + (D_w - I_n))``.
    """
    lam = complex(lam)
    if lam == 0:
        raise DomainError("lambda must be nonzero")
    W, Dw, E = _complex_weights(G, w)
    n, m = G.n, G.m
    base = lam * lam - 1.0
    if m < n and abs(base) <= POLE_TOL:
        raise DomainError("lambda^2 = 1 is a pole for trees")
    In = np.eye(n)
    left = linalg.det(lam * np.eye(2 * m) - E)
    right = base ** (m - n) * linalg.det(lam * lam * In - lam * W + (Dw - In))
    return complex(left), complex(right)


def ihara_reciprocal(G: Graph, t: complex) -> complex:
    """Unweighted Bass formula ``(1 - t^2)^(r - 1) det(I - t A + t^2 (D - I))``."""
    t = complex(t)
    A, D, _, _ = matrices_classic(G)
    base = 1.0 - t * t
    if G.betti < 1 and abs(base) <= POLE_TOL:
        raise DomainError("1 - t^2 = 0 is a pole for trees")
    In = np.eye(G.n)
    return complex(base ** (G.betti - 1) * linalg.det(In - t * A + t * t * (D - In)))


def multiplication_order_probe(G: Graph, w: WeightAssignment, t: Quaternion) -> tuple[float, float]:
    """``(Sdet(I - t E), Sdet(I - E t))`` for the weighted edge matrix ``E``."""
    E = edge_matrix_weighted(G, w)
    I = QMatrix.identity(2 * G.m)
    left, right = sdet(I - E.lmul(t)), sdet(I - E.rmul(t))
    log.debug("order probe: left=%r right=%r rel=%.3g", left, right,
              relative_discrepancy(left, right))
    return left, right
