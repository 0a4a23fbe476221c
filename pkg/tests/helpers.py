import numpy as np

from qzeta.qmatrix import QMatrix


def rel(a, b):
    """Relative discrepancy |a - b| / max(1, |a|, |b|)."""
    return abs(a - b) / max(1.0, abs(a), abs(b))


def relative(a, b):
    """Plain relative error |a - b| / max(|a|, |b|) (0 when both vanish)."""
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def random_qmatrix(rng, rows, cols, bound=1.0):
    return QMatrix(rng.uniform(-bound, bound, (rows, cols, 4)))
