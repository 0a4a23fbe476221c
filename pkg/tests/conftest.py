import functools

import numpy as np
import pytest

import qzeta
from qzeta import errors, qmatrix, selftest, zeta
from qzeta.graph import WeightAssignment, complete_graph, cycle_graph, path_graph

# Record every Study determinant evaluated during the run.  Patched at import
# time so test modules that do ``from qzeta.qmatrix import sdet`` see it too.
SDET_LOG = {"calls": 0, "negative": 0, "raised": 0}
_raw_sdet = qmatrix.sdet


@functools.wraps(_raw_sdet)
def _recording_sdet(M):
    SDET_LOG["calls"] += 1
    try:
        value = _raw_sdet(M)
    except errors.NumericalError:
        SDET_LOG["raised"] += 1
        raise
    if not value >= 0.0:
        SDET_LOG["negative"] += 1
    return value


for _mod in (qmatrix, zeta, selftest, qzeta):
    _mod.sdet = _recording_sdet


def pytest_collection_modifyitems(config, items):
    last = [it for it in items if it.get_closest_marker("run_last")]
    items[:] = [it for it in items if not it.get_closest_marker("run_last")] + last


def pytest_configure(config):
    config.addinivalue_line("markers", "run_last: run after every other test")


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture
def triangle():
    return cycle_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def unit():
    return WeightAssignment.unit
