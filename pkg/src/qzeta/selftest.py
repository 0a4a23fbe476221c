"""Quick oracle cross-checks run by ``qzeta selftest``."""

from __future__ import annotations

import numpy as np

from . import euler, linalg, oracle
from .graph import WeightAssignment, complete_graph, cycle_graph, path_graph
from .qmatrix import QMatrix, qmatmul, sdet
from .sampling import random_connected_graph, random_quaternion, random_weights, trial_rngs
from .quaternion import Quaternion
from .zeta import check_identity, ihara_reciprocal, reciprocal_hashimoto


def _rel(a, b):
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _det_vs_cofactor(rng):
    worst = 0.0
    for _ in range(20):
        n = int(rng.integers(1, 7))
        M = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        worst = max(worst, _rel(linalg.det(M), oracle.naive_det(M)))
    return worst <= 1e-10, f"worst relative gap {worst:.2e}"


def _lyndon_vs_brute(rng):
    for N in range(1, 4):
        for L in range(1, 6):
            if list(euler.lyndon_generate(N, L)) != oracle.lyndon_bruteforce(N, L):
                return False, f"mismatch at N={N}, max_len={L}"
    return True, "N<=3, len<=5"


def _cycle_census(rng):
    got = (len(oracle.enumerate_prime_cycles(cycle_graph(3), 3, True)),
           len(oracle.enumerate_prime_cycles(complete_graph(4), 3, True)),
           len(oracle.enumerate_prime_cycles(path_graph(4), 8, True)))
    return got == (2, 8, 0), f"C3/K4/P4 reduced classes {got}"


def _sdet_axioms(rng):
    worst = 0.0
    for _ in range(20):
        n = int(rng.integers(1, 5))
        M = QMatrix(rng.uniform(-1, 1, (n, n, 4)))
        N = QMatrix(rng.uniform(-1, 1, (n, n, 4)))
        alpha = random_quaternion(rng, 2.0)
        sm = sdet(M)
        if sm < 0:
            return False, "negative Study determinant"
        worst = max(worst, _rel(sdet(qmatmul(M, N)), sm * sdet(N)))
        worst = max(worst, _rel(sdet(M.lmul(alpha)), abs(alpha) ** (2 * n) * sm))
    return worst <= 1e-9, f"worst relative gap {worst:.2e}"


def _bass_identity(rng):
    worst = 0.0
    for sub in trial_rngs(int(rng.integers(2**32)), 20):
        G = random_connected_graph(sub, int(sub.integers(3, 7)))
        w = random_weights(sub, G)
        worst = max(worst, check_identity(G, w, random_quaternion(sub, 0.05))
                    .discrepancies["hashimoto-bass"])
    return worst <= 1e-8, f"worst relative gap {worst:.2e}"


def _unit_weights_reduce(rng):
    G = complete_graph(4)
    t = 0.1
    got = reciprocal_hashimoto(G, WeightAssignment.unit(G), Quaternion(t))
    want = abs(ihara_reciprocal(G, t)) ** 2
    return _rel(got, want) <= 1e-9, f"K4 t=0.1: {got:.12g} vs {want:.12g}"


CHECKS = [
    ("lu-det vs cofactor", _det_vs_cofactor),
    ("lyndon generator vs brute force", _lyndon_vs_brute),
    ("prime reduced cycle census", _cycle_census),
    ("study determinant axioms", _sdet_axioms),
    ("hashimoto = bass", _bass_identity),
    ("unit weights reduce to ihara", _unit_weights_reduce),
]


def run_selftest(seed: int = 0) -> list[tuple[str, bool, str]]:
    rng = np.random.default_rng(seed)
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn(rng)
        except Exception as exc:  # report, never abort the matrix
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(ok), detail))
    return results
