"""Seeded random instances: graphs, quaternionic weights, evaluation points.

All randomness derives from a ``numpy.random.SeedSequence``; trial ``k`` of a
batch seeded with ``seed`` uses ``SeedSequence(seed).spawn(...)[k]`` so that
every trial is reproducible on its own.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, WeightAssignment
from .quaternion import Quaternion


def trial_rngs(seed: int, count: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def random_quaternion(rng: np.random.Generator, radius: float = 1.0) -> Quaternion:
    """Uniform sample from the closed 4-ball of the given radius."""
    v = rng.standard_normal(4)
    v /= np.linalg.norm(v)
    r = radius * rng.random() ** 0.25
    return Quaternion.from_array(r * v)


def random_complex_quaternion(rng: np.random.Generator, radius: float = 1.0) -> Quaternion:
    """Uniform sample from the disc of the given radius inside the complex plane."""
    phi = rng.uniform(0.0, 2.0 * np.pi)
    r = radius * np.sqrt(rng.random())
    return Quaternion(r * np.cos(phi), r * np.sin(phi))


def random_weights(rng: np.random.Generator, G: Graph, radius: float = 1.0,
                   complex_only: bool = False) -> WeightAssignment:
    draw = random_complex_quaternion if complex_only else random_quaternion
    return WeightAssignment(G, [draw(rng, radius) for _ in range(2 * G.m)])


def random_connected_graph(rng: np.random.Generator, n: int,
                           extra_edges: int | None = None) -> Graph:
    """Random spanning tree on ``n`` vertices plus ``extra_edges`` random chords.

    With ``extra_edges=None`` the number of chords is drawn uniformly from
    ``0..n`` (capped by the number of free vertex pairs).
    """
    perm = rng.permutation(n)
    edges = set()
    for k in range(1, n):
        u = int(perm[k])
        v = int(perm[rng.integers(0, k)])
        edges.add((min(u, v), max(u, v)))
    free = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if extra_edges is None:
        extra_edges = int(rng.integers(0, n + 1))
    extra_edges = min(extra_edges, len(free))
    if extra_edges:
        for k in rng.choice(len(free), size=extra_edges, replace=False):
            edges.add(free[int(k)])
    return Graph(n, tuple(sorted(edges)))
