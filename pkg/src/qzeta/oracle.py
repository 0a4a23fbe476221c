"""Brute-force reference computations used as ground truth by the tests.

Nothing here calls ``linalg.det``, ``qmatrix.sdet`` or
``euler.lyndon_generate``; each routine works straight from definitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DomainError, SizeError
from .graph import Graph, WeightAssignment

NAIVE_DET_MAX = 10
CYCLE_CAPACITY = 2 * 10**6
BRUTE_WORD_CAPACITY = 10**7


def naive_det(M) -> complex:
    """Cofactor expansion along the first row, memoised on the set of free columns."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError(f"naive_det needs a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if n > NAIVE_DET_MAX:
        raise SizeError(f"naive_det is limited to {NAIVE_DET_MAX}x{NAIVE_DET_MAX}")
    rows = [[complex(x) for x in r] for r in A]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> complex:
        if row == n:
            return 1.0 + 0.0j
        total = 0.0 + 0.0j
        for pos, c in enumerate(cols):
            if rows[row][c] != 0:
                sign = -1.0 if pos % 2 else 1.0
                total += sign * rows[row][c] * minor(row + 1, cols[:pos] + cols[pos + 1:])
        return total

    return minor(0, tuple(range(n)))


# cycles -------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeCycleClass:
    """Rotation class of a prime cycle, represented by its least rotation."""

    arcs: tuple[int, ...]
    reduced: bool

    @property
    def length(self) -> int:
        return len(self.arcs)


def _rotations(seq):
    return [seq[k:] + seq[:k] for k in range(len(seq))]


def _is_power(seq) -> bool:
    n = len(seq)
    for p in range(1, n):
        if n % p == 0 and seq == seq[:p] * (n // p):
            return True
    return False


def _is_reduced(seq, inverse) -> bool:
    # C and C^2 free of backtracking: no e_{r+1} = e_r^{-1}, cyclically
    n = len(seq)
    return all(seq[(r + 1) % n] != inverse[seq[r]] for r in range(n))


def enumerate_prime_cycles(G: Graph, max_len: int, reduced_only: bool = False,
                           capacity: int = CYCLE_CAPACITY) -> list[PrimeCycleClass]:
    """All rotation classes of prime cycles of length <= ``max_len``.

    Depth-first search over arc sequences whose first arc is the smallest
    index in the sequence; a closed sequence is kept when it equals its
    least rotation and is not a power of a shorter cycle.
    """
    arcs = G.arcs.arcs
    inverse = [int(x) for x in G.arcs.inverse]
    a = len(arcs)
    out_arcs = [[f for f in range(a) if arcs[f][0] == v] for v in range(G.n)]
    found = []
    visited = 0

    def dfs(path):
        nonlocal visited
        visited += 1
        if visited > capacity:
            raise CapacityError(f"cycle enumeration exceeded {capacity} search nodes")
        first, last = path[0], path[-1]
        if arcs[last][1] == arcs[first][0]:
            seq = tuple(path)
            if seq == min(_rotations(seq)) and not _is_power(seq):
                red = _is_reduced(seq, inverse)
                if red or not reduced_only:
                    found.append(PrimeCycleClass(seq, red))
        if len(path) == max_len:
            return
        for f in out_arcs[arcs[last][1]]:
            if f < first:
                continue
            if reduced_only and f == inverse[last]:
                continue
            path.append(f)
            dfs(path)
            path.pop()

    for s in range(a):
        dfs([s])
    return sorted(found, key=lambda c: (c.length, c.arcs))


def _w_tilde_complex(G: Graph, w: WeightAssignment, e: int, f: int) -> complex:
    arcs = G.arcs.arcs
    wf = complex(w[f].x0, w[f].x1)
    if arcs[f] == (arcs[e][1], arcs[e][0]):
        return wf - 1.0
    if arcs[e][1] == arcs[f][0]:
        return wf
    return 0.0j


def cycle_weight(G: Graph, w: WeightAssignment, arcs: tuple[int, ...]) -> complex:
    """Product of ``w~`` over consecutive arcs of a cycle, closing transition included."""
    value = 1.0 + 0.0j
    n = len(arcs)
    for r in range(n):
        value *= _w_tilde_complex(G, w, arcs[r], arcs[(r + 1) % n])
    return value


def complex_cycle_product_truncated(G: Graph, w: WeightAssignment, t: complex, max_len: int) -> complex:
    """``prod over prime cycle classes of (1 - w~(C) t^|C|)``, lengths <= ``max_len``."""
    if not w.is_complex():
        raise DomainError("complex cycle product needs complex weights")
    t = complex(t)
    value = 1.0 + 0.0j
    for C in enumerate_prime_cycles(G, max_len):
        value *= 1.0 - cycle_weight(G, w, C.arcs) * t**C.length
    return value


def ihara_truncated(G: Graph, t: complex, max_len: int) -> complex:
    """``prod over prime reduced cycle classes of (1 - t^|C|)``, lengths <= ``max_len``."""
    t = complex(t)
    value = 1.0 + 0.0j
    for C in enumerate_prime_cycles(G, max_len, reduced_only=True):
        value *= 1.0 - t**C.length
    return value


# words ----------------------------------------------------------------------

def lyndon_bruteforce(N: int, max_len: int) -> list[tuple[int, ...]]:
    """Every word over ``0..N-1`` of length <= ``max_len`` that is prime and
    minimal among its rotations, in lexicographic order."""
    total = sum(N**d for d in range(1, max_len + 1))
    if total > BRUTE_WORD_CAPACITY:
        raise CapacityError(f"{total} words exceed brute-force capacity")
    out = []
    for d in range(1, max_len + 1):
        for word in itertools.product(range(N), repeat=d):
            if not _is_power(word) and word == min(_rotations(word)):
                out.append(word)
    return sorted(out)


def factorizations(word) -> list[list]:
    """All ways to split ``word`` into Lyndon words (any order), by exhaustive search."""
    word = tuple(word)
    n = len(word)

    def lyndon(w):
        return not _is_power(w) and all(w < r for r in _rotations(w)[1:])

    @lru_cache(maxsize=None)
    def rec(i):
        if i == n:
            return [[]]
        out = []
        for j in range(i + 1, n + 1):
            head = word[i:j]
            if lyndon(head):
                out.extend([[head] + rest for rest in rec(j)])
        return out

    return rec(0)


def nonincreasing_factorizations(word) -> list[list]:
    return [f for f in factorizations(word)
            if all(f[k] >= f[k + 1] for k in range(len(f) - 1))]
