"""Lyndon words and the truncated Euler product over the arc alphabet.

Letters are integers ``0..N-1``; words are tuples of letters.  For a graph
the alphabet is the canonical arc order and a Lyndon word ``i1 i2 ... id``
contributes the factor

    |1 - a(i1, i2) a(i2, i3) ... a(id, i1)|^2,   a(e, f) = t * w~(e, f),

which is 1 unless every consecutive transition (including the closing one
``id -> i1``) is admissible.  The reciprocal of the zeta function is the
product of all such factors.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError, DomainError, EmptyWordError, GuardWarning
from .graph import Graph, WeightAssignment, w_tilde_array
from .quaternion import Quaternion, hamilton, norm
from .zeta import reciprocal_bass

LYNDON_CAPACITY = 10**8
PREFIX_CAPACITY = 5 * 10**7


# Lyndon words -------------------------------------------------------------

def _mobius(n: int) -> int:
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


def lyndon_count(N: int, length: int) -> int:
    """Number of Lyndon words of exactly ``length`` letters over ``N`` letters."""
    total = sum(_mobius(length // d) * N**d for d in range(1, length + 1) if length % d == 0)
    return total // length


def lyndon_generate(N: int, max_len: int, capacity: int = LYNDON_CAPACITY) -> Iterator[tuple[int, ...]]:
    """Yield all Lyndon words of length at most ``max_len`` in lexicographic order.

    Uses Duval's successor rule: repeat the current word up to ``max_len``,
    strip trailing maximal letters, increment the last letter.
    """
    if N < 1 or max_len < 1:
        raise ValueError("alphabet size and max_len must be positive")
    projected = sum(lyndon_count(N, d) for d in range(1, max_len + 1))
    if projected > capacity:
        raise CapacityError(f"{projected} Lyndon words exceed capacity {capacity}")
    return _duval_successors(N, max_len)


def _duval_successors(N, max_len):
    w = [0]
    while w:
        yield tuple(w)
        k = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - k])
        while w and w[-1] == N - 1:
            w.pop()
        if w:
            w[-1] += 1


def lyndon_factorize(word: Sequence) -> list:
    """Factor ``word`` into its unique nonincreasing sequence of Lyndon words.

    Duval's linear-time algorithm; factors are slices of the input, so a
    string yields strings and a tuple yields tuples.
    """
    n = len(word)
    if n == 0:
        raise EmptyWordError("cannot factorize the empty word")
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and word[k] <= word[j]:
            k = i if word[k] < word[j] else k + 1
            j += 1
        while i <= k:
            factors.append(word[i:i + j - k])
            i += j - k
    return factors


def is_lyndon(word: Sequence) -> bool:
    return len(word) > 0 and len(lyndon_factorize(word)) == 1


# Euler product ------------------------------------------------------------

@dataclass
class EulerTruncation:
    """Truncated Euler product for the reciprocal zeta function."""

    t: Quaternion
    max_len: int
    #: number of admissible closed Lyndon words of each length 1..max_len
    cycle_counts: list[int]
    #: sum of log factors of each length 1..max_len
    log_factors: list[float]
    guard_value: float
    guard_bound: float
    form: str = "interleaved"
    words: list[tuple[tuple[int, ...], float]] | None = field(default=None, repr=False)

    @property
    def guard_ok(self) -> bool:
        return self.guard_value < self.guard_bound

    @property
    def partial_products(self) -> list[float]:
        """Product over Lyndon words of length <= L, for L = 1..max_len."""
        return [math.exp(s) for s in np.cumsum(self.log_factors)] if self.log_factors else []

    @property
    def deltas(self) -> list[float]:
        """Relative change contributed by each length, ``|prod_L / prod_(L-1) - 1|``."""
        return [abs(math.expm1(s)) for s in self.log_factors]

    @property
    def value(self) -> float:
        """Truncated reciprocal zeta value (product over all lengths <= max_len)."""
        return math.exp(math.fsum(self.log_factors))

    @property
    def girth(self) -> int | None:
        """Length of the shortest admissible closed Lyndon word found, if any."""
        for d, c in enumerate(self.cycle_counts, start=1):
            if c:
                return d
        return None


def guard_quantities(G: Graph, w: WeightAssignment, t: Quaternion) -> tuple[float, float]:
    """``(|t| * max |w~(e, f)|, 1 / (8 m^2))``; the product converges when the first is below the second."""
    if G.m == 0:
        return 0.0, math.inf
    wt = w_tilde_array(G, w)
    return norm(t) * float(np.sqrt((wt * wt).sum(axis=2)).max()), 1.0 / (8.0 * G.m**2)


def _closing_distance(adm: np.ndarray, s: int) -> np.ndarray:
    """Fewest extra letters (all >= s) after letter x before a transition back to s."""
    a = adm.shape[0]
    big = 10**9
    dist = np.full(a, big, dtype=np.int64)
    frontier = [x for x in range(s, a) if adm[x, s]]
    for x in frontier:
        dist[x] = 0
    level = 0
    while frontier:
        level += 1
        nxt = []
        for y in frontier:
            for x in np.nonzero(adm[s:, y])[0] + s:
                if dist[x] == big:
                    dist[x] = level
                    nxt.append(int(x))
        frontier = nxt
    return dist


def euler_reciprocal_truncated(G: Graph, w: WeightAssignment, t: Quaternion, max_len: int,
                               form: str = "interleaved", keep_words: bool = False,
                               capacity: int = PREFIX_CAPACITY) -> EulerTruncation:
    """Product of Lyndon factors over words of length <= ``max_len``.

    ``form="interleaved"`` multiplies ``t * w~`` transition by transition;
    ``form="real"`` (real ``t`` only) forms the product of ``w~`` around
    the word first and then scales by ``t**d``.  Only words whose every
    transition is admissible (``t(e) = o(f)`` and ``w~(e, f) != 0``) are
    generated; all others contribute the factor 1.
    """
    if max_len < 1:
        raise ValueError("max_len must be positive")
    if form not in ("interleaved", "real"):
        raise ValueError(f"unknown form {form!r}")
    if form == "real" and not t.is_real():
        raise DomainError("the real-t form needs a real t")

    guard_value, guard_bound = guard_quantities(G, w, t)
    if guard_value >= guard_bound:
        warnings.warn(
            f"convergence not guaranteed (|t|·max|w̃| ≥ 1/(8m²)): "
            f"{guard_value:.3g} >= {guard_bound:.3g}", GuardWarning, stacklevel=2)

    a = 2 * G.m
    counts = [0] * max_len
    logs = [[] for _ in range(max_len)]
    kept = [] if keep_words else None
    if a == 0:
        return EulerTruncation(t, max_len, counts, [0.0] * max_len, guard_value,
                               guard_bound, form, kept)

    wt = w_tilde_array(G, w)
    adm = np.any(wt != 0.0, axis=2)
    if form == "interleaved":
        step = hamilton(t.to_array(), wt)
    else:
        step = wt
    succ_lists = [np.nonzero(adm[x])[0] for x in range(a)]
    width = max((len(s) for s in succ_lists), default=0)
    succ = np.full((a, max(width, 1)), -1, dtype=np.int64)
    for x, s in enumerate(succ_lists):
        succ[x, :len(s)] = s

    total = 0
    for s in range(a):
        dist = _closing_distance(adm, s)
        if dist[s] + 1 > max_len:
            continue
        words = np.array([[s]], dtype=np.int16)
        period = np.array([1], dtype=np.int64)
        prod = np.array([[1.0, 0.0, 0.0, 0.0]])
        for d in range(1, max_len + 1):
            last = words[:, -1].astype(np.int64)
            # close: Lyndon iff the prenecklace period equals the length
            closing = (period == d) & adm[last, s]
            if np.any(closing):
                c_last = last[closing]
                closed = hamilton(prod[closing], step[c_last, s])
                if form == "real":
                    closed = closed * t.x0**d
                # |1 - q|^2 - 1 = -2 Re q + |q|^2
                delta = -2.0 * closed[:, 0] + np.sum(closed * closed, axis=1)
                with np.errstate(divide="ignore"):
                    lf = np.log1p(delta)
                counts[d - 1] += int(closing.sum())
                logs[d - 1].append(lf)
                if kept is not None:
                    for word, f in zip(words[closing], np.exp(lf)):
                        kept.append((tuple(int(x) for x in word), float(f)))
            if d == max_len or len(words) == 0:
                break
            # extend every prefix by each admissible successor >= s
            cand = succ[last]
            rows, cols = np.nonzero((cand >= s))
            nxt = cand[rows, cols]
            ok = dist[nxt] + d + 1 <= max_len
            rows, nxt = rows[ok], nxt[ok]
            ref = words[rows, d - period[rows]]
            keep = nxt >= ref
            rows, nxt, ref = rows[keep], nxt[keep], ref[keep]
            if len(rows) > capacity:
                raise CapacityError(
                    f"{len(rows)} live prefixes at length {d + 1} exceed capacity {capacity}")
            total += len(rows)
            new_period = np.where(nxt == ref, period[rows], d + 1)
            new_prod = hamilton(prod[rows], step[last[rows], nxt])
            words = np.concatenate([words[rows], nxt[:, None].astype(np.int16)], axis=1)
            period, prod = new_period, new_prod

    log_factors = [math.fsum(np.concatenate(chunks)) if chunks else 0.0 for chunks in logs]
    return EulerTruncation(t, max_len, counts, log_factors, guard_value, guard_bound,
                           form, kept)


@dataclass
class ConvergenceRow:
    length: int
    cycles: int
    partial_product: float
    delta: float
    gap: float | None


def euler_convergence_report(G: Graph, w: WeightAssignment, t: Quaternion, max_len: int,
                             compare: bool = True) -> tuple[list[ConvergenceRow], float | None]:
    """Per-length partial products and deltas.

    With ``compare`` each row also carries the absolute gap to the Bass-type
    value, which is returned alongside the rows.
    """
    trunc = euler_reciprocal_truncated(G, w, t, max_len)
    bass = reciprocal_bass(G, w, t) if compare else None
    rows = []
    for d, (c, p, delta) in enumerate(zip(trunc.cycle_counts, trunc.partial_products,
                                          trunc.deltas), start=1):
        gap = abs(p - bass) if compare else None
        rows.append(ConvergenceRow(d, c, p, delta, gap))
    return rows, bass
