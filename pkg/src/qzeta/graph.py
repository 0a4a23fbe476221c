"""Simple connected graphs, their arc tables, and the structural matrices.

Arcs follow a canonical order: edges are sorted as ``(min, max)`` pairs and
edge ``k`` contributes arc ``2k = (u, v)`` with ``u < v`` and arc
``2k + 1 = (v, u)``.  Each arc therefore sits next to its inverse and the
inversion matrix ``J0`` is block diagonal with 2x2 swap blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import MissingWeightError, ParseError, ValidationError
from .qmatrix import QMatrix
from .quaternion import ONE, Quaternion


@dataclass(frozen=True)
class ArcTable:
    arcs: tuple[tuple[int, int], ...]
    inverse: np.ndarray
    origin: np.ndarray
    terminal: np.ndarray
    index: Mapping[tuple[int, int], int] = field(repr=False)

    def __len__(self):
        return len(self.arcs)

    @classmethod
    def build(cls, edges) -> ArcTable:
        arcs = []
        for u, v in edges:
            arcs.append((u, v))
            arcs.append((v, u))
        idx = np.arange(len(arcs))
        inverse = idx ^ 1
        origin = np.array([a[0] for a in arcs], dtype=int)
        terminal = np.array([a[1] for a in arcs], dtype=int)
        for a in (inverse, origin, terminal):
            a.flags.writeable = False
        return cls(tuple(arcs), inverse, origin, terminal,
                   {a: k for k, a in enumerate(arcs)})


@dataclass(frozen=True)
class Graph:
    """Finite simple connected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    arcs: ArcTable = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise ValidationError("graph needs at least one vertex")
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValidationError(f"duplicate edge {key}")
            seen.add(key)
        edges = tuple(sorted(seen))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        if not _connected(n, edges):
            raise ValidationError("graph is disconnected")
        object.__setattr__(self, "arcs", ArcTable.build(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def betti(self) -> int:
        return self.m - self.n + 1

    def is_tree(self) -> bool:
        return self.betti == 0

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def arc_index(self, u: int, v: int) -> int:
        try:
            return self.arcs.index[(u, v)]
        except KeyError:
            raise ValidationError(f"({u}, {v}) is not an arc of the graph") from None


def _connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


# named families -------------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((k, (k + 1) % n) for k in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((k, k + 1) for k in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


# weights ----------------------------------------------------------------------

class WeightAssignment:
    """Quaternion weight ``w(e)`` for every arc of a graph."""

    __slots__ = ("graph", "_w", "_array")

    def __init__(self, graph: Graph, weights: Iterable[Quaternion]):
        weights = tuple(weights)
        if len(weights) != len(graph.arcs):
            raise MissingWeightError(
                f"expected {len(graph.arcs)} arc weights, got {len(weights)}")
        for k, x in enumerate(weights):
            if not isinstance(x, Quaternion):
                raise TypeError(f"weight of arc {k} is not a Quaternion")
        self.graph = graph
        self._w = weights
        arr = np.array([x.components for x in weights], dtype=float).reshape(-1, 4)
        arr.flags.writeable = False
        self._array = arr

    @classmethod
    def unit(cls, graph: Graph) -> WeightAssignment:
        return cls(graph, [ONE] * len(graph.arcs))

    @classmethod
    def from_mapping(cls, graph: Graph, mapping: Mapping[tuple[int, int], Quaternion],
                     default: Quaternion | None = None) -> WeightAssignment:
        """Weights keyed by ``(u, v)``; arcs absent from ``mapping`` take ``default``.

        With ``default=None`` every arc must be present.
        """
        for key in mapping:
            if key not in graph.arcs.index:
                raise ValidationError(f"weight given for non-arc {key}")
        out = []
        for arc in graph.arcs.arcs:
            if arc in mapping:
                out.append(mapping[arc])
            elif default is None:
                raise MissingWeightError(f"no weight for arc {arc}")
            else:
                out.append(default)
        return cls(graph, out)

    @classmethod
    def from_array(cls, graph: Graph, arr) -> WeightAssignment:
        arr = np.asarray(arr, dtype=float)
        return cls(graph, [Quaternion.from_array(row) for row in arr.reshape(-1, 4)])

    def __getitem__(self, arc: int) -> Quaternion:
        return self._w[arc]

    def __len__(self):
        return len(self._w)

    def __iter__(self):
        return iter(self._w)

    @property
    def array(self) -> np.ndarray:
        """``(2m, 4)`` array of arc weights in canonical arc order."""
        return self._array

    def is_complex(self) -> bool:
        return not np.any(self._array[:, 2:])

    def complex_values(self) -> np.ndarray:
        return self._array[:, 0] + 1j * self._array[:, 1]


# file formats -----------------------------------------------------------------

def _lines(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str | bytes) -> Graph:
    """Parse the ``.graph`` format: one ``n <count>`` line then ``e <u> <v>`` lines."""
    n = None
    edges = []
    for lineno, toks in _lines(text):
        tag = toks[0]
        if tag == "n":
            if n is not None:
                raise ParseError("repeated 'n' line", lineno)
            if len(toks) != 2:
                raise ParseError("'n' line takes exactly one count", lineno)
            n = _int(toks[1], lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("'e' line before 'n' line", lineno)
            if len(toks) != 3:
                raise ParseError("'e' line takes exactly two vertices", lineno)
            edges.append((_int(toks[1], lineno), _int(toks[2], lineno)))
        else:
            raise ParseError(f"unknown directive {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'n' line")
    return Graph(n, tuple(edges))


def format_graph(G: Graph) -> str:
    return "".join([f"n {G.n}\n"] + [f"e {u} {v}\n" for u, v in G.edges])


def parse_weights(text: str | bytes, G: Graph) -> WeightAssignment:
    """Parse a ``.qw`` file: ``w <u> <v> <x0> <x1> <x2> <x3>`` per line.

    Unlisted arcs default to weight 1.
    """
    mapping = {}
    for lineno, toks in _lines(text):
        if toks[0] != "w":
            raise ParseError(f"unknown directive {toks[0]!r}", lineno)
        if len(toks) != 7:
            raise ParseError("'w' line takes two vertices and four reals", lineno)
        u, v = _int(toks[1], lineno), _int(toks[2], lineno)
        try:
            x = Quaternion(*(float(t) for t in toks[3:]))
        except ValueError as exc:
            raise ParseError(f"bad weight: {exc}", lineno) from None
        if (u, v) not in G.arcs.index:
            raise ValidationError(f"line {lineno}: ({u}, {v}) is not an arc")
        if (u, v) in mapping:
            raise ValidationError(f"line {lineno}: arc ({u}, {v}) weighted twice")
        mapping[(u, v)] = x
    return WeightAssignment.from_mapping(G, mapping, default=ONE)


def format_weights(w: WeightAssignment) -> str:
    lines = []
    for (u, v), x in zip(w.graph.arcs.arcs, w):
        lines.append(f"w {u} {v} " + " ".join(repr(c) for c in x.components) + "\n")
    return "".join(lines)


# structural matrices ------------------------------------------------------

def matrices_classic(G: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Integer matrices ``(A, D, B, J0)``.

    ``B[e, f] = 1`` iff ``t(e) = o(f)``; ``J0[e, f] = 1`` iff ``f`` is the
    inverse of ``e``.
    """
    at = G.arcs
    A = np.zeros((G.n, G.n), dtype=int)
    for u, v in at.arcs:
        A[u, v] = 1
    D = np.diag(A.sum(axis=1))
    B = (at.terminal[:, None] == at.origin[None, :]).astype(int)
    J0 = np.zeros((len(at), len(at)), dtype=int)
    J0[np.arange(len(at)), at.inverse] = 1
    return A, D, B, J0


def matrices_weighted(G: Graph, w: WeightAssignment):
    """Quaternionic matrices ``(W, D_w, B_w, K, L)``.

    ``B_w[e, f] = w(f)`` when ``t(e) = o(f)``; ``K[e, v] = w(e)`` when
    ``o(e) = v``; ``L[e, v] = 1`` when ``t(e) = v``.  ``L @ K.T == B_w``.
    """
    _check_weights(G, w)
    at = G.arcs
    n, a = G.n, len(at)
    wa = w.array
    idx = np.arange(a)

    W = np.zeros((n, n, 4))
    W[at.origin, at.terminal] = wa

    Dw = np.zeros((n, n, 4))
    np.add.at(Dw, (at.origin, at.origin), wa)

    Bw = np.zeros((a, a, 4))
    mask = at.terminal[:, None] == at.origin[None, :]
    Bw[mask] = np.broadcast_to(wa[None, :, :], (a, a, 4))[mask]

    K = np.zeros((a, n, 4))
    K[idx, at.origin] = wa
    L = np.zeros((a, n, 4))
    L[idx, at.terminal, 0] = 1.0
    return QMatrix(W), QMatrix(Dw), QMatrix(Bw), QMatrix(K), QMatrix(L)


def _check_weights(G: Graph, w: WeightAssignment):
    if w.graph is not G and w.graph != G:
        raise ValidationError("weight assignment belongs to a different graph")
    if len(w) != len(G.arcs):
        raise MissingWeightError(f"expected {len(G.arcs)} weights, got {len(w)}")


def w_tilde(G: Graph, w: WeightAssignment, e: int, f: int) -> Quaternion:
    """Entry ``(e, f)`` of the weighted edge matrix ``B_w - J0``."""
    a = len(G.arcs)
    if not (0 <= e < a and 0 <= f < a):
        raise IndexError(f"arc index out of range 0..{a - 1}: ({e}, {f})")
    at = G.arcs
    if f == at.inverse[e]:
        return w[f] - 1
    if at.terminal[e] == at.origin[f]:
        return w[f]
    return Quaternion()


def w_tilde_array(G: Graph, w: WeightAssignment) -> np.ndarray:
    """All entries of ``B_w - J0`` as a ``(2m, 2m, 4)`` array."""
    _check_weights(G, w)
    at = G.arcs
    a = len(at)
    mask = at.terminal[:, None] == at.origin[None, :]
    out = np.where(mask[:, :, None], w.array[None, :, :], 0.0)
    out[np.arange(a), at.inverse, 0] -= 1.0
    return out


def edge_matrix_weighted(G: Graph, w: WeightAssignment) -> QMatrix:
    return QMatrix(w_tilde_array(G, w))
