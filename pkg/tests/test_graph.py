import numpy as np
import pytest

from qzeta.errors import MissingWeightError, ParseError, ValidationError
from qzeta.graph import (Graph, WeightAssignment, complete_graph, cycle_graph, format_graph,
                         format_weights, matrices_classic, matrices_weighted, parse_graph,
                         parse_weights, path_graph, w_tilde, w_tilde_array)
from qzeta.qmatrix import QMatrix, qmatmul
from qzeta.quaternion import I, J, ONE, Quaternion
from qzeta.sampling import random_connected_graph, random_weights, trial_rngs


def some_graphs():
    fixed = [cycle_graph(3), cycle_graph(4), complete_graph(4), path_graph(4),
             path_graph(2), Graph(1, ())]
    rngs = trial_rngs(11, 10)
    return fixed + [random_connected_graph(r, int(r.integers(2, 8))) for r in rngs]


def test_parse_triangle():
    G = parse_graph("n 3\ne 0 1\ne 1 2\ne 0 2")
    assert (G.n, G.m, G.betti, len(G.arcs)) == (3, 3, 1, 6)


def test_parse_single_edge():
    G = parse_graph("n 2\ne 0 1")
    assert len(G.arcs) == 2
    assert G.arcs.arcs[0] == (0, 1) and G.arcs.arcs[1] == (1, 0)


def test_parse_comments_and_bytes():
    G = parse_graph(b"# triangle\nn 3  # count\n\ne 1 0\ne 2 1\ne 0 2\n")
    assert G.edges == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize("text, lineno", [
    ("n 3\ne 0 1 2", 2),
    ("n x", 1),
    ("e 0 1\nn 2", 1),
    ("n 2\nq 0 1", 2),
    ("n 2\nn 2", 2),
])
def test_parse_errors_carry_line(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


@pytest.mark.parametrize("text, what", [
    ("n 3\ne 0 1", "disconnected"),
    ("n 2\ne 0 0", "loop"),
    ("n 2\ne 0 1\ne 1 0", "duplicate"),
    ("n 2\ne 0 2", "outside"),
])
def test_validation_errors(text, what):
    with pytest.raises(ValidationError, match=what):
        parse_graph(text)


def test_format_roundtrip():
    G = complete_graph(5)
    assert parse_graph(format_graph(G)) == G


def test_classic_single_edge():
    _, _, B, J0 = matrices_classic(path_graph(2))
    assert np.array_equal(B, J0)
    assert not np.any(B - J0)


def test_classic_triangle():
    _, _, B, J0 = matrices_classic(cycle_graph(3))
    assert np.all(B.sum(axis=1) == 2)
    assert np.array_equal(J0 @ J0, np.eye(6, dtype=int))


@pytest.mark.parametrize("G", some_graphs())
def test_classic_invariants(G):
    A, D, B, J0 = matrices_classic(G)
    assert np.array_equal(A, A.T)
    assert np.array_equal(A.sum(axis=1), np.diag(D))
    assert np.array_equal(J0 @ J0, np.eye(2 * G.m, dtype=int))
    deg = G.degrees()
    for e in range(2 * G.m):
        assert B[e].sum() == deg[G.arcs.terminal[e]]
    # J0 is block diagonal with 2x2 swap blocks
    for k in range(G.m):
        assert J0[2 * k, 2 * k + 1] == J0[2 * k + 1, 2 * k] == 1


@pytest.mark.parametrize("G", some_graphs())
def test_arc_table_invariants(G):
    at = G.arcs
    inv = at.inverse
    assert np.all(inv[inv] == np.arange(len(at)))
    assert np.all(inv != np.arange(len(at)))
    assert np.array_equal(at.origin[inv], at.terminal)
    for k, arc in enumerate(at.arcs):
        assert G.arc_index(*arc) == k
    for k, (u, v) in enumerate(G.edges):
        assert at.arcs[2 * k] == (u, v) and u < v
        assert at.arcs[2 * k + 1] == (v, u)
    assert G.betti >= 0
    assert (G.betti == 0) == G.is_tree()


def test_unit_weights_collapse(triangle):
    w = WeightAssignment.unit(triangle)
    W, Dw, Bw, _, _ = matrices_weighted(triangle, w)
    A, D, B, _ = matrices_classic(triangle)
    assert np.array_equal(Bw.simplex, B) and not np.any(Bw.perplex)
    assert np.array_equal(Dw.simplex, 2 * np.eye(3))
    assert np.array_equal(W.simplex, A)


def test_single_edge_weighted():
    G = path_graph(2)
    w = WeightAssignment.from_mapping(G, {(0, 1): I, (1, 0): J})
    W, Dw, Bw, _, _ = matrices_weighted(G, w)
    assert Bw == QMatrix.from_entries([[0, J], [I, 0]])
    assert Dw == QMatrix.diag([I, J])
    assert W == QMatrix.from_entries([[0, I], [J, 0]])


@pytest.mark.parametrize("G", some_graphs())
def test_factorization_exact(G):
    w = random_weights(np.random.default_rng(G.m), G)
    _, _, Bw, K, L = matrices_weighted(G, w)
    assert qmatmul(L, K.T) == Bw
    for X in (K, L):
        assert np.all(np.any(X.array != 0, axis=2).sum(axis=1) == 1)
    _, _, B, _ = matrices_classic(G)
    assert np.array_equal(np.any(Bw.array != 0, axis=2), B.astype(bool))


def test_w_tilde_cases(triangle):
    w1 = WeightAssignment.unit(triangle)
    for e in range(6):
        assert w_tilde(triangle, w1, e, int(triangle.arcs.inverse[e])) == Quaternion()
    e = triangle.arc_index(0, 1)
    f = triangle.arc_index(1, 2)
    assert w_tilde(triangle, w1, e, f) == ONE
    assert w_tilde(triangle, w1, e, triangle.arc_index(2, 0)) == Quaternion()
    with pytest.raises(IndexError):
        w_tilde(triangle, w1, 0, 6)


@pytest.mark.parametrize("G", some_graphs())
def test_w_tilde_matches_edge_matrix(G):
    w = random_weights(np.random.default_rng(G.n), G)
    _, _, Bw, _, _ = matrices_weighted(G, w)
    _, _, _, J0 = matrices_classic(G)
    E = Bw.array.copy()
    E[..., 0] -= J0
    assert np.array_equal(w_tilde_array(G, w), E)
    for e in range(2 * G.m):
        for f in range(2 * G.m):
            assert np.array_equal(w_tilde(G, w, e, f).to_array(), E[e, f])


def test_weights_file(triangle):
    text = "# weights\nw 0 1 0 1 0 0\nw 2 0 0.5 0 0 -1\n"
    w = parse_weights(text, triangle)
    assert w[triangle.arc_index(0, 1)] == I
    assert w[triangle.arc_index(2, 0)] == Quaternion(0.5, 0, 0, -1)
    assert w[triangle.arc_index(1, 0)] == ONE
    assert parse_weights(format_weights(w), triangle).array.tolist() == w.array.tolist()


@pytest.mark.parametrize("text, exc", [
    ("w 0 1 1 0 0", ParseError),
    ("w 0 1 a 0 0 0", ParseError),
    ("v 0 1 1 0 0 0", ParseError),
    ("w 0 0 1 0 0 0", ValidationError),
    ("w 0 1 1 0 0 0\nw 0 1 1 0 0 0", ValidationError),
])
def test_weights_file_errors(triangle, text, exc):
    with pytest.raises(exc):
        parse_weights(text, triangle)


def test_missing_weight(triangle):
    with pytest.raises(MissingWeightError):
        WeightAssignment.from_mapping(triangle, {(0, 1): ONE})
    with pytest.raises(MissingWeightError):
        WeightAssignment(triangle, [ONE] * 5)
    with pytest.raises(ValidationError, match="different graph"):
        matrices_weighted(triangle, WeightAssignment(path_graph(3), [ONE] * 4))


def test_random_graphs_connected():
    for r in trial_rngs(3, 30):
        n = int(r.integers(1, 9))
        G = random_connected_graph(r, n, extra_edges=0)
        assert G.is_tree() and G.n == n
