import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spectralbounds import linalg
from spectralbounds.graph import Graph, random_connected
from spectralbounds.metrics import all_pairs_distances


def test_adjacency_examples(fam):
    assert linalg.adjacency_matrix(fam("complete", 2)).tolist() == [[0, 1], [1, 0]]
    assert linalg.adjacency_matrix(fam("path", 3)).tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    assert linalg.adjacency_matrix(Graph(1)).tolist() == [[0]]


def test_signless_laplacian_examples(fam):
    assert linalg.signless_laplacian(fam("complete", 2)).tolist() == [[1, 1], [1, 1]]
    assert linalg.signless_laplacian(fam("path", 3)).tolist() == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
    q = linalg.signless_laplacian(fam("cycle", 4))
    assert np.diag(q).tolist() == [2] * 4
    assert q.tolist() == [[2, 1, 0, 1], [1, 2, 1, 0], [0, 1, 2, 1], [1, 0, 1, 2]]


def test_q_is_degree_plus_adjacency(fam):
    g = fam("star", 5)
    assert np.array_equal(linalg.signless_laplacian(g), linalg.degree_matrix(g) + linalg.adjacency_matrix(g))


def test_dsl_examples(fam):
    def dsl(g):
        return linalg.distance_signless_laplacian(all_pairs_distances(g)).tolist()

    assert dsl(fam("complete", 2)) == [[1, 1], [1, 1]]
    assert dsl(fam("path", 3)) == [[3, 1, 2], [1, 2, 1], [2, 1, 3]]
    assert dsl(fam("complete", 3)) == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]


def test_dsl_is_transmission_plus_distance(fam):
    dd = all_pairs_distances(fam("path", 6))
    assert np.array_equal(
        linalg.distance_signless_laplacian(dd),
        linalg.transmission_matrix(dd) + linalg.distance_matrix(dd),
    )


def test_matrices_read_only(fam):
    with pytest.raises(ValueError):
        linalg.signless_laplacian(fam("path", 3))[0, 0] = 1.0


def test_row_sums_examples(fam):
    rs = linalg.row_sums(linalg.distance_signless_laplacian(all_pairs_distances(fam("path", 3))))
    assert rs.values.tolist() == [6, 4, 6]
    assert rs.sorted.tolist() == [6, 6, 4]
    assert rs.order.tolist() == [0, 2, 1]
    assert linalg.row_sums(linalg.signless_laplacian(fam("cycle", 4))).values.tolist() == [4] * 4
    assert linalg.row_sums(np.array([[0, 2], [3, 0]])).values.tolist() == [2, 3]


def test_extreme_entries(fam):
    assert linalg.extreme_entries(linalg.distance_signless_laplacian(all_pairs_distances(fam("path", 3)))) == (3, 2)
    assert linalg.extreme_entries(linalg.signless_laplacian(fam("star", 4))) == (3, 1)
    assert linalg.extreme_entries(np.array([[5.0, 0], [0, 5]])) == (5, 0)
    with pytest.raises(ValueError, match="no off-diagonal entries"):
        linalg.extreme_entries(np.array([[1.0]]))


def test_irreducible(fam):
    assert linalg.is_irreducible(linalg.distance_signless_laplacian(all_pairs_distances(fam("cycle", 7))))
    assert not linalg.is_irreducible(np.eye(2))
    assert linalg.is_irreducible(linalg.adjacency_matrix(fam("path", 3)))
    assert not linalg.is_irreducible(np.array([[0, 1.0], [0, 0]]))  # one-way only
    with pytest.raises(ValueError):
        linalg.is_irreducible(np.array([[0, -1.0], [-1.0, 0]]))


def test_add_row_sum_diagonal(fam):
    g = fam("path", 4)
    assert np.array_equal(linalg.add_row_sum_diagonal(linalg.adjacency_matrix(g)), linalg.signless_laplacian(g))


def test_format_matrix(tmp_path):
    m = np.array([[1.0, 2.0 ** 0.5], [2.0 ** 0.5, 1 / 3]])
    text = linalg.format_matrix(m)
    assert text == "1 1.4142135623730951\n1.4142135623730951 0.33333333333333331\n"
    path = tmp_path / "m.txt"
    linalg.dump_matrix(m, path)
    back = np.loadtxt(path)
    assert np.array_equal(back, m)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 20), st.sampled_from([0.2, 0.5, 1.0]), st.integers(0, 2**64 - 1))
def test_row_sum_identities(n, p, seed):
    g = random_connected(n, p, seed)
    dd = all_pairs_distances(g)
    q = linalg.signless_laplacian(g)
    dq = linalg.distance_signless_laplacian(dd)
    assert np.array_equal(linalg.row_sums(dq).values, 2 * dd.transmissions)
    assert np.array_equal(linalg.row_sums(q).values, 2 * np.array(g.degrees()))
    for m in (q, dq):
        assert np.array_equal(m, m.T)
        off = np.abs(m).sum(axis=1) - np.abs(np.diag(m))
        assert np.all(np.diag(m) >= off)  # weakly diagonally dominant
