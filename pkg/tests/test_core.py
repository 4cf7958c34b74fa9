import numpy as np
import pytest

import signednet as sn
from signednet.errors import (
    DisconnectedError,
    DuplicateEdgeError,
    IdOutOfRangeError,
    SelfLoopError,
    ZeroWeightError,
)

from helpers import nonsymmetric_eigenvalues, random_connected_corpus


class TestBuildGraph:
    def test_triangle_and_dyad_build(self, triangle_positive, dyad_negative):
        assert triangle_positive.n == 3 and triangle_positive.num_edges == 3
        assert dyad_negative.weight(0, 1) == -1.0

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedError, match="node 2"):
            sn.build_graph(3, [(0, 1, 1.0)])

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError, match="node 1"):
            sn.build_graph(2, [(0, 1, 1.0), (1, 1, 1.0)])

    def test_duplicate_pair_rejected_either_orientation(self):
        with pytest.raises(DuplicateEdgeError, match=r"\(0, 1\)"):
            sn.build_graph(2, [(0, 1, 1.0), (1, 0, -1.0)])

    def test_zero_weight_rejected(self):
        with pytest.raises(ZeroWeightError):
            sn.build_graph(2, [(0, 1, 1e-16)])

    def test_id_out_of_range(self):
        with pytest.raises(IdOutOfRangeError):
            sn.build_graph(2, [(0, 2, 1.0)])

    def test_single_node_graph_is_valid(self):
        G = sn.build_graph(1, [])
        assert G.n == 1 and G.num_edges == 0

    def test_weight_matrix_symmetric(self, strictly_unbalanced_4):
        W = strictly_unbalanced_4.weight_matrix
        assert np.array_equal(W, W.T)

    def test_components_splitter(self):
        parts = sn.components(5, [(0, 1, 1.0), (2, 3, -1.0), (3, 4, 1.0)])
        sizes = sorted(g.n for g, _ in parts)
        assert sizes == [2, 3]
        ids = [orig for _, orig in parts]
        assert ids == [[0, 1], [2, 3, 4]]


class TestDegrees:
    def test_triangle_degrees(self, triangle_positive):
        dv = sn.degree_vector(triangle_positive)
        assert np.allclose(dv.d, [2, 2, 2]) and dv.total == 6

    def test_dyad_negative_degree_uses_absolute_value(self, dyad_negative):
        assert np.allclose(sn.degree_vector(dyad_negative).d, [1, 1])

    def test_four_cycle_small_weights(self):
        G = sn.build_graph(4, [(0, 1, -0.1), (1, 2, 0.1), (2, 3, -0.1), (0, 3, 0.1)])
        assert np.allclose(sn.degree_vector(G).d, [0.2, 0.2, 0.2, 0.2])

    def test_degrees_invariant_under_unsigned_counterpart(self):
        for G in random_connected_corpus(25, seed=5):
            assert np.array_equal(sn.degree_vector(G).d, sn.degree_vector(sn.unsigned_counterpart(G)).d)


class TestUnsignedAndSignAdjacency:
    def test_all_negative_becomes_all_positive(self, triangle_negative):
        U = sn.unsigned_counterpart(triangle_negative)
        assert all(w == 1.0 for _, _, w in U.edges)

    def test_dyad_half_negative(self):
        G = sn.build_graph(2, [(0, 1, -0.5)])
        assert sn.unsigned_counterpart(G).weight(0, 1) == 0.5

    def test_sign_adjacency_entries(self):
        G = sn.build_graph(3, [(0, 1, 0.1), (1, 2, -0.1), (0, 2, -3.0)])
        A = sn.sign_adjacency(G)
        assert A[0, 1] == 1 and A[1, 2] == -1 and A[0, 2] == -1 and A[0, 0] == 0
        assert np.array_equal(np.abs(A), sn.sign_adjacency(sn.unsigned_counterpart(G)))


class TestLaplacians:
    def test_positive_triangle_laplacian_row_sums_zero(self, triangle_positive):
        L = sn.signed_laplacian(triangle_positive)
        A = sn.sign_adjacency(triangle_positive)
        assert np.allclose(L, 2 * np.eye(3) - A)
        assert np.allclose(L.sum(axis=1), 0)

    def test_negative_triangle_laplacian_row_sums(self, triangle_negative):
        # L = D - W = 2I + |A|: every row sums to 4
        L = sn.signed_laplacian(triangle_negative)
        assert np.allclose(L, 2 * np.eye(3) + np.abs(sn.sign_adjacency(triangle_negative)))
        assert np.allclose(L.sum(axis=1), 4)

    def test_signed_laplacian_positive_semidefinite(self):
        for G in random_connected_corpus(50, seed=9):
            vals = np.linalg.eigvalsh(sn.signed_laplacian(G))
            assert vals.min() >= -1e-10

    def test_rw_laplacian_spectra_of_triangles(self, triangle_positive, triangle_negative):
        pos = nonsymmetric_eigenvalues(sn.random_walk_laplacian(triangle_positive))
        neg = nonsymmetric_eigenvalues(sn.random_walk_laplacian(triangle_negative))
        assert np.allclose(sorted(pos), [0, 1.5, 1.5])
        assert np.allclose(sorted(neg), [0.5, 0.5, 2.0])

    def test_rw_laplacian_spectrum_is_one_minus_transition_spectrum(self):
        for G in random_connected_corpus(20, seed=13):
            lrw = nonsymmetric_eigenvalues(sn.random_walk_laplacian(G))
            p = nonsymmetric_eigenvalues(sn.transition_matrix(G))
            assert np.allclose(np.sort(lrw), np.sort(1 - p), atol=1e-10)


class TestTransitionMatrices:
    def test_triangle_transition_entries(self, triangle_positive):
        P = sn.transition_matrix(triangle_positive)
        assert np.allclose(P, (np.ones((3, 3)) - np.eye(3)) / 2)

    def test_dyad_transition(self, dyad_negative):
        assert np.allclose(sn.transition_matrix(dyad_negative), [[0, -1], [-1, 0]])

    def test_row_absolute_sums_are_one(self):
        for G in random_connected_corpus(25, seed=21):
            P = sn.transition_matrix(G)
            assert np.allclose(np.abs(P).sum(axis=1), 1.0)

    def test_regular_graph_symmetrized_equals_transition(self, triangle_negative):
        assert np.allclose(sn.symmetrized_transition(triangle_negative), sn.transition_matrix(triangle_negative))

    def test_symmetrized_shares_spectrum_with_transition(self):
        for G in random_connected_corpus(25, seed=23):
            sym = np.linalg.eigvalsh(sn.symmetrized_transition(G))
            plain = nonsymmetric_eigenvalues(sn.transition_matrix(G))
            assert np.allclose(np.sort(sym), np.sort(plain), atol=1e-10)

    def test_eigenvector_map_between_p_and_p_sym(self):
        G = sn.build_graph(4, [(0, 1, 1.0), (1, 2, -2.0), (2, 3, 1.0), (0, 3, 1.0), (0, 2, -1.0)])
        vals, vecs = np.linalg.eigh(sn.symmetrized_transition(G))
        P = sn.transition_matrix(G)
        d_inv_sqrt = 1 / np.sqrt(G.degrees)
        for k in range(G.n):
            x = d_inv_sqrt * vecs[:, k]
            assert np.allclose(P @ x, vals[k] * x, atol=1e-10)


class TestDoubledSystem:
    def test_all_positive_is_block_diagonal(self, triangle_positive):
        W2 = sn.doubled_adjacency(triangle_positive)
        Wbar = sn.unsigned_counterpart(triangle_positive).weight_matrix
        assert np.allclose(W2[:3, :3], Wbar) and np.allclose(W2[3:, 3:], Wbar)
        assert np.allclose(W2[:3, 3:], 0) and np.allclose(W2[3:, :3], 0)

    def test_all_negative_is_block_antidiagonal(self, triangle_negative):
        W2 = sn.doubled_adjacency(triangle_negative)
        Wbar = sn.unsigned_counterpart(triangle_negative).weight_matrix
        assert np.allclose(W2[:3, 3:], Wbar) and np.allclose(W2[3:, :3], Wbar)
        assert np.allclose(W2[:3, :3], 0) and np.allclose(W2[3:, 3:], 0)

    def test_column_absolute_sums_match_degrees(self, strictly_unbalanced_4):
        W2 = sn.doubled_adjacency(strictly_unbalanced_4)
        d = strictly_unbalanced_4.degrees
        n = strictly_unbalanced_4.n
        assert np.allclose(np.abs(W2).sum(axis=0)[:n], d)
        assert np.allclose(np.abs(W2).sum(axis=0)[n:], d)

    def test_doubled_transition_blocks(self, strictly_unbalanced_4):
        G = strictly_unbalanced_4
        P2 = sn.doubled_transition(G)
        n = G.n
        diff = P2[:n, :n] - P2[:n, n:]
        total = P2[:n, :n] + P2[:n, n:]
        assert np.allclose(diff, sn.transition_matrix(G), atol=1e-14)
        assert np.allclose(total, sn.transition_matrix(sn.unsigned_counterpart(G)), atol=1e-14)
        assert np.allclose(P2.sum(axis=1), 1.0)

    def test_positive_negative_split_disjoint(self):
        from signednet.core import positive_negative_split

        for G in random_connected_corpus(20, seed=31):
            Wp, Wm = positive_negative_split(G)
            assert np.all(Wp >= 0) and np.all(Wm >= 0)
            assert not np.any((Wp > 0) & (Wm > 0))
            assert np.allclose(Wp - Wm, G.weight_matrix)
