import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from adekit import graphs
from adekit.linalg import (
    PreconditionError,
    associated_symmetric,
    basic_matrix,
    integer_determinant,
    jacobi_eigh,
    leading_principal_minors,
    max_eigenpair,
    operator_norm,
    perron_vector,
    rayleigh_quotient,
    spectral_radius,
)
from oracles import char_poly, leibniz_det, leibniz_minors, max_real_root

TOL = 1e-9


def rect_matrices(max_dim=6, max_entry=3):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(st.integers(0, max_entry), min_size=m * n, max_size=m * n).map(
                lambda xs: np.array(xs, dtype=np.int64).reshape(m, n)
            )
        )
    )


def sym_matrices(max_dim=6, lo=-4, hi=4):
    def build(n):
        k = n * (n + 1) // 2
        return st.lists(st.integers(lo, hi), min_size=k, max_size=k).map(lambda xs: _fill(n, xs))

    return st.integers(1, max_dim).flatmap(build)


def _fill(n, xs):
    M = np.zeros((n, n), dtype=np.int64)
    M[np.triu_indices(n)] = xs
    return M + np.triu(M, 1).T


class TestBasicMatrix:
    @pytest.mark.parametrize(
        "args, expected",
        [
            ((1, 1, 1, 1), [[1]]),
            ((2, 3, 1, 2), [[0, 1, 0], [0, 0, 0]]),
            ((3, 2, 3, 1), [[0, 0], [0, 0], [1, 0]]),
        ],
    )
    def test_examples(self, args, expected):
        np.testing.assert_array_equal(basic_matrix(*args), expected)

    @pytest.mark.parametrize("args", [(2, 2, 0, 1), (2, 2, 3, 1), (2, 2, 1, 3)])
    def test_out_of_range(self, args):
        with pytest.raises(ValueError):
            basic_matrix(*args)


class TestAssociatedSymmetric:
    def test_one_by_one(self):
        np.testing.assert_array_equal(associated_symmetric([[1]]), [[0, 1], [1, 0]])

    def test_zero(self):
        np.testing.assert_array_equal(associated_symmetric(np.zeros((2, 3), int)), np.zeros((5, 5)))

    def test_blocks(self):
        A = associated_symmetric([[1, 1], [0, 1]])
        np.testing.assert_array_equal(A, [[0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0], [1, 1, 0, 0]])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            associated_symmetric([[1, -1]])


class TestNorms:
    def test_basic_operator(self):
        assert abs(operator_norm(basic_matrix(2, 3, 1, 2)) - 1.0) <= 1e-12

    def test_all_ones_3x2(self):
        # B^T B = [[3,3],[3,3]] has top eigenvalue 6
        assert abs(operator_norm(np.ones((3, 2), int)) - math.sqrt(6)) <= TOL

    def test_two_rows_of_ones(self):
        # B^T B = [[2,2],[2,2]] has top eigenvalue 4
        assert abs(operator_norm([[1, 1], [1, 1], [0, 0]]) - 2.0) <= TOL

    def test_spectral_radius_examples(self):
        assert spectral_radius([[0]]) == 0.0
        assert abs(spectral_radius([[0, 1], [1, 0]]) - 1.0) <= TOL
        assert abs(spectral_radius(graphs.cycle(4).adjacency) - 2.0) <= TOL

    @settings(max_examples=150, deadline=None)
    @given(rect_matrices())
    def test_transpose_invariance(self, B):
        assert abs(operator_norm(B) - operator_norm(B.T)) <= TOL

    @settings(max_examples=150, deadline=None)
    @given(rect_matrices())
    def test_norm_is_sqrt_of_gram_top_eigenvalue(self, B):
        ref = math.sqrt(max(np.linalg.eigvalsh(B.T @ B).max(), 0.0))
        assert operator_norm(B) == spectral_radius(associated_symmetric(B))
        assert abs(operator_norm(B) - ref) <= TOL

    @settings(max_examples=100, deadline=None)
    @given(sym_matrices(4), sym_matrices(4))
    def test_block_lemma(self, M1, M2):
        n1, n2 = len(M1), len(M2)
        M = np.zeros((n1 + n2, n1 + n2), dtype=np.int64)
        M[:n1, :n1] = M1
        M[n1:, n1:] = M2
        assert abs(spectral_radius(M) - max(spectral_radius(M1), spectral_radius(M2))) <= TOL


class TestJacobi:
    @settings(max_examples=200, deadline=None)
    @given(sym_matrices(8, -6, 6))
    def test_residual_and_orthogonality(self, M):
        w, V = jacobi_eigh(M)
        assert np.all(np.diff(w) >= 0)
        np.testing.assert_allclose(M @ V, V * w, atol=TOL)
        np.testing.assert_allclose(V.T @ V, np.eye(len(M)), atol=TOL)

    def test_matches_lapack_at_moderate_size(self):
        rng = np.random.default_rng(7)
        M = np.triu(rng.integers(0, 2, (40, 40)), 1)
        M = M + M.T
        w, _ = jacobi_eigh(M)
        np.testing.assert_allclose(w, np.linalg.eigvalsh(M), atol=TOL)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            jacobi_eigh([[0, 1], [0, 0]])


class TestRayleigh:
    def test_examples(self):
        A = [[0, 1], [1, 0]]
        assert rayleigh_quotient(A, [1, 1]) == 1.0
        assert rayleigh_quotient(A, [1, -1]) == -1.0

    def test_at_eigenvector(self):
        A = graphs.path(5).adjacency
        ep = max_eigenpair(A)
        assert abs(rayleigh_quotient(A, ep.vector) - ep.value) <= TOL

    def test_zero_vector(self):
        with pytest.raises(ValueError):
            rayleigh_quotient([[1]], [0])

    @settings(max_examples=100, deadline=None)
    @given(sym_matrices(5), st.lists(st.floats(-5, 5), min_size=5, max_size=5), st.floats(0.1, 10))
    def test_scale_invariant_and_bounded(self, A, xs, a):
        x = np.array(xs[: len(A)])
        if not np.any(np.abs(x) > 1e-3):
            return
        r = rayleigh_quotient(A, x)
        assert abs(r - rayleigh_quotient(A, a * x)) <= 1e-9 * max(1.0, abs(r))
        assert abs(r - rayleigh_quotient(A, -a * x)) <= 1e-9 * max(1.0, abs(r))
        assert r <= max_eigenpair(A).value + TOL

    def test_rayleigh_bound_random(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.integers(1, 8))
            A = _fill(n, rng.integers(-5, 6, n * (n + 1) // 2))
            top = max_eigenpair(A).value
            for _ in range(50):
                x = rng.normal(size=n)
                assert rayleigh_quotient(A, x) <= top + TOL


class TestMaxEigenpair:
    def test_cycle4(self):
        ep = max_eigenpair(graphs.cycle(4).adjacency)
        assert abs(ep.value - 2) <= TOL
        np.testing.assert_allclose(ep.vector, np.full(4, 0.5), atol=TOL)

    def test_path3(self):
        ep = max_eigenpair(graphs.path(3).adjacency)
        assert abs(ep.value - math.sqrt(2)) <= TOL
        np.testing.assert_allclose(ep.vector, np.array([1, math.sqrt(2), 1]) / 2, atol=TOL)

    def test_scalar(self):
        ep = max_eigenpair([[5]])
        assert ep.value == 5 and ep.vector.tolist() == [1.0]

    def test_signed_not_absolute(self):
        assert abs(max_eigenpair([[-3, 0], [0, 1]]).value - 1) <= TOL

    def test_agrees_with_exact_characteristic_polynomial(self):
        # every symmetric 0/1 matrix up to dimension 4
        for n in range(1, 5):
            k = n * (n + 1) // 2
            for bits in itertools.product((0, 1), repeat=k):
                A = _fill(n, bits)
                exact = max_real_root(char_poly(A), n + 1)
                assert abs(max_eigenpair(A).value - exact) <= TOL, A


class TestPerron:
    def test_cycle4(self):
        np.testing.assert_allclose(perron_vector(graphs.cycle(4).adjacency), np.full(4, 0.5), atol=TOL)

    def test_edge(self):
        np.testing.assert_allclose(perron_vector(graphs.path(2).adjacency), np.full(2, 1 / math.sqrt(2)), atol=TOL)

    def test_path3(self):
        v = np.array([1, math.sqrt(2), 1])
        np.testing.assert_allclose(perron_vector(graphs.path(3).adjacency), v / np.linalg.norm(v), atol=TOL)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            perron_vector(graphs.disjoint_union(graphs.path(2), graphs.path(2)).adjacency)
        with pytest.raises(PreconditionError):
            perron_vector(np.zeros((3, 3), int))
        with pytest.raises(PreconditionError):
            perron_vector([[0, -1], [-1, 0]])


class TestMinors:
    @pytest.mark.parametrize(
        "M, expected",
        [
            ([[2]], [2]),
            ([[2, -1], [-1, 2]], [2, 3]),
            ([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], [2, 3, 0]),
        ],
    )
    def test_examples(self, M, expected):
        assert leading_principal_minors(M) == expected

    @settings(max_examples=200, deadline=None)
    @given(sym_matrices(6, -3, 3))
    def test_against_leibniz(self, M):
        assert leading_principal_minors(M) == leibniz_minors(M)
        assert integer_determinant(M) == leibniz_det(M)

    def test_zero_pivot_then_nonzero(self):
        M = [[0, 1, 0], [1, 0, 0], [0, 0, 3]]
        assert leading_principal_minors(M) == [0, -1, -3]

    def test_unbounded_precision(self):
        M = np.diag([10**12] * 4).astype(object)
        assert leading_principal_minors(M)[-1] == 10**48
