import math
from itertools import permutations as all_perms

import numpy as np
import pytest

from rebrick import errors, linalg, permutation
from support import exact_char_poly, plant_eigenvalue_i, random_invertible, rotation

ROT90 = rotation(np.pi / 2)


class TestColumnPermutation:
    def test_four_by_four_cycle(self):
        # image of the 3-cycle 2->3->4->2 (0-based: 1->2->3->1)
        pi = (0, 2, 3, 1)
        A = np.arange(16.0).reshape(4, 4)
        out = permutation.apply_column_permutation(A, pi)
        a = [A[:, j] for j in range(4)]
        expected = np.column_stack([a[0], a[3], a[1], a[2]])
        np.testing.assert_array_equal(out, expected)
        # matrix route gives the same result
        P = permutation.permutation_matrix(pi, 4)
        np.testing.assert_array_equal(A @ P, expected)
        np.testing.assert_array_equal(
            P,
            np.array(
                [
                    [1, 0, 0, 0],
                    [0, 0, 1, 0],
                    [0, 0, 0, 1],
                    [0, 1, 0, 0],
                ],
                dtype=float,
            ),
        )

    def test_identity(self):
        A = np.arange(9.0).reshape(3, 3)
        np.testing.assert_array_equal(
            permutation.apply_column_permutation(A, (0, 1, 2)), A
        )

    def test_transposition_on_identity(self):
        out = permutation.apply_column_permutation(np.eye(2), (1, 0))
        np.testing.assert_array_equal(out, np.array([[0.0, 1.0], [1.0, 0.0]]))

    def test_not_a_permutation(self):
        with pytest.raises(errors.NotAPermutation):
            permutation.apply_column_permutation(np.eye(3), (0, 0, 2))
        with pytest.raises(errors.NotAPermutation):
            permutation.apply_column_permutation(np.eye(3), (0, 1))

    def test_composition(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            n = int(rng.integers(2, 7))
            A = rng.standard_normal((n, n))
            pi = tuple(int(j) for j in rng.permutation(n))
            sg = tuple(int(j) for j in rng.permutation(n))
            two_steps = permutation.apply_column_permutation(
                permutation.apply_column_permutation(A, pi), sg
            )
            one_step = permutation.apply_column_permutation(
                A, permutation.compose(pi, sg)
            )
            np.testing.assert_allclose(two_steps, one_step, atol=0)

    def test_cycle_notation(self):
        assert permutation.cycle_notation((0, 1, 2)) == "id"
        assert permutation.cycle_notation((1, 0)) == "(1 2)"
        assert permutation.cycle_notation((0, 2, 3, 1)) == "(2 3 4)"


class TestCharPoly:
    def test_identity_two(self):
        p = permutation.char_poly(np.eye(2))
        np.testing.assert_allclose(p.coefficients, [1.0, -2.0, 1.0], atol=1e-14)

    def test_quarter_turn(self):
        p = permutation.char_poly(ROT90)
        np.testing.assert_allclose(p.coefficients, [1.0, 0.0, 1.0], atol=1e-14)

    def test_against_exact_integer_oracle(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            A = rng.integers(-5, 6, size=(4, 4))
            exact = [float(c) for c in exact_char_poly(A)]
            for method in ("minors", "recursion"):
                p = permutation.char_poly(A.astype(float), method=method)
                np.testing.assert_allclose(p.coefficients, exact, atol=1e-8)

    def test_trace_and_determinant_coefficients(self):
        rng = np.random.default_rng(2)
        for _ in range(30):
            n = int(rng.integers(2, 7))
            A = rng.standard_normal((n, n))
            p = permutation.char_poly(A)
            assert p.coefficients[n - 1] == pytest.approx(-np.trace(A), rel=1e-10, abs=1e-10)
            assert p.coefficients[0] == pytest.approx(
                (-1.0) ** n * np.linalg.det(A), rel=1e-8, abs=1e-10
            )

    def test_minors_agree_with_recursion(self):
        rng = np.random.default_rng(3)
        for n in range(2, 9):
            for _ in range(10):
                A = rng.standard_normal((n, n))
                a = np.array(permutation.char_poly(A, method="minors").coefficients)
                b = np.array(permutation.char_poly(A, method="recursion").coefficients)
                scale = np.maximum(np.abs(a), 1.0)
                assert np.max(np.abs(a - b) / scale) <= 1e-9

    def test_large_dimension_falls_back_to_recursion(self):
        rng = np.random.default_rng(4)
        A = rng.standard_normal((15, 15))
        p = permutation.char_poly(A)  # no error: auto path switches
        assert p.degree == 15

    def test_evaluation_at_eigenvalue_is_zero(self):
        rng = np.random.default_rng(5)
        A = rng.standard_normal((5, 5))
        p = permutation.char_poly(A)
        for lam in np.linalg.eigvals(A):
            assert abs(p(lam)) < 1e-6


class TestSummedCharPoly:
    def test_identity_two(self):
        np.testing.assert_allclose(
            permutation.summed_char_poly(np.eye(2)), [0.0, -2.0, 2.0], atol=1e-14
        )

    def test_zero_three(self):
        np.testing.assert_allclose(
            permutation.summed_char_poly(np.zeros((3, 3))), [0.0, 0.0, 0.0, 6.0], atol=0
        )

    def test_matches_brute_force_sum(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            A = rng.integers(-4, 5, size=(3, 3)).astype(float)
            total = np.zeros(4)
            for pi in all_perms(range(3)):
                total += np.array(
                    permutation.char_poly(
                        permutation.apply_column_permutation(A, pi)
                    ).coefficients
                )
            np.testing.assert_allclose(total, permutation.summed_char_poly(A), atol=1e-8)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_closed_form_random(self, n):
        rng = np.random.default_rng(100 + n)
        for _ in range(10):
            A = rng.standard_normal((n, n))
            total = np.zeros(n + 1)
            for pi in all_perms(range(n)):
                total += np.array(
                    permutation.char_poly(
                        permutation.apply_column_permutation(A, pi)
                    ).coefficients
                )
            closed = permutation.summed_char_poly(A)
            scale = np.maximum(np.abs(closed), 1.0)
            assert np.max(np.abs(total - closed) / scale) <= 1e-8


class TestInvariantCandidates:
    def test_identity(self):
        zero, mean = permutation.invariant_eigenvalue_candidates(np.eye(4))
        assert zero == 0.0
        assert mean == pytest.approx(1.0)
        # 1 really is an eigenvalue of every column permutation of the identity
        ones = np.ones(4) / 2.0
        for pi in all_perms(range(4)):
            P = permutation.apply_column_permutation(np.eye(4), pi)
            np.testing.assert_allclose(P @ ones, np.linalg.matrix_power(P, 1) @ ones)
            w = np.linalg.eigvals(P)
            assert np.min(np.abs(w - 1.0)) < 1e-10

    def test_singular_matrix_keeps_zero(self):
        A = np.array([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 0.0]])
        for pi in all_perms(range(3)):
            AP = permutation.apply_column_permutation(A, pi)
            w = np.linalg.eigvals(AP)
            assert np.min(np.abs(w)) < 1e-10

    def _common_eigenvalues(self, A, tol=1e-8):
        n = A.shape[0]
        candidates = np.linalg.eigvals(A)
        for pi in all_perms(range(n)):
            w = np.linalg.eigvals(permutation.apply_column_permutation(A, pi))
            candidates = np.array(
                [c for c in candidates if np.min(np.abs(w - c)) <= tol]
            )
            if candidates.size == 0:
                break
        return candidates

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_common_eigenvalues_inside_candidate_pair(self, n):
        rng = np.random.default_rng(200 + n)
        for _ in range(10):
            A = rng.standard_normal((n, n))
            zero, mean = permutation.invariant_eigenvalue_candidates(A)
            for lam in self._common_eigenvalues(A):
                assert min(abs(lam - zero), abs(lam - mean)) <= 1e-8


class TestRepair:
    def test_quarter_turn_repaired_by_swap(self):
        rep = permutation.repair_permutation(ROT90)
        assert rep.permutation == (1, 0)
        W = permutation.rebrick_with_permutation(np.eye(2), ROT90, rep.permutation)
        np.testing.assert_allclose(W, np.diag([1.0 - 1j, 1.0 + 1j]), atol=1e-12)

    def test_no_eigenvalue_i_keeps_identity(self):
        rng = np.random.default_rng(7)
        A = rng.standard_normal((4, 4)) + 5 * np.eye(4)
        rep = permutation.repair_permutation(A)
        assert rep.permutation == (0, 1, 2, 3)
        assert rep.trials == 1

    def test_planted_eigenvalue_repaired_and_verified(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            n = int(rng.integers(2, 8))
            A = plant_eigenvalue_i(rng, n)
            rep = permutation.repair_permutation(A)
            AP = permutation.apply_column_permutation(A, rep.permutation)
            w = linalg.eigenvalues(AP)
            assert np.min(np.abs(w - 1j)) > 1e-8
            assert rep.sigma_min_after > 1e-8

    @pytest.mark.parametrize("n", list(range(2, 9)))
    def test_always_succeeds_up_to_eight(self, n):
        rng = np.random.default_rng(300 + n)
        for _ in range(5):
            A = plant_eigenvalue_i(rng, n)
            rep = permutation.repair_permutation(A)
            assert rep.sigma_min_after > 0

    def test_large_dimension_uses_seeded_random_search(self):
        rng = np.random.default_rng(9)
        A = plant_eigenvalue_i(rng, 9)
        rep1 = permutation.repair_permutation(A, seed=42)
        rep2 = permutation.repair_permutation(A, seed=42)
        assert rep1 == rep2
        AP = permutation.apply_column_permutation(A, rep1.permutation)
        assert np.min(np.abs(linalg.eigenvalues(AP) - 1j)) > 1e-8

    def test_search_order_identity_then_transpositions(self):
        order = list(permutation._candidate_order(3))
        assert order[0] == (0, 1, 2)
        assert order[1:4] == [(1, 0, 2), (2, 1, 0), (0, 2, 1)]
        assert len(order) == math.factorial(3)
        assert len(set(order)) == len(order)


class TestRebrickWithPermutation:
    def test_matches_conjugated_form(self):
        rng = np.random.default_rng(10)
        V = random_invertible(rng, 4)
        A = plant_eigenvalue_i(rng, 4)
        At = np.linalg.inv(V) @ A @ V
        rep = permutation.repair_permutation(At)
        W = permutation.rebrick_with_permutation(V, A, rep.permutation)
        P = permutation.permutation_matrix(rep.permutation, 4)
        np.testing.assert_allclose(W, V @ (np.eye(4) + 1j * At @ P), atol=1e-9)
        assert np.linalg.svd(W, compute_uv=False)[-1] > 1e-8

    def test_identity_permutation_trivial_case(self):
        rng = np.random.default_rng(11)
        A = rng.standard_normal((3, 3)) + 4 * np.eye(3)
        W = permutation.rebrick_with_permutation(np.eye(3), A, (0, 1, 2))
        np.testing.assert_allclose(W, np.eye(3) + 1j * A, atol=1e-12)

    def test_rejects_non_repairing_permutation(self):
        with pytest.raises(errors.NotRepaired):
            permutation.rebrick_with_permutation(np.eye(2), ROT90, (0, 1))
