from unittest import TestCase

import numpy as np

from hochschild.errors import DimensionMismatch, NotAComplex
from hochschild.linalg.modular import cohomology_at, kernel_basis, matmul_mod, rank, rref, solve
from hochschild.linalg.subspace import Subspace, class_equal, membership


class TestModular(TestCase):

    def test_rank(self):
        self.assertEqual(rank(np.array([[1, 2], [2, 4]]), 5), 1)
        self.assertEqual(rank(np.array([[1, 2], [3, 4]]), 5), 2)
        # determinant -2 vanishes mod 2 only
        self.assertEqual(rank(np.array([[1, 2], [3, 4]]), 2), 1)
        self.assertEqual(rank(np.zeros((3, 4), dtype=np.int64), 7), 0)

    def test_rref(self):
        reduced, matrix_rank, pivots = rref(np.array([[2, 4, 1], [1, 2, 3]]), 7)
        self.assertEqual(matrix_rank, 2)
        self.assertEqual(pivots, [0, 2])
        self.assertEqual(reduced[0, 0], 1)
        self.assertEqual(reduced[1, 0], 0)

    def test_rref_is_idempotent(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            p = int(rng.choice([5, 7, 13]))
            rows, cols = rng.integers(1, 41, size=2)
            matrix = rng.integers(0, p, size=(rows, cols))
            if rows > 1 and rng.random() < 0.5:
                matrix[1:] = np.outer(rng.integers(0, p, size=rows - 1), matrix[0]) % p
            reduced, matrix_rank, pivots = rref(matrix, p)
            again, again_rank, again_pivots = rref(reduced, p)
            self.assertTrue(np.array_equal(again, reduced))
            self.assertEqual((again_rank, again_pivots), (matrix_rank, pivots))
            self.assertEqual(matrix_rank, rank(matrix.T, p))

    def test_kernel_basis(self):
        matrix = np.array([[1, 1, 0], [0, 1, 1]])
        kernel = kernel_basis(matrix, 5)
        self.assertEqual(kernel.dim, 1)
        self.assertFalse(np.any(matmul_mod(matrix, kernel.basis.T, 5)))

    def test_rank_nullity_on_random_matrices(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            p = int(rng.choice([5, 7, 13]))
            rows, cols = rng.integers(1, 41, size=2)
            matrix = rng.integers(0, p, size=(rows, cols))
            if rng.random() < 0.3:
                matrix[-1] = (matrix[0] * 2) % p
            kernel = kernel_basis(matrix, p)
            self.assertEqual(rank(matrix, p) + kernel.dim, cols)
            self.assertEqual(rank(matrix, p), rank(matrix.T, p))
            if kernel.dim:
                self.assertFalse(np.any(matmul_mod(matrix, kernel.basis.T, p)))

    def test_solve(self):
        matrix = np.array([[1, 2], [0, 1]])
        solution = solve(matrix, np.array([4, 3]), 7)
        self.assertTrue(np.array_equal(matmul_mod(matrix, solution, 7), [4, 3]))
        with self.assertRaises(DimensionMismatch):
            solve(np.array([[1, 1], [1, 1]]), np.array([0, 1]), 5)

    def test_cohomology_at(self):
        # 0 -> k -> k^2 -> k -> 0 with d_in = (1, 0)^T and d_out = (0, 1)
        d_in = np.array([[1], [0]])
        d_out = np.array([[0, 1]])
        dim, representatives = cohomology_at(d_in, d_out, 5)
        self.assertEqual(dim, 0)
        dim, representatives = cohomology_at(np.zeros((2, 1), dtype=np.int64), d_out, 5)
        self.assertEqual(dim, 1)
        self.assertTrue(np.array_equal(representatives, [[1, 0]]))

    def test_cohomology_at_rejects_non_complex(self):
        with self.assertRaises(NotAComplex):
            cohomology_at(np.array([[1], [0]]), np.array([[1, 0]]), 5)


class TestSubspace(TestCase):

    def setUp(self):
        self.space = Subspace.span(np.array([[1, 1, 0], [2, 2, 0], [0, 1, 1]]), 3, 5)

    def test_span(self):
        self.assertEqual(self.space.dim, 2)
        self.assertTrue(self.space.contains(np.array([1, 2, 1])))
        self.assertFalse(self.space.contains(np.array([1, 0, 0])))

    def test_coordinates(self):
        vector = (3 * self.space.basis[0] + 4 * self.space.basis[1]) % 5
        self.assertTrue(np.array_equal(self.space.coordinates(vector), [3, 4]))
        with self.assertRaises(DimensionMismatch):
            self.space.coordinates(np.array([1, 0, 0]))
        with self.assertRaises(DimensionMismatch):
            self.space.contains(np.array([1, 0]))

    def test_class_equal_and_sum(self):
        self.assertTrue(self.space.class_equal(np.array([1, 1, 0]), np.array([0, 4, 4])))
        total = self.space.sum(Subspace.span(np.array([[1, 0, 0]]), 3, 5))
        self.assertEqual(total.dim, 3)
        self.assertEqual(Subspace.zero(3, 5).dim, 0)
        self.assertEqual(Subspace.full(3, 5).dim, 3)

    def test_module_level_helpers(self):
        self.assertTrue(membership(np.array([0, 3, 3]), self.space))
        self.assertFalse(membership(np.array([0, 0, 1]), self.space))
        self.assertFalse(class_equal(np.array([1, 0, 0]), np.array([0, 0, 0]), self.space))
