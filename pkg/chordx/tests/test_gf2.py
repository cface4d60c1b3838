'''
Test cases for matrices over GF(2).
'''
from unittest import TestCase

import numpy as np

from chordx.gf2 import GF2Matrix, kernel_basis, rank, reduce, solve


def _random(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.integers(0, 2, size=(rows, cols), dtype=np.uint8)


class TestGF2Matrix(TestCase):
    '''
    Tests for the packed matrix type.
    '''

    def test_dense_conversion(self):
        '''
        Test packing and unpacking across word boundaries.
        '''
        rng = np.random.default_rng(1)
        for cols in (1, 63, 64, 65, 130):
            dense = _random(rng, 5, cols)
            m = GF2Matrix.from_dense(dense)
            self.assertEqual(m.shape, (5, cols))
            self.assertEqual(m.words.shape, (5, (cols + 63) // 64))
            np.testing.assert_array_equal(m.to_dense(), dense)

    def test_entries_modulo_two(self):
        '''
        Test that entries are reduced modulo 2.
        '''
        m = GF2Matrix.from_dense([[2, 3], [5, -1]])
        np.testing.assert_array_equal(m.to_dense(), [[0, 1], [1, 1]])

    def test_empty(self):
        '''
        Test matrices without rows or columns.
        '''
        m = GF2Matrix.from_dense([], 4)
        self.assertEqual(m.shape, (0, 4))
        self.assertEqual(rank(m), 0)
        self.assertEqual(len(kernel_basis(m)), 4)
        z = GF2Matrix.zeros(3, 0)
        self.assertEqual(z.shape, (3, 0))
        self.assertEqual(kernel_basis(z), [])

    def test_immutable(self):
        '''
        Test that the packed words cannot be modified.
        '''
        m = GF2Matrix.identity(3)
        with self.assertRaises(ValueError):
            m.words[0, 0] = 0

    def test_transpose_submatrix(self):
        '''
        Test transposition and submatrices.
        '''
        m = GF2Matrix.from_dense([[1, 0, 1], [0, 1, 1]])
        np.testing.assert_array_equal(m.transpose().to_dense(), [[1, 0], [0, 1], [1, 1]])
        np.testing.assert_array_equal(m.submatrix([1], [0, 2]).to_dense(), [[0, 1]])
        self.assertEqual(m.submatrix(cols=[]).shape, (2, 0))

    def test_dot(self):
        '''
        Test matrix-vector products.
        '''
        m = GF2Matrix.from_dense([[1, 1, 0], [0, 1, 1]])
        np.testing.assert_array_equal(m.dot([1, 1, 1]), [0, 0])
        np.testing.assert_array_equal(m.dot([1, 0, 0]), [1, 0])
        self.assertRaises(ValueError, m.dot, [1, 0])

    def test_equality_dump(self):
        '''
        Test equality, hashing, and the text dump.
        '''
        a = GF2Matrix.from_dense([[1, 0], [1, 1]])
        b = GF2Matrix.from_dense([[1, 0], [1, 1]])
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertNotEqual(a, GF2Matrix.identity(2))
        self.assertEqual(a.dump(), '10\n11')
        self.assertEqual(repr(a), 'GF2Matrix(2x2)')


class TestElimination(TestCase):
    '''
    Tests for rank, null spaces, and linear systems.
    '''

    def test_reduce(self):
        '''
        Test the reduced row echelon form.
        '''
        words, pivots = reduce(GF2Matrix.from_dense([[0, 1, 1], [0, 1, 1], [1, 0, 1]]))
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(words.shape[0], 2)

    def test_rank_identity(self):
        '''
        Test the rank of identities and zero matrices.
        '''
        self.assertEqual(rank(GF2Matrix.identity(70)), 70)
        self.assertEqual(rank(GF2Matrix.zeros(5, 5)), 0)

    def test_rank_nullity(self):
        '''
        Test rank plus nullity on random matrices and that kernel vectors are
        annihilated.
        '''
        rng = np.random.default_rng(7)
        for rows, cols in ((3, 5), (10, 10), (20, 70), (70, 20)):
            m = GF2Matrix.from_dense(_random(rng, rows, cols))
            basis = kernel_basis(m)
            self.assertEqual(rank(m) + len(basis), cols)
            for vec in basis:
                self.assertFalse(m.dot(vec).any())
            if basis:
                self.assertEqual(rank(GF2Matrix.from_dense(np.array(basis))), len(basis))

    def test_rank_transpose(self):
        '''
        Test that row and column rank coincide.
        '''
        rng = np.random.default_rng(3)
        m = GF2Matrix.from_dense(_random(rng, 12, 80))
        self.assertEqual(rank(m), rank(m.transpose()))

    def test_solve(self):
        '''
        Test solvable and unsolvable systems.
        '''
        m = GF2Matrix.from_dense([[1, 1, 0], [0, 1, 1]])
        x = solve(m, [1, 0])
        self.assertIsNotNone(x)
        np.testing.assert_array_equal(m.dot(x), [1, 0])
        self.assertIsNone(solve(GF2Matrix.from_dense([[1, 1], [1, 1]]), [1, 0]))
        self.assertRaises(ValueError, solve, m, [1])

    def test_solve_random(self):
        '''
        Test that right-hand sides in the column space are solved.
        '''
        rng = np.random.default_rng(11)
        for _ in range(20):
            m = GF2Matrix.from_dense(_random(rng, 15, 9))
            rhs = m.dot(rng.integers(0, 2, 9))
            x = solve(m, rhs)
            self.assertIsNotNone(x)
            np.testing.assert_array_equal(m.dot(x), rhs)
