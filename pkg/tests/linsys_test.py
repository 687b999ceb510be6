from fractions import Fraction
import unittest

from src.linsys import (
    EchelonBasis,
    LinearSystemError,
    LinSystem,
    SolveStatus,
    expansion_entry,
    expansion_matrix,
    fraction_free_echelon,
    graded_lex_key,
    matrix_rank,
    pinned_values,
    solve_exact,
)

family_support = [(1, 1), (0, 3), (3, 0), (3, 1), (4, 0)]


class TestExpansion(unittest.TestCase):
    def test_entry(self):
        self.assertEqual(expansion_entry(1, 3, 1), 1)
        self.assertEqual(expansion_entry(1, 3, 2), -3)
        self.assertEqual(expansion_entry(1, 3, 4), -1)
        self.assertEqual(expansion_entry(1, 3, 0), 0)
        self.assertEqual(expansion_entry(1, 3, 5), 0)

    def test_graded_lex(self):
        pairs = sorted([(0, 3), (3, 0), (1, 1), (0, 1)], key=graded_lex_key)
        self.assertEqual(pairs, [(0, 1), (1, 1), (3, 0), (0, 3)])

    def test_matrix(self):
        system = expansion_matrix([(0, 1), (1, 0)], 1)
        self.assertEqual(system.columns, ((1, 0), (0, 1)))
        self.assertEqual(system.matrix, ((0, 1), (1, -1)))
        self.assertEqual(system.rhs, (1, 0))
        self.assertEqual((system.rows, system.cols), (2, 2))

    def test_padded_rows(self):
        system = expansion_matrix([(1, 0), (0, 1)], 3)
        self.assertEqual(system.rows, 4)
        self.assertEqual(system.matrix[3], (0, 0))

    def test_invalid(self):
        self.assertRaises(
            LinearSystemError, lambda: expansion_matrix([(1, 0), (1, 0)], 1)
        )
        self.assertRaises(
            LinearSystemError, lambda: expansion_matrix([(2, 1)], 2)
        )
        self.assertRaises(
            LinearSystemError, lambda: LinSystem([[1, 2], [3]], [0, 0])
        )
        self.assertRaises(LinearSystemError, lambda: LinSystem([[1]], [0, 0]))

    def test_residual_and_head(self):
        system = expansion_matrix([(1, 1), (3, 0), (0, 3)], 3)
        self.assertEqual(system.residual([3, 1, 1]), (0, 0, 0, 0))
        self.assertEqual(system.residual([0, 0, 1]), (0, -3, 3, -1))
        head = system.head(2)
        self.assertEqual(head.rows, 2)
        self.assertEqual(head.columns, system.columns)
        self.assertRaises(LinearSystemError, lambda: system.residual([1]))

    def test_empty_head(self):
        system = expansion_matrix([(1, 1), (3, 0), (0, 3)], 3)
        empty = system.head(0)
        self.assertEqual((empty.rows, empty.cols), (0, 3))
        self.assertEqual(empty.columns, system.columns)
        self.assertEqual(empty.residual([1, 2, 3]), ())
        self.assertEqual(pinned_values(empty), dict())
        self.assertEqual(LinSystem([], []).cols, 0)


class TestSolveExact(unittest.TestCase):
    def test_sharp(self):
        system = expansion_matrix([(3, 0), (1, 1), (0, 3)], 3)
        result = solve_exact(system)
        self.assertEqual(result.status, SolveStatus.UNIQUE)
        self.assertEqual(system.columns, ((1, 1), (3, 0), (0, 3)))
        self.assertEqual(result.solution, (3, 1, 1))
        self.assertEqual(result.rank, 3)
        self.assertEqual(result.nullity, 0)

    def test_binomial(self):
        support = [(i, 3 - i) for i in range(4)]
        result = solve_exact(expansion_matrix(support, 3))
        self.assertEqual(result.status, SolveStatus.UNIQUE)
        self.assertEqual(result.solution, (1, 3, 3, 1))

    def test_underdetermined(self):
        system = expansion_matrix(family_support, 4)
        result = solve_exact(system)
        self.assertEqual(result.status, SolveStatus.UNDERDETERMINED)
        self.assertEqual(result.rank, 4)
        self.assertEqual(result.nullity, 1)
        self.assertFalse(any(system.residual(result.solution)))
        zero = LinSystem(system.matrix, [0] * system.rows)
        self.assertFalse(any(zero.residual(result.nullspace[0])))

    def test_inconsistent(self):
        result = solve_exact(expansion_matrix([(1, 0)], 1))
        self.assertEqual(result.status, SolveStatus.INCONSISTENT)
        self.assertIsNone(result.solution)

    def test_rational(self):
        system = LinSystem([[2, 0], [0, "3/2"]], [1, 1])
        result = solve_exact(system)
        self.assertEqual(result.solution, (Fraction(1, 2), Fraction(2, 3)))

    def test_rank(self):
        self.assertEqual(matrix_rank([[1, 2], [2, 4]]), 1)
        self.assertEqual(matrix_rank([[1, 0], [0, 1], [1, 1]]), 2)
        self.assertEqual(matrix_rank([]), 0)

    def test_fraction_free(self):
        rows = [[2, 1], [4, 3]]
        echelon, pivots = fraction_free_echelon(rows, 2)
        self.assertEqual(pivots, [0, 1])
        # last pivot is the determinant
        self.assertEqual(echelon[1], [0, 2])
        self.assertEqual(rows, [[2, 1], [4, 3]])


class TestPinnedValues(unittest.TestCase):
    def test_partially_pinned(self):
        system = LinSystem([[1, 0, 0], [0, 1, 1]], [2, 3])
        self.assertEqual(pinned_values(system), {0: 2})

    def test_inconsistent(self):
        self.assertIsNone(pinned_values(LinSystem([[1], [1]], [1, 2])))

    def test_prefix_rows(self):
        # rows t^0 and t^1 leave (2,0) free
        system = expansion_matrix([(0, 1), (1, 1), (2, 0)], 2).head(2)
        self.assertEqual(system.columns, ((0, 1), (2, 0), (1, 1)))
        self.assertEqual(pinned_values(system), {0: 1, 2: 1})


class TestEchelonBasis(unittest.TestCase):
    def test_extension(self):
        basis = EchelonBasis().extended([1, 0, 0])
        self.assertEqual(len(basis), 1)
        self.assertIsNone(basis.extended([2, 0, 0]))
        wider = basis.extended([1, 1, 0])
        self.assertEqual(len(wider), 2)
        self.assertEqual(len(basis), 1)
        self.assertIsNone(wider.extended([3, -1, 0]))
        self.assertEqual(len(wider.extended([0, 0, 5])), 3)

    def test_zero_vector(self):
        self.assertIsNone(EchelonBasis().extended([0, 0]))
